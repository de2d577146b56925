#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idslab/errors.hpp"

namespace idslab {

enum class Boundary { dirichlet, periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

inline constexpr long kDefaultMaxSites = 1000000;

// Box Lambda = {0..L-1}^d, row-major site order (axis 0 slowest).
struct LatticeSpec {
  int dimension = 1;
  int linear_size = 1;
  Boundary boundary = Boundary::dirichlet;

  long n_sites() const;
  void validate(long max_sites = kDefaultMaxSites) const;
};

// Z^d-periodic background potential sampled on one period box.
struct PeriodicPotential {
  std::vector<int> period;       // one entry per axis, each >= 1
  std::vector<double> values;    // row-major over the period box

  static PeriodicPotential zero(int dimension);
  void validate(int dimension) const;
  double at(const std::vector<int>& coords) const;
  double max_abs() const;
  bool is_zero() const;
};

enum class DisorderLaw { uniform, truncated_gaussian };

std::string to_string(DisorderLaw law);
DisorderLaw disorder_law_from_string(const std::string& s);

// iid on-site disorder; both laws have bounded support and bounded density.
struct DisorderSpec {
  DisorderLaw law = DisorderLaw::uniform;
  double uniform_a = -1.0;
  double uniform_b = 1.0;
  double sigma = 1.0;
  double cutoff_k = 3.0;
  std::uint64_t master_seed = 0;

  static DisorderSpec uniform(double a, double b, std::uint64_t seed = 0);
  static DisorderSpec truncated_gaussian(double sigma, double cutoff_k, std::uint64_t seed = 0);

  void validate() const;
  double support_max() const;   // max |omega| over the support
  double abs_moment() const;    // E|omega|, closed form
};

struct ModelSpec {
  LatticeSpec lattice;
  PeriodicPotential background;  // empty => zero potential
  DisorderSpec disorder;
  double lambda = 0.0;

  void validate(long max_sites = kDefaultMaxSites) const;
  // Gershgorin bound on |eigenvalue| for every sample of this model:
  // 2d + max|V0| + lambda * support_max.
  double spectral_radius_bound() const;
};

struct WrapEdge {
  long lo = 0;
  long hi = 0;
  double weight = 0.0;
};

// One assembled finite-volume symmetric matrix. The banded part is stored
// once (lower triangle, per off-diagonal offset); slowest-axis periodic
// couplings fall outside the band and are kept as an explicit edge list.
struct HamiltonianSample {
  long n = 0;
  int bandwidth = 0;                              // L^(d-1) profile (1 in d=1)
  std::vector<double> diag;                       // size n
  std::vector<int> band_offsets;                  // ascending, each in [1, bandwidth]
  std::vector<std::vector<double>> band_values;   // band_values[t][i] = A(i+off[t], i)
  std::vector<WrapEdge> wrap_edges;               // lo < hi, hi - lo > bandwidth
  long realization_index = -1;
  std::vector<double> disorder_values;            // empty when lambda = 0
  double scale = 1.0;                             // model spectral_radius_bound

  double entry(long i, long j) const;             // mirrored read
  bool tridiagonal() const { return bandwidth <= 1 && wrap_edges.empty(); }

  // y = A x (used by residual checks and tests)
  void matvec(const double* x, double* y) const;
};

HamiltonianSample build_h0(const LatticeSpec& lattice, const PeriodicPotential& background,
                           long max_sites = kDefaultMaxSites);

// Deterministic given (spec.master_seed, realization_index); values iid.
std::vector<double> sample_disorder(const DisorderSpec& spec, long n_sites,
                                    long realization_index);

HamiltonianSample assemble_from_values(const ModelSpec& model, const std::vector<double>& omega,
                                       long realization_index,
                                       long max_sites = kDefaultMaxSites);

HamiltonianSample assemble(const ModelSpec& model, long realization_index,
                           long max_sites = kDefaultMaxSites);

}  // namespace idslab
