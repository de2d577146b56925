#include "idslab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "idslab/rng.hpp"

namespace idslab {

std::string to_string(Boundary b) {
  return b == Boundary::dirichlet ? "dirichlet" : "periodic";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "dirichlet") return Boundary::dirichlet;
  if (s == "periodic") return Boundary::periodic;
  throw ConfigError("boundary must be 'dirichlet' or 'periodic', got '" + s + "'");
}

std::string to_string(DisorderLaw law) {
  return law == DisorderLaw::uniform ? "uniform" : "truncated_gaussian";
}

DisorderLaw disorder_law_from_string(const std::string& s) {
  if (s == "uniform") return DisorderLaw::uniform;
  if (s == "truncated_gaussian") return DisorderLaw::truncated_gaussian;
  throw ConfigError("law must be 'uniform' or 'truncated_gaussian', got '" + s + "'");
}

long LatticeSpec::n_sites() const {
  long n = 1;
  for (int a = 0; a < dimension; ++a) n *= linear_size;
  return n;
}

void LatticeSpec::validate(long max_sites) const {
  if (dimension < 1 || dimension > 3)
    throw ConfigError("dimension must be 1, 2 or 3");
  if (linear_size < 1) throw ConfigError("linear_size must be >= 1");
  double n = std::pow(static_cast<double>(linear_size), dimension);
  if (n > static_cast<double>(max_sites))
    throw ConfigError("lattice size " + std::to_string(linear_size) + "^" +
                      std::to_string(dimension) + " exceeds the maximum matrix dimension " +
                      std::to_string(max_sites));
}

PeriodicPotential PeriodicPotential::zero(int dimension) {
  PeriodicPotential p;
  p.period.assign(dimension, 1);
  p.values.assign(1, 0.0);
  return p;
}

void PeriodicPotential::validate(int dimension) const {
  if (static_cast<int>(period.size()) != dimension)
    throw ConfigError("background period needs one entry per axis");
  long cells = 1;
  for (int p : period) {
    if (p < 1) throw ConfigError("background period entries must be >= 1");
    cells *= p;
  }
  if (static_cast<long>(values.size()) != cells)
    throw ConfigError("background values must hold " + std::to_string(cells) +
                      " entries (product of the period)");
}

double PeriodicPotential::at(const std::vector<int>& coords) const {
  long idx = 0;
  for (std::size_t a = 0; a < period.size(); ++a) {
    const int c = coords[a] % period[a];
    idx = idx * period[a] + c;
  }
  return values[idx];
}

double PeriodicPotential::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::fabs(v));
  return m;
}

bool PeriodicPotential::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

DisorderSpec DisorderSpec::uniform(double a, double b, std::uint64_t seed) {
  DisorderSpec s;
  s.law = DisorderLaw::uniform;
  s.uniform_a = a;
  s.uniform_b = b;
  s.master_seed = seed;
  return s;
}

DisorderSpec DisorderSpec::truncated_gaussian(double sigma, double cutoff_k, std::uint64_t seed) {
  DisorderSpec s;
  s.law = DisorderLaw::truncated_gaussian;
  s.sigma = sigma;
  s.cutoff_k = cutoff_k;
  s.master_seed = seed;
  return s;
}

void DisorderSpec::validate() const {
  if (law == DisorderLaw::uniform) {
    if (!(uniform_a < uniform_b))
      throw ConfigError("uniform law requires a < b");
  } else {
    if (!(sigma > 0.0)) throw ConfigError("truncated_gaussian requires sigma > 0");
    if (!(cutoff_k > 0.0)) throw ConfigError("truncated_gaussian requires cutoff_k > 0");
  }
}

double DisorderSpec::support_max() const {
  if (law == DisorderLaw::uniform)
    return std::max(std::fabs(uniform_a), std::fabs(uniform_b));
  return cutoff_k * sigma;
}

double DisorderSpec::abs_moment() const {
  if (law == DisorderLaw::uniform) {
    const double a = uniform_a, b = uniform_b;
    if (a >= 0.0) return (a + b) / 2.0;
    if (b <= 0.0) return -(a + b) / 2.0;
    return (a * a + b * b) / (2.0 * (b - a));
  }
  // E|X| for N(0,sigma^2) conditioned on |X| <= k*sigma:
  //   2 sigma (1 - exp(-k^2/2)) / (sqrt(2 pi) erf(k/sqrt(2)))
  const double k = cutoff_k;
  const double mass = std::erf(k / std::sqrt(2.0));
  return 2.0 * sigma * (1.0 - std::exp(-0.5 * k * k)) / (std::sqrt(2.0 * M_PI) * mass);
}

void ModelSpec::validate(long max_sites) const {
  lattice.validate(max_sites);
  if (!background.period.empty()) background.validate(lattice.dimension);
  disorder.validate();
  if (!(lambda >= 0.0)) throw ConfigError("lambda must be >= 0");
}

double ModelSpec::spectral_radius_bound() const {
  const double v0max = background.period.empty() ? 0.0 : background.max_abs();
  return 2.0 * lattice.dimension + v0max + lambda * disorder.support_max();
}

double HamiltonianSample::entry(long i, long j) const {
  if (i == j) return diag[i];
  const long lo = std::min(i, j), hi = std::max(i, j);
  const long off = hi - lo;
  if (off <= bandwidth) {
    for (std::size_t t = 0; t < band_offsets.size(); ++t)
      if (band_offsets[t] == off) return band_values[t][lo];
    return 0.0;
  }
  for (const auto& e : wrap_edges)
    if (e.lo == lo && e.hi == hi) return e.weight;
  return 0.0;
}

void HamiltonianSample::matvec(const double* x, double* y) const {
  for (long i = 0; i < n; ++i) y[i] = diag[i] * x[i];
  for (std::size_t t = 0; t < band_offsets.size(); ++t) {
    const long off = band_offsets[t];
    const std::vector<double>& v = band_values[t];
    for (long i = 0; i + off < n; ++i) {
      y[i + off] += v[i] * x[i];
      y[i] += v[i] * x[i + off];
    }
  }
  for (const auto& e : wrap_edges) {
    y[e.hi] += e.weight * x[e.lo];
    y[e.lo] += e.weight * x[e.hi];
  }
}

namespace {

struct Assembler {
  long n;
  int kb;
  std::vector<double> diag;
  std::vector<int> offsets;
  std::vector<std::vector<double>> bands;
  std::vector<WrapEdge> wraps;

  explicit Assembler(long n_, int kb_) : n(n_), kb(kb_), diag(n_, 0.0) {}

  std::vector<double>& band_for(int off) {
    for (std::size_t t = 0; t < offsets.size(); ++t)
      if (offsets[t] == off) return bands[t];
    offsets.push_back(off);
    bands.emplace_back(n - off, 0.0);
    return bands.back();
  }

  void add_edge(long i, long j, double w) {
    if (i == j) {
      // periodic wrap on an axis of length 1: both directions land on the
      // same site, contributing 2w to the diagonal
      diag[i] += 2.0 * w;
      return;
    }
    const long lo = std::min(i, j), hi = std::max(i, j);
    const long off = hi - lo;
    if (off <= kb) {
      band_for(static_cast<int>(off))[lo] += w;
    } else {
      for (auto& e : wraps) {
        if (e.lo == lo && e.hi == hi) {
          e.weight += w;
          return;
        }
      }
      wraps.push_back({lo, hi, w});
    }
  }
};

void index_to_coords(long idx, int d, int L, std::vector<int>& c) {
  for (int a = d - 1; a >= 0; --a) {
    c[a] = static_cast<int>(idx % L);
    idx /= L;
  }
}

}  // namespace

HamiltonianSample build_h0(const LatticeSpec& lattice, const PeriodicPotential& background,
                           long max_sites) {
  lattice.validate(max_sites);
  const PeriodicPotential bg =
      background.period.empty() ? PeriodicPotential::zero(lattice.dimension) : background;
  bg.validate(lattice.dimension);

  const int d = lattice.dimension;
  const int L = lattice.linear_size;
  const long n = lattice.n_sites();
  long prof = 1;
  for (int a = 0; a < d - 1; ++a) prof *= L;
  const int kb = static_cast<int>(std::min<long>(prof, n - 1));

  Assembler as(n, kb);

  std::vector<int> c(d), cn(d);
  std::vector<long> stride(d);
  stride[d - 1] = 1;
  for (int a = d - 2; a >= 0; --a) stride[a] = stride[a + 1] * L;

  for (long m = 0; m < n; ++m) {
    index_to_coords(m, d, L, c);
    as.diag[m] += bg.at(c);
    for (int a = 0; a < d; ++a) {
      if (c[a] + 1 < L) {
        as.add_edge(m, m + stride[a], 1.0);
      } else if (lattice.boundary == Boundary::periodic) {
        as.add_edge(m, m - static_cast<long>(c[a]) * stride[a], 1.0);
      }
    }
  }

  HamiltonianSample H;
  H.n = n;
  H.bandwidth = kb;
  H.diag = std::move(as.diag);
  H.band_offsets = std::move(as.offsets);
  H.band_values = std::move(as.bands);
  H.wrap_edges = std::move(as.wraps);
  ModelSpec m0;
  m0.lattice = lattice;
  m0.background = bg;
  m0.lambda = 0.0;
  H.scale = m0.spectral_radius_bound();
  return H;
}

std::vector<double> sample_disorder(const DisorderSpec& spec, long n_sites,
                                    long realization_index) {
  spec.validate();
  if (realization_index < 0) throw ConfigError("realization_index must be >= 0");
  rng::Stream stream(spec.master_seed, static_cast<std::uint64_t>(realization_index));
  std::vector<double> out(n_sites);
  if (spec.law == DisorderLaw::uniform) {
    for (long i = 0; i < n_sites; ++i) out[i] = stream.uniform(spec.uniform_a, spec.uniform_b);
  } else {
    for (long i = 0; i < n_sites; ++i) out[i] = stream.truncated_normal(spec.sigma, spec.cutoff_k);
  }
  return out;
}

HamiltonianSample assemble_from_values(const ModelSpec& model, const std::vector<double>& omega,
                                       long realization_index, long max_sites) {
  model.validate(max_sites);
  HamiltonianSample H = build_h0(model.lattice, model.background, max_sites);
  if (static_cast<long>(omega.size()) != H.n)
    throw ConfigError("disorder vector size does not match the lattice volume");
  for (long i = 0; i < H.n; ++i) H.diag[i] += model.lambda * omega[i];
  H.realization_index = realization_index;
  H.disorder_values = omega;
  H.scale = model.spectral_radius_bound();
  return H;
}

HamiltonianSample assemble(const ModelSpec& model, long realization_index, long max_sites) {
  model.validate(max_sites);
  const std::vector<double> omega =
      sample_disorder(model.disorder, model.lattice.n_sites(), realization_index);
  return assemble_from_values(model, omega, realization_index, max_sites);
}

}  // namespace idslab
