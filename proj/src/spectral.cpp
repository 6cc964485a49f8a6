#include "su3ray/spectral.hpp"

#include <Eigen/Dense>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "su3ray/errors.hpp"

namespace su3ray {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Spectrum Spectrum::from_values(std::vector<double> values, double imag_residual) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("spectrum contains a non-finite value");
  }
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.values_ = std::move(values);
  s.imag_residual_ = imag_residual;
  return s;
}

double Spectrum::spectral_radius() const {
  if (values_.empty()) return 0.0;
  return std::max(std::abs(values_.front()), std::abs(values_.back()));
}

std::vector<std::complex<double>> complex_eigenvalues(const SparseMatrix& m) {
  const std::size_t n = m.dim();
  // Permuting to block-diagonal form leaves the spectrum unchanged, so each
  // connected component of the pattern is solved on its own.
  DisjointSets sets(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& e : m.column(col)) sets.unite(e.row, col);
  }
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[sets.find(i)].push_back(i);

  std::vector<std::complex<double>> out;
  out.reserve(n);
  std::vector<std::ptrdiff_t> local(n, -1);
  for (const auto& members : blocks) {
    if (members.empty()) continue;
    if (members.size() == 1) {
      out.emplace_back(m.at(members[0], members[0]).to_double(), 0.0);
      continue;
    }
    const auto size = static_cast<Eigen::Index>(members.size());
    for (Eigen::Index i = 0; i < size; ++i) local[members[static_cast<std::size_t>(i)]] = i;
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
      for (const auto& e : m.column(members[static_cast<std::size_t>(j)])) {
        dense(local[e.row], j) = e.value.to_double();
      }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("eigensolver did not converge on a block of size " + std::to_string(size));
    }
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back(ev[i]);
  }
  return out;
}

Spectrum eigenvalues(const SparseMatrix& m) {
  if (m.dim() == 0) throw std::invalid_argument("eigenvalues: empty matrix");
  const auto ev = complex_eigenvalues(m);
  std::vector<double> re;
  re.reserve(ev.size());
  double residual = 0.0;
  double radius = 0.0;
  for (const auto& z : ev) {
    re.push_back(z.real());
    residual = std::max(residual, std::abs(z.imag()));
    radius = std::max(radius, std::abs(z));
  }
  if (residual > kRealityTolerance * (1.0 + radius)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "spectrum is not real: max |Im| = %.3e exceeds %.1e * (1 + %.6g)", residual,
                  kRealityTolerance, radius);
    throw NumericalError(buf);
  }
  return Spectrum::from_values(std::move(re), residual);
}

double spectral_radius(const SparseMatrix& m) {
  double r = 0.0;
  for (const auto& z : complex_eigenvalues(m)) r = std::max(r, std::abs(z));
  return r;
}

SpacingMeasure nn_distribution(const Spectrum& s, double zero_gap_tol) {
  const auto& x = s.values();
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("nn_distribution needs at least two eigenvalues");
  const double nd = static_cast<double>(n);
  const double zero_band = zero_gap_tol * (1.0 + s.spectral_radius());

  std::vector<double> gaps(n - 1);
  bool all_zero = true;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    double g = x[j + 1] - x[j];
    if (g <= zero_band) g = 0.0;
    all_zero = all_zero && g == 0.0;
    gaps[j] = g;
  }
  if (all_zero) return SpacingMeasure({{0.0, (nd - 1.0) / nd}});

  const double range = std::accumulate(gaps.begin(), gaps.end(), 0.0);
  std::vector<double> scaled(gaps.size());
  for (std::size_t j = 0; j < gaps.size(); ++j) scaled[j] = gaps[j] * nd / range;
  std::sort(scaled.begin(), scaled.end());

  std::vector<Atom<double>> atoms;
  double anchor = scaled.front();
  std::size_t count = 0;
  for (double v : scaled) {
    if (v - anchor > kAtomMergeTol) {
      atoms.push_back({anchor, static_cast<double>(count) / nd});
      anchor = v;
      count = 0;
    }
    ++count;
  }
  atoms.push_back({anchor, static_cast<double>(count) / nd});
  return SpacingMeasure(std::move(atoms));
}

ExactSpacingMeasure nn_distribution(std::vector<Rational> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("nn_distribution needs at least two eigenvalues");
  std::sort(values.begin(), values.end());
  const Rational nr(static_cast<std::int64_t>(n));
  if (values.front() == values.back()) {
    return ExactSpacingMeasure({{Rational(0), (nr - Rational(1)) / nr}});
  }
  const Rational scale = nr / (values.back() - values.front());
  const Rational unit = Rational(1) / nr;
  std::vector<Atom<Rational>> atoms;
  atoms.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) atoms.push_back({(values[j + 1] - values[j]) * scale, unit});
  return ExactSpacingMeasure(std::move(atoms));
}

std::size_t distinct_count(const Spectrum& s, double tol) {
  if (tol < 0.0) throw std::invalid_argument("distinct_count: tol must be >= 0");
  const auto& x = s.values();
  if (x.empty()) return 0;
  const double band = tol * (1.0 + s.spectral_radius());
  std::size_t clusters = 1;
  for (std::size_t j = 1; j < x.size(); ++j) {
    if (x[j] - x[j - 1] > band) ++clusters;
  }
  return clusters;
}

Histogram histogram(const SpacingMeasure& mu, double bin_width, double max_s) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw std::invalid_argument("histogram: bin width must be positive");
  }
  if (!(max_s >= 0.0) || !std::isfinite(max_s)) throw std::invalid_argument("histogram: max_s must be >= 0");
  const auto nbins = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(max_s / bin_width - 1e-9)));
  Histogram h;
  h.bin_width = bin_width;
  std::vector<double> mass(nbins, 0.0);
  for (const auto& a : mu.atoms()) {
    double pos = a.location / bin_width;
    const double nearest = std::round(pos);
    if (std::abs(pos - nearest) <= 1e-9 * std::max(1.0, nearest)) pos = nearest;
    const double upper = std::ceil(pos);
    const auto index = upper <= 0.0 ? std::size_t{0} : static_cast<std::size_t>(upper) - 1;
    if (index < nbins) mass[index] += a.mass;
    else h.overflow_mass += a.mass;
  }
  h.bins.reserve(nbins);
  for (std::size_t i = 0; i < nbins; ++i) {
    h.bins.push_back({(static_cast<double>(i) + 0.5) * bin_width, mass[i] / bin_width});
  }
  return h;
}

double poisson_density(double s) { return s < 0.0 ? 0.0 : std::exp(-s); }

double wigner_surmise_density(double s) {
  constexpr double pi = std::numbers::pi;
  return s < 0.0 ? 0.0 : 0.5 * pi * s * std::exp(-0.25 * pi * s * s);
}

}  // namespace su3ray
