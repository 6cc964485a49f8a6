#pragma once

// Eigenvalues, nearest-neighbour spacing measures and the Kolmogorov-Smirnov
// distance between them.
//
// The spacing measure of a spectrum x_1 <= ... <= x_N is
//   (1/N) sum_{j=1}^{N-1} delta at (N/(x_N - x_1)) * (x_{j+1} - x_j)
// when x_1 != x_N, and ((N-1)/N) delta_0 when all eigenvalues coincide.
// Only the global range is used for normalization; no unfolding is done.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "su3ray/rational.hpp"
#include "su3ray/sparse_matrix.hpp"

namespace su3ray {

/// Relative tolerance on discarded imaginary parts: max|Im| must stay below
/// kRealityTolerance * (1 + spectral radius).
inline constexpr double kRealityTolerance = 1e-8;
/// Default relative gap below which two eigenvalues count as equal.
inline constexpr double kDefaultDistinctTol = 1e-9;
/// Scaled spacings closer than this are merged into one atom.
inline constexpr double kAtomMergeTol = 1e-12;

/// Real eigenvalues, sorted ascending, with multiplicity.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts the values. Throws std::invalid_argument on non-finite input.
  static Spectrum from_values(std::vector<double> values, double imag_residual = 0.0);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double imag_residual() const { return imag_residual_; }
  double spectral_radius() const;

 private:
  std::vector<double> values_;
  double imag_residual_ = 0.0;
};

/// All eigenvalues of a (generally non-symmetric) matrix, computed per
/// connected block of its sparsity pattern with a dense real Schur solver.
/// Throws NumericalError on non-convergence.
std::vector<std::complex<double>> complex_eigenvalues(const SparseMatrix& m);

/// Real spectrum of m. Throws NumericalError if the solver fails or if the
/// largest imaginary part exceeds kRealityTolerance * (1 + spectral radius).
Spectrum eigenvalues(const SparseMatrix& m);

/// max |eigenvalue| over the complex spectrum; 0 for the empty matrix.
double spectral_radius(const SparseMatrix& m);

template <class T>
struct Atom {
  T location;
  T mass;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite discrete measure on [0, inf). Atoms are kept sorted by location,
/// with distinct locations and positive masses.
template <class T>
class BasicSpacingMeasure {
 public:
  BasicSpacingMeasure() = default;

  /// Sorts and merges atoms at identical locations. Throws
  /// std::invalid_argument on negative locations or non-positive masses.
  explicit BasicSpacingMeasure(std::vector<Atom<T>> atoms) {
    for (const auto& a : atoms) {
      if (!(a.location >= T(0)) || !(a.mass > T(0))) {
        throw std::invalid_argument("spacing measure atoms need location >= 0 and mass > 0");
      }
      if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(a.location) || !std::isfinite(a.mass)) {
          throw std::invalid_argument("spacing measure atoms must be finite");
        }
      }
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom<T>& x, const Atom<T>& y) { return x.location < y.location; });
    for (const auto& a : atoms) {
      if (!atoms_.empty() && atoms_.back().location == a.location) atoms_.back().mass += a.mass;
      else atoms_.push_back(a);
    }
  }

  const std::vector<Atom<T>>& atoms() const { return atoms_; }

  T total_mass() const {
    T m(0);
    for (const auto& a : atoms_) m += a.mass;
    return m;
  }

  /// Mass of [0, x].
  T cdf(const T& x) const {
    T m(0);
    for (const auto& a : atoms_) {
      if (a.location > x) break;
      m += a.mass;
    }
    return m;
  }

  /// Mass of atoms with location < threshold.
  T mass_below(const T& threshold) const {
    T m(0);
    for (const auto& a : atoms_) {
      if (!(a.location < threshold)) break;
      m += a.mass;
    }
    return m;
  }

  /// sum of location * mass.
  T first_moment() const {
    T m(0);
    for (const auto& a : atoms_) m += a.location * a.mass;
    return m;
  }

  friend bool operator==(const BasicSpacingMeasure&, const BasicSpacingMeasure&) = default;

 private:
  std::vector<Atom<T>> atoms_;
};

using SpacingMeasure = BasicSpacingMeasure<double>;
using ExactSpacingMeasure = BasicSpacingMeasure<Rational>;

/// Nearest-neighbour distribution of a real spectrum.
///
/// Raw gaps up to zero_gap_tol * (1 + spectral radius) are treated as exact
/// degeneracies (solver round-off on repeated eigenvalues); pass 0 to
/// disable. Scaled spacings within kAtomMergeTol share one atom located at
/// the smallest of them. Throws std::invalid_argument when N < 2.
SpacingMeasure nn_distribution(const Spectrum& s, double zero_gap_tol = kDefaultDistinctTol);

/// Exact nearest-neighbour distribution of a rational spectrum (any order).
ExactSpacingMeasure nn_distribution(std::vector<Rational> values);

/// sup_x |mu[0,x] - nu[0,x]|. Both CDFs are right-continuous step functions,
/// so the supremum is attained at one of the atom locations.
template <class T>
T ks_distance(const BasicSpacingMeasure<T>& mu, const BasicSpacingMeasure<T>& nu) {
  const auto& a = mu.atoms();
  const auto& b = nu.atoms();
  T fa(0), fb(0), best(0);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    T x = i < a.size() ? a[i].location : b[j].location;
    if (i < a.size() && j < b.size() && b[j].location < x) x = b[j].location;
    while (i < a.size() && a[i].location == x) fa += a[i++].mass;
    while (j < b.size() && b[j].location == x) fb += b[j++].mass;
    T diff = fa - fb;
    if (diff < T(0)) diff = -diff;
    if (diff > best) best = diff;
  }
  return best;
}

/// Unit point mass at 0.
template <class T = double>
BasicSpacingMeasure<T> dirac_measure() {
  return BasicSpacingMeasure<T>({Atom<T>{T(0), T(1)}});
}

/// Number of eigenvalue clusters; a new cluster starts whenever the gap to
/// the previous eigenvalue exceeds tol * (1 + spectral radius).
std::size_t distinct_count(const Spectrum& s, double tol = kDefaultDistinctTol);

struct HistogramBin {
  double center;
  double density;
};

struct Histogram {
  double bin_width = 0.0;
  std::vector<HistogramBin> bins;
  /// Mass located beyond the last bin.
  double overflow_mass = 0.0;
};

/// Bins (0,w], (w,2w], ... covering [0, max_s]; the first bin also holds
/// location 0, so atoms on an edge fall into the lower bin. Density is mass
/// divided by the bin width. Throws std::invalid_argument unless
/// bin_width > 0 and max_s >= 0.
Histogram histogram(const SpacingMeasure& mu, double bin_width, double max_s);

/// Reference spacing densities for comparison plots.
double poisson_density(double s);
double wigner_surmise_density(double s);

}  // namespace su3ray
