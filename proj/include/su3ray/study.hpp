#pragma once

// Studies along rays of representations: assemble an operator at weight
// k*lambda for a range of k, rescale it, diagonalize, and summarize its
// nearest-neighbour statistics.

#include <cstdint>
#include <string>
#include <vector>

#include "su3ray/expr.hpp"
#include "su3ray/root_system.hpp"
#include "su3ray/scaling.hpp"
#include "su3ray/sparse_matrix.hpp"
#include "su3ray/spectral.hpp"

namespace su3ray {

inline constexpr std::uint64_t kDefaultDimCap = 5000;
/// Scaled spacings below this count as "at zero".
inline constexpr double kZeroAtomThreshold = 1e-9;

struct StudyConfig {
  HighestWeight base{1, 1};
  int k_min = 1;
  int k_max = 1;
  Expr op;
  ScalingScheme scaling = ScalingScheme::none();
  double bin_width = 0.1;
  std::uint64_t dim_cap = kDefaultDimCap;
  double distinct_tol = kDefaultDistinctTol;
};

/// Throws ConfigError for an empty or non-positive k range, a trivial base
/// weight, or when weyl_dim(k_max * base) exceeds dim_cap.
void validate(const StudyConfig& cfg);

struct RayRow {
  int k = 0;
  std::int64_t scale = 1;
  std::uint64_t dim = 0;
  std::size_t distinct_eigenvalues = 0;
  double distinct_ratio = 0.0;
  double ks_to_dirac = 0.0;
  double mass_at_zero = 0.0;
  /// Mass of the atoms away from zero; mass_at_zero + positive_mass = (N-1)/N.
  double positive_mass = 0.0;
  double op_norm = 0.0;
  double wall_time_ms = 0.0;
};

/// One row per k in [k_min, k_max], in order of k.
std::vector<RayRow> ray_study(const StudyConfig& cfg);

struct RescalingRow {
  int k = 0;
  ScalingScheme scheme;
  std::int64_t scale = 1;
  /// d_KS between the spacing measures of the rescaled full operator and of
  /// its rescaled linear part.
  double ks_full_vs_linear = 0.0;
  double norm_full = 0.0;
  double norm_linear = 0.0;
  double norm_higher = 0.0;
};

/// For each k and each scheme, compares the rescaled operator with its
/// rescaled degree-1 part. Rows are ordered by k, then by scheme order.
/// Throws ConfigError if the operator has no linear part.
std::vector<RescalingRow> rescaling_study(const StudyConfig& cfg, const std::vector<ScalingScheme>& schemes);

struct SparsityReport {
  HighestWeight weight;
  std::uint64_t dim = 0;
  std::size_t nnz = 0;
  std::size_t max_nnz_per_column = 0;
  Rational max_abs_entry;
  /// max(l1,l2)^2, the entry bound quoted for the Lipkin matrix.
  std::int64_t quoted_entry_bound = 0;
};

SparsityReport sparsity_report(const SparseMatrix& m, const HighestWeight& lambda);

struct LipkinResult {
  HighestWeight weight;
  Rational a;
  Rational b;
  ScalingScheme scaling;
  std::int64_t scale = 1;
  Spectrum spectrum;
  SpacingMeasure nn;
  Histogram hist;
  SparsityReport sparsity;
};

struct LipkinOptions {
  double bin_width = 0.1;
  double max_s = 4.0;
  /// Ray step: the operator is assembled at k*lambda and rescaled by s_k.
  int k = 1;
  ScalingScheme scaling = ScalingScheme::none();
  std::uint64_t dim_cap = kDefaultDimCap;
};

/// Assembles a*T3 + b*sum S(i,j)^2, diagonalizes it and bins its spacing
/// distribution. The sparsity report describes the unscaled matrix.
LipkinResult lipkin_run(const HighestWeight& lambda, const Rational& a, const Rational& b,
                        const LipkinOptions& opts = {});

struct NormRow {
  int k;
  double op_norm;
};

struct NormGrowth {
  std::vector<NormRow> rows;
  /// Least-squares fit op_norm ~ slope * k + intercept.
  double slope = 0.0;
  double intercept = 0.0;
};

/// Spectral radius of rho_k(op) for k = 1..k_max. op must be homogeneous of
/// degree 1 (or zero); throws ConfigError otherwise.
NormGrowth norm_growth_study(const HighestWeight& lambda, const Expr& op, int k_max,
                             std::uint64_t dim_cap = kDefaultDimCap);

struct CommutatorRow {
  int k;
  double norm;
};

/// Spectral radius of rho_k(r_k(xi1*xi2 - xi2*xi1)) with s_k = k.
/// Both operators must be homogeneous of degree 1.
std::vector<CommutatorRow> commutativity_study(const HighestWeight& lambda, const Expr& xi1,
                                               const Expr& xi2, int k_max,
                                               std::uint64_t dim_cap = kDefaultDimCap);

bool is_homogeneous(const Expr& e, int degree);

}  // namespace su3ray
