#include "su3ray/study.hpp"

#include <algorithm>
#include <chrono>

#include "su3ray/errors.hpp"
#include "su3ray/su3_rep.hpp"

namespace su3ray {

namespace {

void check_dim(const HighestWeight& lambda, int k_max, std::uint64_t cap) {
  const std::uint64_t d = weyl_dim(ray_weight(lambda, k_max));
  if (d > cap) {
    throw ConfigError("representation " + ray_weight(lambda, k_max).to_string() + " has dimension " +
                      std::to_string(d) + ", above the cap of " + std::to_string(cap));
  }
}

void check_k_range(int k_min, int k_max) {
  if (k_min < 1) throw ConfigError("k range must start at k >= 1");
  if (k_max < k_min) throw ConfigError("k range is empty");
}

}  // namespace

bool is_homogeneous(const Expr& e, int degree) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [degree](const auto& t) { return static_cast<int>(t.first.size()) == degree; });
}

void validate(const StudyConfig& cfg) {
  check_k_range(cfg.k_min, cfg.k_max);
  if (cfg.base.is_zero()) {
    throw ConfigError("the trivial weight (0,0) spans a degenerate ray; choose a non-zero base weight");
  }
  if (!has_real_coefficients(cfg.op)) throw ConfigError("operator must have real coefficients");
  if (!(cfg.distinct_tol >= 0.0)) throw ConfigError("distinct tolerance must be >= 0");
  check_dim(cfg.base, cfg.k_max, cfg.dim_cap);
}

std::vector<RayRow> ray_study(const StudyConfig& cfg) {
  validate(cfg);
  std::vector<RayRow> rows;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const auto start = std::chrono::steady_clock::now();
    RayRow row;
    row.k = k;
    const HighestWeight w = ray_weight(cfg.base, k);
    row.scale = scaling_sequence(cfg.scaling, cfg.base, k);
    const SparseMatrix m = matrix_of(rescale(cfg.op, row.scale), w);
    const Spectrum s = eigenvalues(m);
    row.dim = s.size();
    row.distinct_eigenvalues = distinct_count(s, cfg.distinct_tol);
    row.distinct_ratio = static_cast<double>(row.distinct_eigenvalues) / static_cast<double>(row.dim);
    row.op_norm = s.spectral_radius();
    if (s.size() >= 2) {
      const SpacingMeasure nn = nn_distribution(s, cfg.distinct_tol);
      row.ks_to_dirac = ks_distance(nn, dirac_measure());
      row.mass_at_zero = nn.mass_below(kZeroAtomThreshold);
      row.positive_mass = nn.total_mass() - row.mass_at_zero;
    } else {
      row.ks_to_dirac = 1.0;
    }
    row.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

std::vector<RescalingRow> rescaling_study(const StudyConfig& cfg, const std::vector<ScalingScheme>& schemes) {
  validate(cfg);
  if (schemes.empty()) throw ConfigError("rescaling study needs at least one scaling scheme");
  const Expr linear = cfg.op.homogeneous_part(1);
  if (linear.is_zero()) {
    throw ConfigError("operator has no linear part; the over-scaling comparison needs one");
  }
  const Expr higher = cfg.op - linear;

  std::vector<RescalingRow> rows;
  for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
    const Representation rep(ray_weight(cfg.base, k));
    if (rep.dim() < 2) throw ConfigError("rescaling study needs representations of dimension >= 2");
    for (const auto& scheme : schemes) {
      RescalingRow row;
      row.k = k;
      row.scheme = scheme;
      row.scale = scaling_sequence(scheme, cfg.base, k);
      const SparseMatrix full = rep.matrix_of(rescale(cfg.op, row.scale));
      const SparseMatrix lin = rep.matrix_of(rescale(linear, row.scale));
      const Spectrum s_full = eigenvalues(full);
      const Spectrum s_lin = eigenvalues(lin);
      row.ks_full_vs_linear =
          ks_distance(nn_distribution(s_full, cfg.distinct_tol), nn_distribution(s_lin, cfg.distinct_tol));
      row.norm_full = s_full.spectral_radius();
      row.norm_linear = s_lin.spectral_radius();
      row.norm_higher = spectral_radius(rep.matrix_of(rescale(higher, row.scale)));
      rows.push_back(row);
    }
  }
  return rows;
}

SparsityReport sparsity_report(const SparseMatrix& m, const HighestWeight& lambda) {
  SparsityReport r;
  r.weight = lambda;
  r.dim = m.dim();
  r.nnz = m.nnz();
  r.max_nnz_per_column = m.max_nnz_per_column();
  r.max_abs_entry = m.max_abs_entry();
  const std::int64_t top = std::max(lambda.l1(), lambda.l2());
  r.quoted_entry_bound = top * top;
  return r;
}

LipkinResult lipkin_run(const HighestWeight& lambda, const Rational& a, const Rational& b,
                        const LipkinOptions& opts) {
  if (opts.k < 1) throw ConfigError("lipkin: k must be >= 1");
  check_dim(lambda, opts.k, opts.dim_cap);
  LipkinResult r;
  r.weight = ray_weight(lambda, opts.k);
  r.a = a;
  r.b = b;
  r.scaling = opts.scaling;
  r.scale = scaling_sequence(opts.scaling, lambda, opts.k);
  const Representation rep(r.weight);
  const Expr op = lipkin_hamiltonian(a, b);
  const SparseMatrix raw = rep.matrix_of(op);
  r.sparsity = sparsity_report(raw, r.weight);
  r.spectrum = eigenvalues(r.scale == 1 ? raw : rep.matrix_of(rescale(op, r.scale)));
  if (r.spectrum.size() < 2) throw ConfigError("lipkin: the trivial representation has no spacings");
  r.nn = nn_distribution(r.spectrum);
  r.hist = histogram(r.nn, opts.bin_width, opts.max_s);
  return r;
}

NormGrowth norm_growth_study(const HighestWeight& lambda, const Expr& op, int k_max, std::uint64_t dim_cap) {
  check_k_range(1, k_max);
  if (!is_homogeneous(op, 1)) throw ConfigError("norm study needs a degree-1 operator");
  if (!has_real_coefficients(op)) throw ConfigError("operator must have real coefficients");
  check_dim(lambda, k_max, dim_cap);
  NormGrowth g;
  for (int k = 1; k <= k_max; ++k) {
    g.rows.push_back({k, spectral_radius(matrix_of(op, ray_weight(lambda, k)))});
  }
  const double n = static_cast<double>(g.rows.size());
  double sk = 0, sn = 0, skk = 0, skn = 0;
  for (const auto& r : g.rows) {
    sk += r.k;
    sn += r.op_norm;
    skk += static_cast<double>(r.k) * r.k;
    skn += r.k * r.op_norm;
  }
  const double denom = n * skk - sk * sk;
  g.slope = denom == 0.0 ? 0.0 : (n * skn - sk * sn) / denom;
  g.intercept = (sn - g.slope * sk) / n;
  return g;
}

std::vector<CommutatorRow> commutativity_study(const HighestWeight& lambda, const Expr& xi1, const Expr& xi2,
                                               int k_max, std::uint64_t dim_cap) {
  check_k_range(1, k_max);
  if (!is_homogeneous(xi1, 1) || !is_homogeneous(xi2, 1)) {
    throw ConfigError("commutativity study needs two degree-1 operators");
  }
  if (!has_real_coefficients(xi1) || !has_real_coefficients(xi2)) {
    throw ConfigError("operators must have real coefficients");
  }
  check_dim(lambda, k_max, dim_cap);
  const Expr commutator = xi1 * xi2 - xi2 * xi1;
  std::vector<CommutatorRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    const std::int64_t s = scaling_sequence(ScalingScheme::parameter(), lambda, k);
    rows.push_back({k, spectral_radius(matrix_of(rescale(commutator, s), ray_weight(lambda, k)))});
  }
  return rows;
}

}  // namespace su3ray
