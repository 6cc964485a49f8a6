// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--expected-fail N]...
// Exits non-zero when a criterion fails that was not listed as expected.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/second_order_table.hpp"
#include "su3ray/root_system.hpp"
#include "su3ray/spectral.hpp"
#include "su3ray/study.hpp"
#include "su3ray/su3_rep.hpp"

using namespace su3ray;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

Expr gen(Generator g) { return Expr::generator(g); }

Expr sum_of_squares() {
  Expr e;
  for (Generator g : kRootGenerators) e = e + gen(g) * gen(g);
  return e;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Outcome basis_dimension() {
  Outcome o;
  for (int l1 = 0; l1 <= 12; ++l1)
    for (int l2 = 0; l2 <= 12; ++l2) {
      const HighestWeight w(l1, l2);
      const auto closed = static_cast<std::uint64_t>((l1 + 1) * (l2 + 1) * (l1 + l2 + 2) / 2);
      const std::uint64_t n = basis(w).size();
      o.require(n == weyl_dim(w) && n == closed, "mismatch at " + w.to_string());
    }
  const std::uint64_t d88 = basis(HighestWeight(8, 8)).size();
  o.require(d88 == 729, "(8,8) has " + std::to_string(d88) + " basis monomials");
  o.detail = o.pass ? "169 weights agree; (8,8) -> 729" : o.detail;
  return o;
}

Outcome action_table() {
  Outcome o;
  std::size_t compared = 0;
  for (int l1 = 0; l1 <= 6; ++l1)
    for (int l2 = 0; l2 <= 6; ++l2) {
      const Representation rep{HighestWeight(l1, l2)};
      const std::size_t n = rep.dim();
      for (Generator g : kRootGenerators) {
        const auto [i, j] = root_indices(g);
        const SparseMatrix m = rep.matrix_of(gen(g) * gen(g));
        const auto dense = oracle::square_matrix(i, j, l1, l2);
        bool equal = dense.size() == n * n;
        for (std::size_t c = 0; c < n && equal; ++c)
          for (std::size_t r = 0; r < n && equal; ++r) equal = m.at(r, c) == Rational(dense[c * n + r]);
        compared += n * n;
        o.require(equal, std::string(name(g)) + "^2 differs at " + rep.weight().to_string());
      }
    }
  if (o.pass) o.detail = std::to_string(compared) + " entries identical";
  return o;
}

Outcome sparsity() {
  Outcome o;
  const Expr sq = sum_of_squares();
  std::size_t worst = 0, worst_single = 0;
  for (int l1 = 0; l1 <= 12; ++l1)
    for (int l2 = 0; l2 <= 12; ++l2) {
      const Representation rep{HighestWeight(l1, l2)};
      worst = std::max(worst, rep.matrix_of(sq).max_nnz_per_column());
      for (Generator g : {Generator::S12, Generator::S21})
        worst_single = std::max(worst_single, rep.matrix_of(gen(g) * gen(g)).max_nnz_per_column());
    }
  o.require(worst <= 26, "sum of squares has a column with " + std::to_string(worst) + " nonzeros");
  o.require(worst_single <= 3, "S12^2 or S21^2 has a column with " + std::to_string(worst_single) + " nonzeros");
  if (o.pass) o.detail = "max nnz/column " + std::to_string(worst) + " (<= 26), S12^2/S21^2 " + std::to_string(worst_single) + " (<= 3)";
  return o;
}

StudyConfig t3_ray(HighestWeight base, int k_max) {
  StudyConfig cfg;
  cfg.base = base;
  cfg.k_min = 1;
  cfg.k_max = k_max;
  cfg.op = gen(Generator::T3);
  return cfg;
}

Outcome dirac_limit() {
  Outcome o;
  const auto rows = ray_study(t3_ray(HighestWeight(1, 1), 12));
  for (const auto& r : rows) {
    const auto k = static_cast<std::uint64_t>(r.k);
    const std::string at = " at k=" + std::to_string(r.k);
    o.require(r.distinct_eigenvalues == 4 * k + 1, "distinct count" + at);
    o.require(r.dim == (k + 1) * (k + 1) * (k + 1), "dimension" + at);
    o.require(r.distinct_ratio <= ratio_bound(HighestWeight(1, 1), r.k).to_double(), "ratio bound" + at);
  }
  for (std::size_t i = 2; i < rows.size(); ++i)
    o.require(rows[i].ks_to_dirac < rows[i - 1].ks_to_dirac, "ks_to_dirac not decreasing at k=" + std::to_string(rows[i].k));
  o.require(rows.back().mass_at_zero >= 0.95, "mass_at_zero(12) = " + fmt(rows.back().mass_at_zero));
  if (o.pass) {
    o.detail = "mass_at_zero(12) = " + fmt(rows.back().mass_at_zero) + ", ks_to_dirac(12) = " + fmt(rows.back().ks_to_dirac);
  }
  return o;
}

Outcome border_ray() {
  Outcome o;
  const auto rows = ray_study(t3_ray(HighestWeight(1, 0), 20));
  for (const auto& r : rows) {
    const auto k = static_cast<std::uint64_t>(r.k);
    o.require(r.distinct_eigenvalues == 2 * k + 1, "distinct count at k=" + std::to_string(r.k));
    o.require(r.dim == (k + 1) * (k + 2) / 2, "dimension at k=" + std::to_string(r.k));
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    o.require(rows[i].distinct_ratio < rows[i - 1].distinct_ratio, "ratio not decreasing");
  o.require(rows.back().distinct_ratio < 0.19, "ratio(20) = " + fmt(rows.back().distinct_ratio));
  if (o.pass) o.detail = "ratio(20) = " + fmt(rows.back().distinct_ratio);
  return o;
}

Outcome norm_bound() {
  Outcome o;
  const HighestWeight base(1, 1);
  // c*|lambda| from the k=1 representation: the largest spectral radius over a
  // basis of hermitian combinations of the generators.
  std::vector<Expr> hermitian{gen(Generator::T3), gen(Generator::H2)};
  for (auto [g, h] : {std::pair{Generator::S12, Generator::S21}, {Generator::S13, Generator::S31}, {Generator::S23, Generator::S32}}) {
    hermitian.push_back(gen(g) + gen(h));
    hermitian.push_back(gen(g) - gen(h));
  }
  double c_lambda = 0;
  for (const auto& xi : hermitian) c_lambda = std::max(c_lambda, spectral_radius(matrix_of(xi, base)));

  const Expr lipkin = lipkin_hamiltonian(Rational(1), Rational(1));
  double worst_margin = 1e300;
  for (int k = 1; k <= 10; ++k) {
    double bound = 0;
    for (const auto& [word, coeff] : lipkin.terms()) {
      const double a = std::hypot(coeff.re.to_double(), coeff.im.to_double());
      bound += a * std::pow(c_lambda * k, static_cast<double>(word.size()));
    }
    const double radius = spectral_radius(matrix_of(lipkin, ray_weight(base, k)));
    o.require(radius <= bound, "k=" + std::to_string(k) + ": radius " + fmt(radius) + " > bound " + fmt(bound));
    worst_margin = std::min(worst_margin, bound / radius);
  }
  const NormGrowth t3 = norm_growth_study(base, gen(Generator::T3), 10);
  for (const auto& r : t3.rows) o.require(r.op_norm == 2.0 * r.k, "|rho_k(T3)| != 2k at k=" + std::to_string(r.k));
  if (o.pass) o.detail = "c|lambda| = " + fmt(c_lambda) + ", min bound/radius = " + fmt(worst_margin) + "; |rho_k(T3)| = 2k";
  return o;
}

Outcome reality() {
  Outcome o;
  double worst = 0;
  std::size_t spectra = 0;
  for (int l1 = 0; l1 <= 8; ++l1)
    for (int l2 = 0; l2 <= 8; ++l2) {
      const Representation rep{HighestWeight(l1, l2)};
      const SparseMatrix t3 = rep.matrix_of(gen(Generator::T3));
      const SparseMatrix sq = rep.matrix_of(sum_of_squares());
      for (int a : {-1, 0, 1, 2})
        for (int b : {-1, 0, 1, 2}) {
          const SparseMatrix m = t3 * Rational(a) + sq * Rational(b);
          double imag = 0, radius = 0;
          for (const auto& z : complex_eigenvalues(m)) {
            imag = std::max(imag, std::abs(z.imag()));
            radius = std::max(radius, std::abs(z));
          }
          const double rel = imag / (1 + radius);
          worst = std::max(worst, rel);
          ++spectra;
          o.require(rel <= kRealityTolerance, "imaginary residual " + fmt(rel) + " at " + rep.weight().to_string());
        }
    }
  if (o.pass) o.detail = std::to_string(spectra) + " spectra, max |Im|/(1+radius) = " + fmt(worst);
  return o;
}

Outcome over_scaling() {
  Outcome o;
  StudyConfig cfg;
  cfg.base = HighestWeight(1, 1);
  cfg.k_min = 1;
  cfg.k_max = 8;
  cfg.op = lipkin_hamiltonian(Rational(1), Rational(1));
  const auto rows = rescaling_study(cfg, {ScalingScheme::power(2)});
  const double d2 = rows[1].ks_full_vs_linear, d8 = rows[7].ks_full_vs_linear;
  o.require(d8 < d2, "d_KS(k=8) = " + fmt(d8) + " is not below d_KS(k=2) = " + fmt(d2));
  if (o.pass) o.detail = "d_KS(k=2) = " + fmt(d2) + ", d_KS(k=8) = " + fmt(d8);
  return o;
}

Outcome orbit_homogeneity() {
  Outcome o;
  for (int l1 = 1; l1 <= 3; ++l1)
    for (int l2 = 1; l2 <= 3; ++l2)
      for (int k = 1; k <= 10; ++k) {
        const HighestWeight w(l1, l2);
        o.require(orbit_volume(ray_weight(w, k)) == Rational(k * k * k) * orbit_volume(w),
                  "fails at " + w.to_string() + ", k=" + std::to_string(k));
      }
  if (o.pass) o.detail = "exact for 9 weights x 10 steps";
  return o;
}

Outcome nn_examples() {
  Outcome o;
  auto exact = [](std::initializer_list<int> xs) {
    std::vector<Rational> v;
    for (int x : xs) v.emplace_back(x);
    return nn_distribution(v);
  };
  using A = Atom<Rational>;
  o.require(exact({5, 5, 5}) == ExactSpacingMeasure({A{Rational(0), Rational(2, 3)}}), "{5,5,5}");
  o.require(exact({0, 1, 2, 3}) == ExactSpacingMeasure({A{Rational(4, 3), Rational(3, 4)}}), "{0,1,2,3}");
  o.require(exact({0, 0, 1}) == ExactSpacingMeasure({A{Rational(0), Rational(1, 3)}, A{Rational(3), Rational(1, 3)}}),
            "{0,0,1}");
  const ExactSpacingMeasure mu = exact({0, 0, 1});
  o.require(ks_distance(mu, mu) == Rational(0), "d(mu,mu)");
  o.require(ks_distance(dirac_measure<Rational>(), exact({5, 5, 5})) == Rational(1, 3), "d(delta0, 2/3 delta0)");
  o.require(ks_distance(ExactSpacingMeasure({A{Rational(1), Rational(1)}}), ExactSpacingMeasure({A{Rational(2), Rational(1)}})) ==
                Rational(1),
            "d(delta1, delta2)");

  std::mt19937 rng(1);
  std::normal_distribution<double> normal;
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial;
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(normal(rng) * (1 + trial));
    const SpacingMeasure m = nn_distribution(Spectrum::from_values(xs));
    worst = std::max(worst, std::abs(m.first_moment() - 1.0));
  }
  o.require(worst <= 1e-12, "mean scaled spacing off by " + fmt(worst));
  if (o.pass) o.detail = "worked examples exact; max |mean spacing - 1| = " + fmt(worst);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_fail;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expected-fail" && i + 1 < argc) {
      expected_fail.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--expected-fail N]...\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "basis size equals Weyl dimension for l1,l2 <= 12", 5, basis_dimension},
      {2, "S(i,j)^2 by composition equals the second-order table, l <= 6", 0, action_table},
      {3, "at most 26 nonzeros per column of sum S(i,j)^2, l <= 12", 30, sparsity},
      {4, "Dirac limit on the T3 ray through (1,1), k <= 12", 60, dirac_limit},
      {5, "border ray through (1,0), k <= 20", 5, border_ray},
      {6, "Lipkin norm bound on the ray through (1,1), k <= 10", 0, norm_bound},
      {7, "real Lipkin spectra, a,b in {-1,0,1,2}, l <= 8", 0, reality},
      {8, "over-scaling s_k = k^2: d_KS(k=8) < d_KS(k=2)", 0, over_scaling},
      {9, "orbit volume is homogeneous of degree 3", 0, orbit_homogeneity},
      {10, "nearest-neighbour worked examples", 0, nn_examples},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail = "took " + fmt(secs) + " s, limit " + fmt(c.time_limit_s) + " s";
    }
    const bool tolerated = !o.pass && expected_fail.count(c.id) > 0;
    if (!o.pass && !tolerated) ++unexpected;
    std::printf("%s %2d  %-64s %7.2fs  %s\n", o.pass ? "PASS" : (tolerated ? "FAIL (expected)" : "FAIL"), c.id, c.title,
                secs, o.detail.c_str());
  }
  return unexpected == 0 ? 0 : 1;
}
