#include "su3ray/io.hpp"

#include <cstdio>
#include <ostream>

namespace su3ray::io {

namespace {

nlohmann::json rational_to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.to_double();
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json basis_to_json(const std::vector<Monomial>& basis) {
  auto out = nlohmann::json::array();
  for (const auto& m : basis) out.push_back(m.exps);
  return out;
}

nlohmann::json matrix_to_json(const SparseMatrix& m) {
  auto triplets = nlohmann::json::array();
  for (std::size_t col = 0; col < m.dim(); ++col) {
    for (const auto& e : m.column(col)) triplets.push_back({e.row, col, rational_to_json(e.value)});
  }
  return {{"dim", m.dim()}, {"triplets", std::move(triplets)}};
}

void write_matrix_market(std::ostream& os, const SparseMatrix& m) {
  os << "%%MatrixMarket matrix coordinate real general\n";
  os << m.dim() << " " << m.dim() << " " << m.nnz() << "\n";
  for (std::size_t col = 0; col < m.dim(); ++col) {
    for (const auto& e : m.column(col)) {
      os << e.row + 1 << " " << col + 1 << " " << format_double(e.value.to_double()) << "\n";
    }
  }
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
  for (double v : s.values()) os << format_double(v) << "\n";
}

void write_measure_csv(std::ostream& os, const SpacingMeasure& mu) {
  os << "location,mass\n";
  for (const auto& a : mu.atoms()) os << format_double(a.location) << "," << format_double(a.mass) << "\n";
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
  os << "bin_center,density\n";
  for (const auto& b : h.bins) os << format_double(b.center) << "," << format_double(b.density) << "\n";
}

void write_reference_curves_csv(std::ostream& os, const Histogram& h) {
  os << "s,poisson,wigner\n";
  for (const auto& b : h.bins) {
    os << format_double(b.center) << "," << format_double(poisson_density(b.center)) << ","
       << format_double(wigner_surmise_density(b.center)) << "\n";
  }
}

void write_ray_csv(std::ostream& os, const std::vector<RayRow>& rows, bool with_timing) {
  os << "k,scale,dim,distinct_eigenvalues,distinct_ratio,ks_to_dirac,mass_at_zero,op_norm";
  if (with_timing) os << ",wall_time_ms";
  os << "\n";
  for (const auto& r : rows) {
    os << r.k << "," << r.scale << "," << r.dim << "," << r.distinct_eigenvalues << ","
       << format_double(r.distinct_ratio) << "," << format_double(r.ks_to_dirac) << ","
       << format_double(r.mass_at_zero) << "," << format_double(r.op_norm);
    if (with_timing) os << "," << format_double(r.wall_time_ms);
    os << "\n";
  }
}

void write_rescaling_csv(std::ostream& os, const std::vector<RescalingRow>& rows) {
  os << "k,scheme,scale,ks_full_vs_linear,norm_full,norm_linear,norm_higher\n";
  for (const auto& r : rows) {
    os << r.k << "," << r.scheme.to_string() << "," << r.scale << "," << format_double(r.ks_full_vs_linear)
       << "," << format_double(r.norm_full) << "," << format_double(r.norm_linear) << ","
       << format_double(r.norm_higher) << "\n";
  }
}

void write_norm_csv(std::ostream& os, const NormGrowth& growth) {
  os << "k,op_norm\n";
  for (const auto& r : growth.rows) os << r.k << "," << format_double(r.op_norm) << "\n";
}

void write_commutator_csv(std::ostream& os, const std::vector<CommutatorRow>& rows) {
  os << "k,commutator_norm\n";
  for (const auto& r : rows) os << r.k << "," << format_double(r.norm) << "\n";
}

nlohmann::json sparsity_to_json(const SparsityReport& r) {
  return {{"weight", {r.weight.l1(), r.weight.l2()}},
          {"dim", r.dim},
          {"nnz", r.nnz},
          {"max_nnz_per_column", r.max_nnz_per_column},
          {"max_abs_entry", rational_to_json(r.max_abs_entry)},
          {"quoted_entry_bound", r.quoted_entry_bound},
          {"within_quoted_entry_bound", r.max_abs_entry <= Rational(r.quoted_entry_bound)}};
}

}  // namespace su3ray::io
