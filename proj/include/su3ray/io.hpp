#pragma once

// Flat-file formats. Floating values are always written with 17 significant
// digits so that identical inputs give byte-identical files.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "su3ray/spectral.hpp"
#include "su3ray/sparse_matrix.hpp"
#include "su3ray/study.hpp"
#include "su3ray/su3_rep.hpp"

namespace su3ray::io {

std::string format_double(double v);

/// JSON array of exponent vectors in basis order.
nlohmann::json basis_to_json(const std::vector<Monomial>& basis);

/// {"dim": N, "triplets": [[row, col, value], ...]}, 0-based, column-major
/// order. Integral entries are written as JSON integers.
nlohmann::json matrix_to_json(const SparseMatrix& m);

/// MatrixMarket "coordinate real general", 1-based indices.
void write_matrix_market(std::ostream& os, const SparseMatrix& m);

/// One eigenvalue per line, no header.
void write_spectrum_csv(std::ostream& os, const Spectrum& s);
/// Header "location,mass".
void write_measure_csv(std::ostream& os, const SpacingMeasure& mu);
/// Header "bin_center,density".
void write_histogram_csv(std::ostream& os, const Histogram& h);
/// Header "s,poisson,wigner", sampled at the histogram bin centers.
void write_reference_curves_csv(std::ostream& os, const Histogram& h);

/// wall_time_ms is only written when with_timing is set, since it is the one
/// non-deterministic column.
void write_ray_csv(std::ostream& os, const std::vector<RayRow>& rows, bool with_timing = false);
void write_rescaling_csv(std::ostream& os, const std::vector<RescalingRow>& rows);
void write_norm_csv(std::ostream& os, const NormGrowth& growth);
void write_commutator_csv(std::ostream& os, const std::vector<CommutatorRow>& rows);

nlohmann::json sparsity_to_json(const SparsityReport& r);

}  // namespace su3ray::io
