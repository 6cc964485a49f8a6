// su3ray: command-line front end for the representation, spectrum and ray
// study library. Every subcommand accepts --config FILE with TOML-style
// key = value lines named after its long flags (kmax = 12, weight = "1,1");
// flags given on the command line take precedence.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "su3ray/errors.hpp"
#include "su3ray/io.hpp"
#include "su3ray/study.hpp"
#include "su3ray/su3_rep.hpp"

namespace fs = std::filesystem;
using namespace su3ray;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path + " for writing");
  write(out);
  if (!out) throw ConfigError("failed writing " + path);
}

// Plain keys in a config file belong to the subcommand being run, so that a
// file can mirror the flags of that subcommand without a [section] header.
class SubcommandConfig : public CLI::ConfigTOML {
 public:
  std::string subcommand;

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigTOML::from_config(input);
    if (!subcommand.empty()) {
      for (auto& item : items)
        if (item.parents.empty()) item.parents = {subcommand};
    }
    return items;
  }
};

void add_weight(CLI::App* cmd, std::string& weight) {
  cmd->add_option("--weight,-w", weight, "highest weight as L1,L2")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(3) representations, enveloping-algebra operators and nearest-neighbour spacing studies"};
  app.require_subcommand(1);

  std::string weight, expr = "T3", out, format = "json", scaling = "none", out_dir;
  std::string a_text = "1", b_text = "1", xi1_text = "T3", xi2_text = "S12 + S21";
  std::vector<std::string> scalings{"parameter", "power:2"};
  int k_min = 1, k_max = 1, lipkin_k = 1;
  double bin_width = 0.1, max_s = 4.0, distinct_tol = kDefaultDistinctTol;
  std::uint64_t dim_cap = kDefaultDimCap;
  bool timing = false;

  auto* dim_cmd = app.add_subcommand("dim", "dimension of an irreducible representation");
  add_weight(dim_cmd, weight);

  auto* basis_cmd = app.add_subcommand("basis", "canonical monomial basis as JSON");
  add_weight(basis_cmd, weight);
  basis_cmd->add_option("--out,-o", out, "output file (default stdout)");

  auto* matrix_cmd = app.add_subcommand("matrix", "sparse matrix of an operator");
  matrix_cmd->add_option("--expr,-e", expr, "operator expression")->required();
  add_weight(matrix_cmd, weight);
  matrix_cmd->add_option("--format,-f", format, "json or mm (MatrixMarket)")
      ->check(CLI::IsMember({"json", "mm"}));
  matrix_cmd->add_option("--out,-o", out, "output file (default stdout)");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "sorted real eigenvalues, one per line");
  spectrum_cmd->add_option("--expr,-e", expr, "operator expression")->required();
  add_weight(spectrum_cmd, weight);
  spectrum_cmd->add_option("--out,-o", out, "output file (default stdout)");

  auto* dagger_cmd = app.add_subcommand("dagger", "print the adjoint of an expression and whether it is hermitian");
  dagger_cmd->add_option("--expr,-e", expr, "operator expression")->required();

  auto* ray_cmd = app.add_subcommand("ray-study", "spectral statistics along the ray k*weight");
  add_weight(ray_cmd, weight);
  ray_cmd->add_option("--expr,-e", expr, "operator expression (default T3)");
  ray_cmd->add_option("--kmin", k_min, "first ray step")->check(CLI::PositiveNumber);
  ray_cmd->add_option("--kmax", k_max, "last ray step")->required()->check(CLI::PositiveNumber);
  ray_cmd->add_option("--scaling", scaling, "none, parameter, dimension or power:P");
  ray_cmd->add_option("--distinct-tol", distinct_tol, "relative gap below which eigenvalues coincide");
  ray_cmd->add_option("--dim-cap", dim_cap, "largest dimension allowed");
  ray_cmd->add_flag("--timing", timing, "add a wall_time_ms column");
  ray_cmd->add_option("--out,-o", out, "CSV output file (default stdout)");

  auto* resc_cmd = app.add_subcommand("rescaling-study", "rescaled operator against its rescaled linear part");
  add_weight(resc_cmd, weight);
  resc_cmd->add_option("--expr,-e", expr, "operator expression with a non-zero linear part")->required();
  resc_cmd->add_option("--kmin", k_min, "first ray step")->check(CLI::PositiveNumber);
  resc_cmd->add_option("--kmax", k_max, "last ray step")->required()->check(CLI::PositiveNumber);
  resc_cmd->add_option("--scalings", scalings, "comma-separated scaling schemes")->delimiter(',');
  resc_cmd->add_option("--distinct-tol", distinct_tol, "relative gap below which eigenvalues coincide");
  resc_cmd->add_option("--dim-cap", dim_cap, "largest dimension allowed");
  resc_cmd->add_option("--out,-o", out, "CSV output file (default stdout)");

  auto* lipkin_cmd = app.add_subcommand("lipkin", "Lipkin Hamiltonian a*T3 + b*sum S(i,j)^2: spectrum, spacings, histogram");
  add_weight(lipkin_cmd, weight);
  lipkin_cmd->add_option("--a", a_text, "coefficient of T3 (default 1)");
  lipkin_cmd->add_option("--b", b_text, "coefficient of the squares (default 1)");
  lipkin_cmd->add_option("--bins", bin_width, "histogram bin width")->check(CLI::PositiveNumber);
  lipkin_cmd->add_option("--max-s", max_s, "histogram range [0, max-s]")->check(CLI::NonNegativeNumber);
  lipkin_cmd->add_option("--k", lipkin_k, "ray step: assemble at k*weight")->check(CLI::PositiveNumber);
  lipkin_cmd->add_option("--scaling", scaling, "rescaling applied at step k");
  lipkin_cmd->add_option("--dim-cap", dim_cap, "largest dimension allowed");
  lipkin_cmd->add_option("--out-dir,-o", out_dir, "directory for the output files")->required();

  auto* norm_cmd = app.add_subcommand("norm-study", "spectral radius of a degree-1 operator along a ray");
  add_weight(norm_cmd, weight);
  norm_cmd->add_option("--expr,-e", expr, "degree-1 operator (default T3)");
  norm_cmd->add_option("--kmax", k_max, "last ray step")->required()->check(CLI::PositiveNumber);
  norm_cmd->add_option("--dim-cap", dim_cap, "largest dimension allowed");
  norm_cmd->add_option("--out,-o", out, "CSV output file (default stdout)");

  auto* comm_cmd = app.add_subcommand("commutativity-study", "norm of the rescaled commutator [xi1, xi2] along a ray");
  add_weight(comm_cmd, weight);
  comm_cmd->add_option("--xi1", xi1_text, "first degree-1 operator (default T3)");
  comm_cmd->add_option("--xi2", xi2_text, "second degree-1 operator (default S12 + S21)");
  comm_cmd->add_option("--kmax", k_max, "last ray step")->required()->check(CLI::PositiveNumber);
  comm_cmd->add_option("--dim-cap", dim_cap, "largest dimension allowed");
  comm_cmd->add_option("--out,-o", out, "CSV output file (default stdout)");

  auto config = std::make_shared<SubcommandConfig>();
  for (auto* cmd : app.get_subcommands({})) {
    cmd->fallthrough();
    cmd->allow_config_extras(CLI::config_extras_mode::error);
  }
  for (int i = 1; i < argc && config->subcommand.empty(); ++i) {
    for (auto* cmd : app.get_subcommands({}))
      if (argv[i] == cmd->get_name()) config->subcommand = cmd->get_name();
  }
  app.config_formatter(config);
  app.set_config("--config", "", "read options from a TOML-style key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*dim_cmd) {
      std::cout << weyl_dim(HighestWeight::parse(weight)) << "\n";
    } else if (*basis_cmd) {
      const auto b = basis(HighestWeight::parse(weight));
      emit(out, [&](std::ostream& os) { os << io::basis_to_json(b).dump() << "\n"; });
    } else if (*matrix_cmd) {
      const SparseMatrix m = matrix_of(parse_expr(expr), HighestWeight::parse(weight));
      emit(out, [&](std::ostream& os) {
        if (format == "mm") io::write_matrix_market(os, m);
        else os << io::matrix_to_json(m).dump() << "\n";
      });
    } else if (*spectrum_cmd) {
      const Spectrum s = eigenvalues(matrix_of(parse_expr(expr), HighestWeight::parse(weight)));
      emit(out, [&](std::ostream& os) { io::write_spectrum_csv(os, s); });
    } else if (*dagger_cmd) {
      const Expr e = parse_expr(expr);
      std::cout << to_string(dagger(e)) << "\n"
                << "hermitian: " << (is_abstract_hermitian(e) ? "true" : "false") << "\n";
    } else if (*ray_cmd) {
      StudyConfig cfg;
      cfg.base = HighestWeight::parse(weight);
      cfg.k_min = k_min;
      cfg.k_max = k_max;
      cfg.op = parse_expr(expr);
      cfg.scaling = ScalingScheme::parse(scaling);
      cfg.dim_cap = dim_cap;
      cfg.distinct_tol = distinct_tol;
      const auto rows = ray_study(cfg);
      emit(out, [&](std::ostream& os) { io::write_ray_csv(os, rows, timing); });
    } else if (*resc_cmd) {
      StudyConfig cfg;
      cfg.base = HighestWeight::parse(weight);
      cfg.k_min = k_min;
      cfg.k_max = k_max;
      cfg.op = parse_expr(expr);
      cfg.dim_cap = dim_cap;
      cfg.distinct_tol = distinct_tol;
      std::vector<ScalingScheme> schemes;
      for (const auto& s : scalings) schemes.push_back(ScalingScheme::parse(s));
      const auto rows = rescaling_study(cfg, schemes);
      emit(out, [&](std::ostream& os) { io::write_rescaling_csv(os, rows); });
    } else if (*lipkin_cmd) {
      LipkinOptions opts;
      opts.bin_width = bin_width;
      opts.max_s = max_s;
      opts.k = lipkin_k;
      opts.scaling = ScalingScheme::parse(scaling);
      opts.dim_cap = dim_cap;
      const LipkinResult r =
          lipkin_run(HighestWeight::parse(weight), Rational::parse(a_text), Rational::parse(b_text), opts);
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) throw ConfigError("cannot create " + out_dir + ": " + ec.message());
      const fs::path dir(out_dir);
      emit((dir / "spectrum.csv").string(), [&](std::ostream& os) { io::write_spectrum_csv(os, r.spectrum); });
      emit((dir / "nn.csv").string(), [&](std::ostream& os) { io::write_measure_csv(os, r.nn); });
      emit((dir / "histogram.csv").string(), [&](std::ostream& os) { io::write_histogram_csv(os, r.hist); });
      emit((dir / "reference_curves.csv").string(), [&](std::ostream& os) { io::write_reference_curves_csv(os, r.hist); });
      emit((dir / "sparsity.json").string(), [&](std::ostream& os) {
        auto j = io::sparsity_to_json(r.sparsity);
        j["a"] = r.a.to_string();
        j["b"] = r.b.to_string();
        j["scaling"] = r.scaling.to_string();
        j["scale"] = r.scale;
        j["histogram_overflow_mass"] = r.hist.overflow_mass;
        os << j.dump(2) << "\n";
      });
      std::cout << "dim " << r.spectrum.size() << ", max nonzeros per column " << r.sparsity.max_nnz_per_column
                << ", max |entry| " << r.sparsity.max_abs_entry.to_string() << "\n";
    } else if (*norm_cmd) {
      const NormGrowth g = norm_growth_study(HighestWeight::parse(weight), parse_expr(expr), k_max, dim_cap);
      emit(out, [&](std::ostream& os) { io::write_norm_csv(os, g); });
      std::cerr << "slope " << io::format_double(g.slope) << ", intercept " << io::format_double(g.intercept) << "\n";
    } else if (*comm_cmd) {
      const auto rows = commutativity_study(HighestWeight::parse(weight), parse_expr(xi1_text), parse_expr(xi2_text),
                                            k_max, dim_cap);
      emit(out, [&](std::ostream& os) { io::write_commutator_csv(os, rows); });
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
