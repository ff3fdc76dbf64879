#include "ptdarboux/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptdarboux/closed_form.hpp"
#include "ptdarboux/errors.hpp"
#include "ptdarboux/quantum_models.hpp"
#include "ptdarboux/report_io.hpp"
#include "ptdarboux/verify.hpp"

namespace ptd::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

struct RunConfig {
  double alpha = 1.0;
  int n_max = 10;
  int quad_order = 64;
  int panels = 32;
  int grid_points = 4000;
  std::vector<std::string> tol_overrides;
  Format format = Format::csv;
  std::string output;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Tolerances resolve_tolerances(const RunConfig& cfg) {
  Tolerances tol;
  for (const auto& item : cfg.tol_overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--tol expects NAME=VALUE, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("--tol " + name + ": '" + text + "' is not a number");
    }
    try {
      tol.set(name, value);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  }
  return tol;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha)) throw UsageError("--alpha must be > 0");
  if (cfg.n_max < 0) throw UsageError("--n-max must be >= 0");
  if (cfg.quad_order < 1) throw UsageError("--quad-order must be >= 1");
  if (cfg.panels < 1) throw UsageError("--panels must be >= 1");
  if (cfg.grid_points < 100) throw UsageError("--grid-points must be >= 100");
}

// Writes to --output if given, else to `out`.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output path '" + cfg.output + "'");
  file << text;
  file.flush();
  if (!file) throw UsageError("failed writing output path '" + cfg.output + "'");
}

Json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteConfig suite;
  suite.alpha = cfg.alpha;
  suite.n_max = static_cast<unsigned>(cfg.n_max);
  suite.quad_order = static_cast<unsigned>(cfg.quad_order);
  suite.panels = static_cast<unsigned>(cfg.panels);
  suite.grid_points = static_cast<unsigned>(cfg.grid_points);
  suite.tolerances = resolve_tolerances(cfg);
  const auto report = run_full_suite(suite);
  emit(cfg, cfg.format == Format::json ? report_json(report) : report_csv(report), out);
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (!c.passed) {
      ++failed;
      err << "FAILED " << c.name << ": computed " << format_number(c.computed) << ", reference "
          << format_number(c.reference) << "\n";
    }
  }
  err << (report.checks.size() - failed) << "/" << report.checks.size() << " checks passed\n";
  return report.overall ? kPass : kCheckFailed;
}

int cmd_tabulate(const RunConfig& cfg, int n, int points, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be >= 0");
  if (points < 2) throw UsageError("--points must be >= 2");
  const WellConfig well(cfg.alpha);
  const PTParams pt(2.0, 2.0);
  const TrigEigenfunction chi(n + 2, cfg.alpha);
  const double amplitude = normalization_A(static_cast<unsigned>(n), cfg.alpha);

  std::ostringstream csv;
  csv << "x,chi,psi,difference\n";
  Json rows = Json::array();
  for (int i = 0; i < points; ++i) {
    // last row pinned to the right endpoint, not (points-1)/(points-1) * length
    const double x = i == points - 1 ? well.length() : well.length() * i / (points - 1);
    const double c = chi(x);
    const double p = pt_eigen_hypergeom(well, pt, n, amplitude, x);
    csv << format_number(x) << ',' << format_number(c) << ',' << format_number(p) << ','
        << format_number(c - p) << '\n';
    Json row;
    row["x"] = json_number(x);
    row["chi"] = json_number(c);
    row["psi"] = json_number(p);
    row["difference"] = json_number(c - p);
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::json) {
    Json doc;
    doc["n"] = n;
    doc["alpha"] = cfg.alpha;
    doc["rows"] = std::move(rows);
    emit(cfg, doc.dump(2) + "\n", out);
  } else {
    emit(cfg, csv.str(), out);
  }
  return kPass;
}

int cmd_identity(const RunConfig& cfg, const std::string& which, int index, std::ostream& out,
                 std::ostream& err) {
  if (index < 0) throw UsageError("identity index must be >= 0");
  const Tolerances tol = resolve_tolerances(cfg);
  const auto idx = static_cast<unsigned>(index);
  CheckResult check;
  try {
    if (which == "base") {
      check = check_identity_base(idx, cfg.alpha, tol.identity);
    } else if (which == "even") {
      check = check_identity_even(idx, cfg.alpha, tol.identity);
    } else {
      check = check_identity_odd(idx, cfg.alpha, tol.identity);
    }
  } catch (const DegenerateError& e) {
    err << "identity: " << e.what() << "\n";
    return kCheckFailed;
  }
  if (cfg.format == Format::json) {
    Json doc;
    doc["which"] = which;
    doc["index"] = index;
    doc["deviation"] = json_number(check.computed);
    doc["tolerance"] = check.tolerance;
    doc["passed"] = check.passed;
    emit(cfg, doc.dump(2) + "\n", out);
  } else {
    std::ostringstream csv;
    csv << "which,index,deviation,tolerance,passed\n"
        << which << ',' << index << ',' << format_number(check.computed) << ','
        << format_number(check.tolerance) << ',' << (check.passed ? "true" : "false") << '\n';
    emit(cfg, csv.str(), out);
  }
  return check.passed ? kPass : kCheckFailed;
}

int cmd_spectrum(const RunConfig& cfg, int count, std::ostream& out) {
  if (count < 0) throw UsageError("--count must be >= 0");
  const Tolerances tol = resolve_tolerances(cfg);
  std::vector<double> values;
  try {
    values = fd_spectrum(cfg.alpha, static_cast<unsigned>(cfg.grid_points),
                         static_cast<unsigned>(count));
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  const WellConfig well(cfg.alpha);
  const PTParams pt(2.0, 2.0);
  bool ok = true;
  std::ostringstream csv;
  csv << "n,computed,exact,rel_err\n";
  Json rows = Json::array();
  for (std::size_t n = 0; n < values.size(); ++n) {
    const double exact = pt_energy(well, pt, static_cast<int>(n));
    const double rel = std::abs(values[n] - exact) / exact;
    ok = ok && rel <= tol.spectrum;
    csv << n << ',' << format_number(values[n]) << ',' << format_number(exact) << ','
        << format_number(rel) << '\n';
    Json row;
    row["n"] = n;
    row["computed"] = json_number(values[n]);
    row["exact"] = exact;
    row["rel_err"] = json_number(rel);
    rows.push_back(std::move(row));
  }
  if (cfg.format == Format::json) {
    Json doc;
    doc["alpha"] = cfg.alpha;
    doc["grid_points"] = cfg.grid_points;
    doc["rows"] = std::move(rows);
    emit(cfg, doc.dump(2) + "\n", out);
  } else {
    emit(cfg, csv.str(), out);
  }
  return ok ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Darboux-transformed Poschl-Teller (kappa = lambda = 2) eigenproblem tools"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--alpha", cfg.alpha, "inverse length scale; interval (0, pi/(2 alpha))");
  app.add_option("--n-max,--k-max", cfg.n_max, "largest n (k = n + 2) covered by verify");
  app.add_option("--quad-order", cfg.quad_order, "Gauss-Legendre points per panel");
  app.add_option("--panels", cfg.panels, "composite quadrature panels");
  app.add_option("--grid-points", cfg.grid_points, "finite-difference grid size");
  app.add_option("--tol", cfg.tol_overrides, "NAME=VALUE tolerance override (repeatable)")
      ->take_all();
  std::string format_name = "csv";
  app.add_option("--format", format_name, "output format")
      ->transform(CLI::IsMember({"csv", "json"}, CLI::ignore_case).description(""))
      ->type_name("csv|json");
  app.add_option("--output", cfg.output, "write the result to PATH instead of stdout");

  auto* verify = app.add_subcommand("verify", "run the full verification suite");

  int tab_n = 0;
  int tab_points = 11;
  auto* tabulate = app.add_subcommand("tabulate", "tabulate chi~_{n+2} and A_n psi_n side by side");
  tabulate->add_option("--n", tab_n, "state index n >= 0");
  tabulate->add_option("--points", tab_points, "samples on [0, pi/(2 alpha)]");

  std::string which;
  int id_index = 0;
  auto* identity = app.add_subcommand("identity", "two-sided check of a 2F1 <-> trig identity");
  identity->add_option("--which", which, "base | even | odd")
      ->required()
      ->check(CLI::IsMember({"base", "even", "odd"}));
  identity->add_option("--n,--m", id_index, "n for base, m for even/odd");

  int count = 3;
  auto* spectrum = app.add_subcommand("spectrum", "finite-difference eigenvalues vs exact");
  spectrum->add_option("--count", count, "number of lowest eigenvalues (<= 10)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  cfg.format = format_name == "json" ? Format::json : Format::csv;

  try {
    validate(cfg);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (tabulate->parsed()) return cmd_tabulate(cfg, tab_n, tab_points, out);
    if (identity->parsed()) return cmd_identity(cfg, which, id_index, out, err);
    if (spectrum->parsed()) return cmd_spectrum(cfg, count, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace ptd::cli
