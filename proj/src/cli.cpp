#include "bergtoep/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bergtoep/checks.hpp"
#include "bergtoep/rng.hpp"

namespace bergtoep {

namespace {

const std::vector<std::string> kCommands = {"gram",       "toeplitz",  "spectrum",
                                            "commutator", "intertwine", "kernel-fourier",
                                            "l1",         "check"};

std::string cell(double v) { return format_g17(v); }

ReportFormat report_format(const RunConfig& cfg) {
  if (cfg.format == "csv") return ReportFormat::csv;
  if (cfg.format == "json") return ReportFormat::json;
  throw ConfigError("format: expected csv or json, got '" + cfg.format + "'");
}

void emit(const RunConfig& cfg, const Report& rep) {
  if (cfg.output.empty())
    write_report(std::cout, rep, report_format(cfg));
  else
    write_report_file(cfg.output, rep, report_format(cfg));
}

std::vector<double> xi_grid_of(const RunConfig& cfg) {
  std::vector<double> xi;
  const int nodes = std::max(cfg.xi_nodes, 1);
  for (int i = 0; i < nodes; ++i)
    xi.push_back(nodes == 1 ? 0.0 : -cfg.xi_max + 2.0 * cfg.xi_max * i / (nodes - 1));
  return xi;
}

std::string freq_cell(const Freq& f, int i) {
  if (i < static_cast<int>(f.k.size())) return std::to_string(f.k[i]);
  return cell(f.xi);
}

SymbolExpr require_symbol(const RunConfig& cfg, std::size_t idx) {
  if (cfg.symbols.size() <= idx)
    throw ConfigError("command '" + cfg.command + "' needs " + std::to_string(idx + 1) +
                      " symbol file(s); got " + std::to_string(cfg.symbols.size()));
  SymbolExpr phi = load_symbol(cfg.symbols[idx]);
  if (phi.n() != cfg.n)
    throw ConfigError("symbol file " + cfg.symbols[idx] + ": n=" + std::to_string(phi.n()) +
                      " does not match --n " + std::to_string(cfg.n));
  return phi;
}

int run_gram(const RunConfig& cfg, const Weight& wt) {
  Report rep;
  rep.config = cfg.to_json();
  rep.columns = {"degree", "ab_eigenvalue", "h_shifted", "h", "residual"};
  for (const MultiIndex& r : enumerate_basis(cfg.n, cfg.degree, cfg.max_basis)) {
    const double ab = ab_eigenvalue(degree(r), wt);
    const double hs = norm_sq(r, wt.shifted());
    const double h = norm_sq(r, wt);
    rep.rows.push_back({std::to_string(degree(r)), cell(ab), cell(hs), cell(h),
                        cell(gram_consistency_residual(r, wt))});
  }
  emit(cfg, rep);
  return 0;
}

int run_toeplitz(const RunConfig& cfg, const Weight& wt) {
  const SymbolExpr phi = require_symbol(cfg, 0);
  const OperatorMatrix m = assemble(phi, wt, cfg.degree, Exec::parallel, cfg.max_basis);
  const double rad = spectral_radius(m);
  if (cfg.output.empty()) {
    export_matrix_json(std::cout, m);
    std::cerr << "truncated spectral radius: " << format_g17(rad) << "\n";
    return 0;
  }
  std::ofstream os(cfg.output, std::ios::binary);
  if (!os) throw ConfigError("cannot open output file: " + cfg.output);
  if (cfg.binary)
    export_matrix_binary(os, m);
  else
    export_matrix_json(os, m);
  std::cerr << "truncated spectral radius: " << format_g17(rad) << "\n";
  return 0;
}

int run_spectrum(const RunConfig& cfg, const Weight& wt) {
  const SymbolExpr phi = require_symbol(cfg, 0);
  if (!is_elliptic_invariant(phi))
    throw ConfigError("spectrum: the symbol must be elliptic-invariant");
  const bool want_diag = cfg.method == "diag" || cfg.method == "both";
  const bool want_conv = cfg.method == "conv" || cfg.method == "both";
  if (!want_diag && !want_conv)
    throw ConfigError("method: expected diag, conv or both, got '" + cfg.method + "'");

  const auto diag = diagonal_spectrum(phi, wt, cfg.degree);
  const FourierTable denom = fourier_elliptic_closed_table(wt, cfg.degree);
  const QuotientTable conv = spectral_quotient(nu_elliptic(phi, wt, cfg.degree), denom);

  Report rep;
  rep.config = cfg.to_json();
  for (int i = 0; i < cfg.n; ++i) rep.columns.push_back("k" + std::to_string(i));
  rep.columns.insert(rep.columns.end(),
                     {"eig_diagonal_re", "eig_diagonal_im", "eig_convolution_re",
                      "eig_convolution_im", "abs_diff", "on_support"});
  for (std::size_t i = 0; i < diag.size(); ++i) {
    std::vector<std::string> row;
    for (int e : diag[i].first) row.push_back(std::to_string(e));
    const cplx d = want_diag ? diag[i].second : cplx{};
    const cplx c = want_conv && conv.defined[i] ? conv.values[i] : cplx{};
    row.push_back(cell(d.real()));
    row.push_back(cell(d.imag()));
    row.push_back(cell(c.real()));
    row.push_back(cell(c.imag()));
    row.push_back(cfg.method == "both" ? cell(std::abs(d - c)) : "nan");
    row.push_back(conv.defined[i] ? "1" : "0");
    rep.rows.push_back(std::move(row));
  }
  emit(cfg, rep);
  return 0;
}

int run_commutator(const RunConfig& cfg, const Weight& wt) {
  const SymbolExpr a = require_symbol(cfg, 0);
  const SymbolExpr b = require_symbol(cfg, 1);
  const OperatorMatrix ma = assemble(a, wt, cfg.degree, Exec::parallel, cfg.max_basis);
  const OperatorMatrix mb = assemble(b, wt, cfg.degree, Exec::parallel, cfg.max_basis);
  Report rep;
  rep.config = cfg.to_json();
  rep.columns = {"commutator_fro", "norm_a_fro", "norm_b_fro", "dim"};
  rep.rows.push_back({cell(commutator_norm(ma, mb)), cell(frobenius_norm(ma.entries)),
                      cell(frobenius_norm(mb.entries)),
                      std::to_string(ma.entries.rows())});
  emit(cfg, rep);
  return 0;
}

int run_intertwine(const RunConfig& cfg, const Weight& wt) {
  const SymbolExpr phi = require_symbol(cfg, 0);
  GroupElement g;
  if (!cfg.element_path.empty()) {
    g = load_element(cfg.element_path, cfg.n);
    if (g.kind != GroupKind::elliptic)
      throw ConfigError("intertwine: the element must be elliptic (torus) kind");
  } else {
    std::mt19937_64 gen(cfg.seed);
    g = random_element(GroupKind::elliptic, cfg.n, gen);
  }
  Report rep;
  rep.config = cfg.to_json();
  rep.columns = {"residual", "degree", "cover_x"};
  rep.rows.push_back({cell(intertwine_residual(phi, g, wt, cfg.degree)),
                      std::to_string(cfg.degree), cell(g.cover_x)});
  emit(cfg, rep);
  return 0;
}

int run_kernel_fourier(const RunConfig& cfg, const Weight& wt) {
  const GroupKind kind = group_kind_from_string(cfg.group);
  const int max_k = cfg.degree;
  if (max_k * 2 >= cfg.torus_nodes && torus_dim(kind, cfg.n) > 0)
    throw NumericGuardError("kernel-fourier: requested degree " + std::to_string(max_k) +
                            " aliases on an M=" + std::to_string(cfg.torus_nodes) + " grid");
  OrbitGrid grid = kind == GroupKind::elliptic
                       ? orbit_grid(kind, cfg.n, cfg.torus_nodes, 0, 0.0)
                       : orbit_grid(kind, cfg.n, cfg.torus_nodes, cfg.line_nodes,
                                    cfg.halfwidth);
  const std::optional<QOperator> q =
      wt.m() >= 1 && kind != GroupKind::elliptic
          ? std::optional<QOperator>(QOperator::identity(kind))
          : std::nullopt;
  const std::vector<cplx> vals = phi_kernel_on_grid(grid, wt, q);
  const std::vector<double> xi =
      kind == GroupKind::elliptic ? std::vector<double>{} : xi_grid_of(cfg);
  const FourierTable t = fourier_numeric(grid, vals, max_k, xi);

  Report rep;
  rep.config = cfg.to_json();
  const int d = grid.dim();
  for (int i = 0; i < d; ++i) rep.columns.push_back("k" + std::to_string(i));
  if (grid.has_line()) rep.columns.push_back("xi");
  rep.columns.insert(rep.columns.end(), {"coeff_re", "coeff_im", "on_support"});
  const bool closed = kind == GroupKind::elliptic;
  if (closed) rep.columns.insert(rep.columns.end(), {"closed_form", "abs_diff"});
  for (std::size_t i = 0; i < t.freqs.size(); ++i) {
    std::vector<std::string> row;
    const int cells = d + (grid.has_line() ? 1 : 0);
    for (int c = 0; c < cells; ++c) row.push_back(freq_cell(t.freqs[i], c));
    row.push_back(cell(t.coeffs[i].real()));
    row.push_back(cell(t.coeffs[i].imag()));
    row.push_back(t.support[i] ? "1" : "0");
    if (closed) {
      bool nonneg = true;
      for (int e : t.freqs[i].k) nonneg = nonneg && e >= 0;
      const double cf = nonneg ? fourier_elliptic_closed(t.freqs[i].k, wt) : 0.0;
      row.push_back(cell(cf));
      row.push_back(cell(std::abs(t.coeffs[i] - cf)));
    }
    rep.rows.push_back(std::move(row));
  }
  emit(cfg, rep);
  return 0;
}

int run_l1(const RunConfig& cfg, const Weight& wt) {
  const GroupKind kind = group_kind_from_string(cfg.group);
  std::vector<double> svals = cfg.s_values;
  if (svals.empty()) svals = {5.0, 10.0, 20.0, cfg.halfwidth};
  const std::optional<QOperator> q =
      wt.m() >= 1 && kind != GroupKind::elliptic
          ? std::optional<QOperator>(QOperator::identity(kind))
          : std::nullopt;
  const auto rows = l1_estimate(kind, wt, svals, cfg.torus_nodes, cfg.line_nodes, q);
  Report rep;
  rep.config = cfg.to_json();
  rep.columns = {"S", "estimate", "increment", "increment_over_total"};
  for (const L1Row& r : rows)
    rep.rows.push_back({cell(r.S), cell(r.estimate), cell(r.increment),
                        cell(r.estimate > 0 ? r.increment / rows.back().estimate : 0.0)});
  emit(cfg, rep);
  return 0;
}

int run_check(const RunConfig& cfg) {
  std::vector<CheckResult> results =
      cfg.suite == "all" ? run_all_suites() : run_suite(cfg.suite);
  Report rep;
  rep.config = cfg.to_json();
  rep.columns = {"suite", "check", "pass", "measured", "limit", "cmp"};
  bool all_pass = true;
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name
              << "  (measured=" << format_g17(r.measured) << " " << r.cmp << " "
              << format_g17(r.limit) << ")\n";
    rep.rows.push_back({r.suite, r.name, r.pass ? "1" : "0", cell(r.measured),
                        cell(r.limit), r.cmp});
  }
  if (!cfg.output.empty()) write_report_file(cfg.output, rep, report_format(cfg));
  std::cout << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["n"] = n;
  j["lambda"] = lambda;
  j["degree"] = degree;
  j["symbols"] = symbols;
  j["element"] = element_path;
  j["group"] = group;
  j["M"] = torus_nodes;
  j["L"] = line_nodes;
  j["S"] = halfwidth;
  j["s_values"] = s_values;
  j["xi_nodes"] = xi_nodes;
  j["xi_max"] = xi_max;
  j["seed"] = seed;
  j["output"] = output;
  j["format"] = format;
  j["method"] = method;
  j["suite"] = suite;
  j["threads"] = threads;
  j["binary"] = binary;
  j["max_basis"] = max_basis;
  return j;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  RunConfig cfg;

  // A config file, when present, replaces the defaults before flags apply.
  std::string config_path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config") config_path = args[i + 1];
  if (!config_path.empty()) {
    std::ifstream is(config_path);
    if (!is) throw ConfigError("cannot open config file: " + config_path);
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("config file " + config_path + ": " + e.what());
    }
    try {
      cfg.command = j.value("command", cfg.command);
      cfg.n = j.value("n", cfg.n);
      cfg.lambda = j.value("lambda", cfg.lambda);
      cfg.degree = j.value("degree", cfg.degree);
      if (j.contains("symbols")) cfg.symbols = j["symbols"].get<std::vector<std::string>>();
      if (j.contains("symbol")) cfg.symbols = {j["symbol"].get<std::string>()};
      cfg.element_path = j.value("element", cfg.element_path);
      cfg.group = j.value("group", cfg.group);
      cfg.torus_nodes = j.value("M", cfg.torus_nodes);
      cfg.line_nodes = j.value("L", cfg.line_nodes);
      cfg.halfwidth = j.value("S", cfg.halfwidth);
      if (j.contains("s_values")) cfg.s_values = j["s_values"].get<std::vector<double>>();
      cfg.xi_nodes = j.value("xi_nodes", cfg.xi_nodes);
      cfg.xi_max = j.value("xi_max", cfg.xi_max);
      cfg.seed = j.value("seed", cfg.seed);
      cfg.output = j.value("output", cfg.output);
      cfg.format = j.value("format", cfg.format);
      cfg.method = j.value("method", cfg.method);
      cfg.suite = j.value("suite", cfg.suite);
      cfg.threads = j.value("threads", cfg.threads);
      cfg.binary = j.value("binary", cfg.binary);
      cfg.max_basis = j.value("max_basis", cfg.max_basis);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file " + config_path + ": " + e.what());
    }
  }

  CLI::App app{"Toeplitz operators on weighted Bergman spaces of the unit ball"};
  std::string command_positional;
  std::string config_sink;
  app.add_option("command", command_positional,
                 "gram|toeplitz|spectrum|commutator|intertwine|kernel-fourier|l1|check");
  app.add_option("--command", cfg.command, "command (alternative to the positional)");
  app.add_option("--config", config_sink, "JSON config file");
  app.add_option("--n", cfg.n, "ambient dimension");
  app.add_option("--lambda", cfg.lambda, "continuation weight");
  app.add_option("--degree,-D", cfg.degree, "truncation degree");
  app.add_option("--symbol", cfg.symbols, "symbol JSON file (repeatable)");
  app.add_option("--element", cfg.element_path, "group element JSON file");
  app.add_option("--group", cfg.group, "elliptic|parabolic|hyperbolic");
  app.add_option("--grid,-M", cfg.torus_nodes, "torus nodes per circle");
  app.add_option("--line-nodes,-L", cfg.line_nodes, "line nodes");
  app.add_option("--halfwidth,-S", cfg.halfwidth, "line halfwidth");
  app.add_option("--s-values", cfg.s_values, "halfwidths for the l1 command");
  app.add_option("--xi-nodes", cfg.xi_nodes, "line frequency nodes");
  app.add_option("--xi-max", cfg.xi_max, "line frequency window half-width");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--output,-o", cfg.output, "output path (stdout when empty)");
  app.add_option("--format", cfg.format, "csv|json");
  app.add_option("--method", cfg.method, "spectrum route: diag|conv|both");
  app.add_option("--suite", cfg.suite, "check suite name or 'all'");
  app.add_option("--threads", cfg.threads, "cap worker threads (0 = default)");
  app.add_flag("--binary", cfg.binary, "binary matrix export");
  app.add_option("--max-basis", cfg.max_basis, "maximum basis size");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  if (!command_positional.empty()) cfg.command = command_positional;

  if (cfg.command.empty()) throw ConfigError("no command given");
  bool known = false;
  for (const std::string& c : kCommands) known = known || c == cfg.command;
  if (!known) throw ConfigError("unknown command: " + cfg.command);
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("format: expected csv or json, got '" + cfg.format + "'");
  if (cfg.command == "check" && cfg.suite != "all") {
    bool ok = false;
    for (const std::string& s : suite_names()) ok = ok || s == cfg.suite;
    if (!ok) throw ConfigError("unknown check suite: " + cfg.suite);
  }
  group_kind_from_string(cfg.group);  // validates
  for (const std::string& path : cfg.symbols) {
    std::ifstream probe(path);
    if (!probe) throw ConfigError("symbol file does not exist: " + path);
  }
  if (!cfg.element_path.empty()) {
    std::ifstream probe(cfg.element_path);
    if (!probe) throw ConfigError("element file does not exist: " + cfg.element_path);
  }
  if (cfg.command != "check") {
    try {
      Weight wt(cfg.n, cfg.lambda);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("weight: ") + e.what());
    }
  }
  return cfg;
}

int run(const RunConfig& cfg) {
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  if (cfg.command == "check") return run_check(cfg);
  const Weight wt(cfg.n, cfg.lambda);
  if (cfg.command == "gram") return run_gram(cfg, wt);
  if (cfg.command == "toeplitz") return run_toeplitz(cfg, wt);
  if (cfg.command == "spectrum") return run_spectrum(cfg, wt);
  if (cfg.command == "commutator") return run_commutator(cfg, wt);
  if (cfg.command == "intertwine") return run_intertwine(cfg, wt);
  if (cfg.command == "kernel-fourier") return run_kernel_fourier(cfg, wt);
  if (cfg.command == "l1") return run_l1(cfg, wt);
  throw ConfigError("unknown command: " + cfg.command);
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const RunConfig cfg = parse_config(args);
    return run(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const BasisOverflowError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NumericGuardError& e) {
    std::cerr << "numeric guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bergtoep
