#include "bergtoep/io.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace bergtoep {

static_assert(std::endian::native == std::endian::little,
              "binary matrix export assumes a little-endian host");

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

cplx cplx_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(std::string(what) + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json cplx_to_json(const cplx& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

MultiIndex mindex_from_json(const nlohmann::json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ConfigError(std::string(what) + ": expected an array of " + std::to_string(n) +
                      " non-negative integers");
  MultiIndex r(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number_integer() || j[i].get<int>() < 0)
      throw ConfigError(std::string(what) + "[" + std::to_string(i) +
                        "]: non-negative integer required");
    r[i] = j[i].get<int>();
  }
  return r;
}

}  // namespace

nlohmann::json symbol_to_json(const SymbolExpr& phi) {
  nlohmann::json terms = nlohmann::json::array();
  for (const SymbolTerm& t : phi.terms()) {
    terms.push_back({{"c", cplx_to_json(t.c)}, {"a", t.a}, {"b", t.b}, {"p", t.p}});
  }
  return {{"n", phi.n()}, {"terms", terms}};
}

SymbolExpr symbol_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ConfigError("symbol: field 'n' (integer) required");
  const int n = j["n"].get<int>();
  if (n < 1) throw ConfigError("symbol: n >= 1 required");
  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
    throw ConfigError("symbol: non-empty 'terms' array required");
  std::vector<SymbolTerm> terms;
  std::size_t idx = 0;
  for (const auto& tj : j["terms"]) {
    const std::string where = "symbol terms[" + std::to_string(idx++) + "]";
    SymbolTerm t;
    t.c = cplx_from_json(tj.value("c", nlohmann::json::array({1.0, 0.0})),
                         (where + ".c").c_str());
    t.a = tj.contains("a") ? mindex_from_json(tj["a"], n, (where + ".a").c_str())
                           : MultiIndex(n, 0);
    t.b = tj.contains("b") ? mindex_from_json(tj["b"], n, (where + ".b").c_str())
                           : MultiIndex(n, 0);
    if (tj.contains("p")) {
      if (!tj["p"].is_number_integer() || tj["p"].get<int>() < 0)
        throw ConfigError(where + ".p: non-negative integer required");
      t.p = tj["p"].get<int>();
    }
    terms.push_back(std::move(t));
  }
  return SymbolExpr(n, std::move(terms));
}

SymbolExpr load_symbol(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open symbol file: " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("symbol file " + path + ": " + e.what());
  }
  return symbol_from_json(j);
}

nlohmann::json element_to_json(const GroupElement& g, int) {
  nlohmann::json torus = nlohmann::json::array();
  for (const cplx& t : g.torus) torus.push_back(cplx_to_json(t));
  return {{"kind", to_string(g.kind)},
          {"torus", torus},
          {"line", g.line},
          {"cover_x", g.cover_x}};
}

GroupElement element_from_json(const nlohmann::json& j, int n) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("group element: field 'kind' required");
  const GroupKind kind = group_kind_from_string(j["kind"].get<std::string>());
  std::vector<cplx> torus;
  if (j.contains("torus")) {
    if (!j["torus"].is_array()) throw ConfigError("group element: 'torus' must be an array");
    std::size_t i = 0;
    for (const auto& tj : j["torus"])
      torus.push_back(cplx_from_json(tj, ("torus[" + std::to_string(i++) + "]").c_str()));
  }
  const double line = j.value("line", 0.0);
  const double cover_x = j.value("cover_x", 0.0);
  try {
    return make_element(kind, n, std::move(torus), line, cover_x);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("group element: ") + e.what());
  }
}

GroupElement load_element(const std::string& path, int n) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open group element file: " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("group element file " + path + ": " + e.what());
  }
  return element_from_json(j, n);
}

nlohmann::json weight_to_json(const Weight& wt) {
  return {{"n", wt.n()}, {"lambda", wt.lambda()}, {"m", wt.m()}};
}

void write_report(std::ostream& os, const Report& rep, ReportFormat fmt) {
  if (fmt == ReportFormat::csv) {
    os << "# " << rep.config.dump() << "\n";
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
      os << rep.columns[i] << (i + 1 < rep.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : rep.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << row[i] << (i + 1 < row.size() ? "," : "");
      os << "\n";
    }
    return;
  }
  nlohmann::json j;
  j["config"] = rep.config;
  j["columns"] = rep.columns;
  j["rows"] = rep.rows;
  os << j.dump(2) << "\n";
}

void write_report_file(const std::string& path, const Report& rep, ReportFormat fmt) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open output file: " + path);
  write_report(os, rep, fmt);
}

namespace {

nlohmann::json matrix_header(const OperatorMatrix& m) {
  nlohmann::json basis = nlohmann::json::array();
  for (const MultiIndex& r : m.basis) basis.push_back(r);
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(m.symbol_hash));
  return {{"rows", m.entries.rows()},
          {"cols", m.entries.cols()},
          {"weight", weight_to_json(m.weight)},
          {"symbol_hash", hash},
          {"basis", basis},
          {"layout", "row-major"},
          {"scalar", "complex128-le"}};
}

OperatorMatrix matrix_from_header(const nlohmann::json& h) {
  const int n = h.at("weight").at("n").get<int>();
  const double lambda = h.at("weight").at("lambda").get<double>();
  std::vector<MultiIndex> basis;
  for (const auto& bj : h.at("basis")) basis.push_back(bj.get<MultiIndex>());
  const std::size_t rows = h.at("rows").get<std::size_t>();
  const std::size_t cols = h.at("cols").get<std::size_t>();
  const std::uint64_t hash =
      std::stoull(h.at("symbol_hash").get<std::string>(), nullptr, 16);
  return OperatorMatrix{std::move(basis), CMatrix(rows, cols), Weight(n, lambda), hash};
}

}  // namespace

void export_matrix_json(std::ostream& os, const OperatorMatrix& m) {
  nlohmann::json j = matrix_header(m);
  nlohmann::json entries = nlohmann::json::array();
  for (const cplx& c : m.entries.data())
    entries.push_back(nlohmann::json::array({c.real(), c.imag()}));
  j["entries"] = std::move(entries);
  os << j.dump() << "\n";
}

OperatorMatrix import_matrix_json(std::istream& is) {
  nlohmann::json j;
  is >> j;
  OperatorMatrix m = matrix_from_header(j);
  const auto& entries = j.at("entries");
  if (entries.size() != m.entries.data().size())
    throw ConfigError("matrix import: entry count mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.entries.data()[i] = {entries[i][0].get<double>(), entries[i][1].get<double>()};
  return m;
}

void export_matrix_binary(std::ostream& os, const OperatorMatrix& m) {
  os << matrix_header(m).dump() << "\n";
  os.write(reinterpret_cast<const char*>(m.entries.data().data()),
           static_cast<std::streamsize>(m.entries.data().size() * sizeof(cplx)));
}

OperatorMatrix import_matrix_binary(std::istream& is) {
  std::string header;
  std::getline(is, header);
  OperatorMatrix m = matrix_from_header(nlohmann::json::parse(header));
  is.read(reinterpret_cast<char*>(m.entries.data().data()),
          static_cast<std::streamsize>(m.entries.data().size() * sizeof(cplx)));
  if (!is) throw ConfigError("matrix import: truncated binary payload");
  return m;
}

}  // namespace bergtoep
