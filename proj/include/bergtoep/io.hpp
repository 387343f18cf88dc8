#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bergtoep/spectra.hpp"

namespace bergtoep {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 17 significant digits; round-trip exact for doubles.
std::string format_g17(double v);

/// Symbol wire format:
///   {"n":2,"terms":[{"c":[re,im],"a":[1,0],"b":[1,0],"p":0}]}
nlohmann::json symbol_to_json(const SymbolExpr& phi);
SymbolExpr symbol_from_json(const nlohmann::json& j);
SymbolExpr load_symbol(const std::string& path);

/// Group element wire format:
///   {"kind":"hyperbolic","torus":[[re,im],...],"line":1.0,"cover_x":0.0}
nlohmann::json element_to_json(const GroupElement& g, int n);
GroupElement element_from_json(const nlohmann::json& j, int n);
GroupElement load_element(const std::string& path, int n);

nlohmann::json weight_to_json(const Weight& wt);

enum class ReportFormat { csv, json };

/// Tabular report; the resolved config rides along as a JSON header comment
/// line (CSV) or a "config" object (JSON).
struct Report {
  nlohmann::json config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_report(std::ostream& os, const Report& rep, ReportFormat fmt);
void write_report_file(const std::string& path, const Report& rep, ReportFormat fmt);

/// Matrix export: JSON (basis, weight, hash, entries as [re,im] row-major) or
/// a one-line JSON header followed by raw little-endian f64 re/im pairs.
void export_matrix_json(std::ostream& os, const OperatorMatrix& m);
OperatorMatrix import_matrix_json(std::istream& is);
void export_matrix_binary(std::ostream& os, const OperatorMatrix& m);
OperatorMatrix import_matrix_binary(std::istream& is);

}  // namespace bergtoep
