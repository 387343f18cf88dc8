#pragma once

#include <string>
#include <vector>

#include "bergtoep/spectra.hpp"

namespace bergtoep {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double limit = 0.0;
  std::string cmp = "<=";  // pass iff measured cmp limit
};

CheckResult make_check(std::string suite, std::string name, double measured,
                       double limit, const std::string& cmp = "<=");

/// Named suites: gram, prop32, commute, spectrum-cross, kernels, l1,
/// measure-scale.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name);
std::vector<CheckResult> run_all_suites();

std::vector<CheckResult> suite_gram();
std::vector<CheckResult> suite_prop32();
std::vector<CheckResult> suite_commute();
std::vector<CheckResult> suite_spectrum_cross();
std::vector<CheckResult> suite_kernels();
std::vector<CheckResult> suite_l1();
std::vector<CheckResult> suite_measure_scale();

/// Fixed elliptic-invariant corpus (10 symbols) and the non-invariant pair
/// used by the commutativity dichotomy.
std::vector<SymbolExpr> invariant_corpus(int n);
std::pair<SymbolExpr, SymbolExpr> noninvariant_pair(int n);

/// Random symbol from the closed-form class (degrees <= 2, p <= 2, up to
/// three terms).
SymbolExpr random_symbol(int n, std::mt19937_64& gen);

}  // namespace bergtoep
