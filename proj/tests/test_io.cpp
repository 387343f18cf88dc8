#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bergtoep/cli.hpp"
#include "bergtoep/io.hpp"
#include "bergtoep/rng.hpp"
#include "bergtoep/toeplitz.hpp"

using namespace bergtoep;

TEST_CASE("symbol wire format") {
  const auto j = nlohmann::json::parse(
      R"({"n":2,"terms":[{"c":[1.0,0.0],"a":[1,0],"b":[1,0],"p":0}]})");
  const SymbolExpr phi = symbol_from_json(j);
  CHECK(phi.n() == 2);
  CHECK(is_elliptic_invariant(phi));
  CHECK(phi.eval({cplx(0.5), cplx(0.0)}) == doctest::Approx(0.25));

  const SymbolExpr round = symbol_from_json(symbol_to_json(phi));
  CHECK(round.hash() == phi.hash());
  CHECK(round.canonical_key() == phi.canonical_key());

  CHECK_THROWS_AS(symbol_from_json(nlohmann::json::parse(R"({"terms":[]})")), ConfigError);
  CHECK_THROWS_AS(
      symbol_from_json(nlohmann::json::parse(R"({"n":2,"terms":[{"a":[1],"b":[1,0]}]})")),
      ConfigError);
  CHECK_THROWS_AS(
      symbol_from_json(nlohmann::json::parse(R"({"n":1,"terms":[{"a":[1],"b":[1],"p":-2}]})")),
      ConfigError);
}

TEST_CASE("group element wire format") {
  const auto j = nlohmann::json::parse(
      R"({"kind":"hyperbolic","torus":[[1.0,0.0]],"line":1.0,"cover_x":0.0})");
  const GroupElement g = element_from_json(j, 2);
  CHECK(g.kind == GroupKind::hyperbolic);
  CHECK(g.line == 1.0);

  const GroupElement round = element_from_json(element_to_json(g, 2), 2);
  CHECK(round.torus == g.torus);
  CHECK(round.line == g.line);
  CHECK(round.cover_x == g.cover_x);

  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(R"({"torus":[]})"), 1), ConfigError);
  // constraint violation surfaces as a config error
  CHECK_THROWS_AS(element_from_json(nlohmann::json::parse(
                      R"({"kind":"elliptic","torus":[[0.0,1.0]],"cover_x":0.0})"),
                  1),
                  ConfigError);
}

TEST_CASE("g17 formatting round-trips doubles") {
  std::mt19937_64 gen(83);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(uniform(gen, -30.0, 30.0)) * (u01(gen) < 0.5 ? -1.0 : 1.0);
    CHECK(std::strtod(format_g17(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("matrix export round-trips") {
  const SymbolExpr phi(2, {{cplx(0.3, -0.7), {1, 0}, {0, 1}, 1}, {1.0, {1, 1}, {1, 1}, 0}});
  const OperatorMatrix m = assemble(phi, Weight(2, 1.5), 3);

  std::stringstream js;
  export_matrix_json(js, m);
  const OperatorMatrix mj = import_matrix_json(js);
  CHECK(mj.basis == m.basis);
  CHECK(mj.symbol_hash == m.symbol_hash);
  CHECK(mj.entries.data() == m.entries.data());

  std::stringstream bs(std::ios::in | std::ios::out | std::ios::binary);
  export_matrix_binary(bs, m);
  const OperatorMatrix mb = import_matrix_binary(bs);
  CHECK(mb.basis == m.basis);
  CHECK(mb.entries.data() == m.entries.data());
}

TEST_CASE("report writer is deterministic and embeds the config") {
  Report rep;
  rep.config = {{"command", "gram"}, {"n", 2}, {"lambda", 1.5}};
  rep.columns = {"a", "b"};
  rep.rows = {{format_g17(1.0 / 3.0), "x"}, {format_g17(2.0), "y"}};

  std::ostringstream a, b;
  write_report(a, rep, ReportFormat::csv);
  write_report(b, rep, ReportFormat::csv);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 2) == "# ");
  CHECK(a.str().find("\"command\":\"gram\"") != std::string::npos);
  CHECK(a.str().find("a,b\n") != std::string::npos);

  std::ostringstream c;
  write_report(c, rep, ReportFormat::json);
  const auto parsed = nlohmann::json::parse(c.str());
  CHECK(parsed["config"]["n"] == 2);
  CHECK(parsed["rows"].size() == 2);
}

TEST_CASE("config parsing precedence and validation") {
  CHECK_THROWS_AS(parse_config({"--command", "gram", "--n", "2", "--lambda", "2.0"}),
                  ConfigError);
  CHECK_THROWS_AS(parse_config({"frobnicate"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"check", "--suite", "nope"}), ConfigError);
  CHECK_THROWS_AS(parse_config({"spectrum", "--symbol", "/no/such/file.json"}), ConfigError);

  const RunConfig direct = parse_config({"--command", "gram", "--n", "2", "--lambda", "1.5",
                                         "--degree", "8"});
  CHECK(direct.command == "gram");
  CHECK(direct.n == 2);
  CHECK(direct.degree == 8);
  CHECK(direct.torus_nodes == 64);
  CHECK(direct.line_nodes == 4001);
  CHECK(direct.halfwidth == 40.0);
  CHECK(direct.seed == 42);
  CHECK(direct.format == "csv");
  CHECK(Weight(direct.n, direct.lambda).m() == 1);

  // config file values act as defaults, flags win
  const std::string path = "/tmp/bergtoep_test_config.json";
  {
    std::ofstream os(path);
    os << R"({"command":"gram","n":1,"lambda":0.3,"degree":4})";
  }
  const RunConfig from_file = parse_config({"--config", path});
  CHECK(from_file.lambda == 0.3);
  CHECK(from_file.degree == 4);
  const RunConfig overridden = parse_config({"--config", path, "--lambda", "0.7"});
  CHECK(overridden.lambda == 0.7);
  CHECK(overridden.degree == 4);
  std::remove(path.c_str());
}
