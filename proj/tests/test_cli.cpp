#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "relsig/cli.hpp"

using namespace relsig;

namespace {

const char* kBridgeDoc = R"({"n":5,"pathsets":[[1,4],[2,5],[1,3,5],[2,3,4]]})";

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("cli_tmp_") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv = {"relsig"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

bool is_canonical_rational(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == text.size()) return true;
  if (text[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  return digits > 0 && i == text.size();
}

}  // namespace

TEST_CASE("analyze emits every representation of the bridge") {
  const ordered_json report = cli::cmd_analyze(parse_system_document(kBridgeDoc));
  CHECK(report["n"] == 5);
  CHECK(report["signature"] == ordered_json({"0", "1/5", "3/5", "1/5", "0"}));
  CHECK(report["tail"] == ordered_json({"1", "1", "4/5", "1/5", "0", "0"}));
  CHECK(report["domination"] == ordered_json({"0", "0", "2", "2", "-5", "2"}));
  CHECK(report["phi"] == ordered_json({"0", "0", "2", "8", "5", "1"}));
  CHECK(report["polynomial"] == ordered_json({"0", "0", "2", "2", "-5", "2"}));
  CHECK(report["dual_domination"] == ordered_json({"0", "0", "2", "2", "-5", "2"}));
  CHECK(report["full_degree"] == true);
  CHECK(report["pathcount_gf"] == ordered_json({"0", "0", "2", "8", "5", "1"}));

  const ordered_json series = cli::cmd_analyze(parse_system_document(R"({"n":2,"pathsets":[[1,2]]})"));
  CHECK(series["polynomial"] == ordered_json({"0", "0", "1"}));
}

TEST_CASE("analyze rejects non-semicoherent tables") {
  CHECK_THROWS_AS(cli::cmd_analyze(parse_system_document(R"({"n":2,"table":"0000"})")),
                  ValidationError);
}

TEST_CASE("convert moves between every representation") {
  VectorDocument tail;
  tail.n = 5;
  tail.values = testutil::bridge_tail();
  const ordered_json d = cli::cmd_convert("tail", "domination", tail);
  CHECK(d["kind"] == "domination");
  CHECK(d["values"] == ordered_json({"0", "0", "2", "2", "-5", "2"}));

  VectorDocument s;
  s.n = 5;
  s.values = testutil::bridge_s();
  CHECK(cli::cmd_convert("signature", "signature", s)["values"] ==
        ordered_json({"0", "1/5", "3/5", "1/5", "0"}));

  VectorDocument h;
  h.n = 5;
  h.values = testutil::bridge_d();
  CHECK(cli::cmd_convert("polynomial", "signature", h, Route::integral)["values"] ==
        ordered_json({"0", "1/5", "3/5", "1/5", "0"}));
  CHECK(cli::cmd_convert("polynomial", "signature", h, Route::reflect)["values"] ==
        ordered_json({"0", "1/5", "3/5", "1/5", "0"}));
  CHECK(cli::cmd_convert("polynomial", "tail", h, Route::integral)["values"] ==
        ordered_json({"1", "1", "4/5", "1/5", "0", "0"}));
  CHECK(cli::cmd_convert("polynomial", "phi", h)["values"] ==
        ordered_json({"0", "0", "2", "8", "5", "1"}));

  VectorDocument phi;
  phi.n = 5;
  phi.values = testutil::rationals({"0", "0", "2", "8", "5", "1"});
  CHECK(cli::cmd_convert("phi", "tail", phi)["values"] ==
        ordered_json({"1", "1", "4/5", "1/5", "0", "0"}));
  CHECK(cli::cmd_convert("phi", "polynomial", phi)["values"] ==
        ordered_json({"0", "0", "2", "2", "-5", "2"}));

  VectorDocument dual;
  dual.n = 5;
  dual.values = testutil::bridge_d();
  CHECK(cli::cmd_convert("dual-domination", "signature", dual)["values"] ==
        ordered_json({"0", "1/5", "3/5", "1/5", "0"}));

  CHECK_THROWS_AS(cli::cmd_convert("signature", "nonsense", s), ParseError);
}

TEST_CASE("every from/to pair is reachable and consistent") {
  const std::vector<std::string> kinds = {"signature", "tail",          "domination",
                                          "polynomial", "phi", "dual-domination"};
  // Bridge values per representation.
  const auto value_of = [&](const std::string& kind) {
    VectorDocument doc;
    doc.n = 5;
    if (kind == "signature") doc.values = testutil::bridge_s();
    else if (kind == "tail") doc.values = testutil::bridge_tail();
    else if (kind == "phi") doc.values = testutil::rationals({"0", "0", "2", "8", "5", "1"});
    else doc.values = testutil::bridge_d();  // domination, polynomial, dual (self-dual)
    return doc;
  };
  for (const auto& from : kinds) {
    for (const auto& to : kinds) {
      const ordered_json out = cli::cmd_convert(from, to, value_of(from));
      CHECK(out["values"] == cli::cmd_convert(to, to, value_of(to))["values"]);
      for (const auto& route : {Route::closed, Route::reflect, Route::integral}) {
        // Alternate routes must agree wherever they are defined for the pair.
        const ordered_json alt = cli::cmd_convert(from, to, value_of(from), route);
        CHECK(alt["values"] == out["values"]);
      }
    }
  }
}

TEST_CASE("dependent command") {
  const SystemDocument gate = parse_system_document(R"({"n":3,"pathsets":[[1,2],[1,3]]})");
  const QualityInput q = parse_quality_document(
      R"({"n":3,"q":{"":"1","1":"1/3","2":"1/3","3":"1/3",
          "1,2":"1/3","1,3":"1/3","2,3":"1/3","1,2,3":"1"}})");
  const ordered_json report = cli::cmd_dependent(gate, q);
  CHECK(report["probability_signature"] == ordered_json({"1/3", "2/3", "0"}));
  CHECK(report["psi_levels"] == ordered_json({"0", "0", "2", "1"}));
  CHECK(report["g_polynomial"] == report["c_levels"]);

  // Orders document for the same system.
  const QualityInput orders = parse_quality_document(
      R"({"n":3,"orders":[{"perm":[1,2,3],"prob":"1/2"},{"perm":[3,2,1],"prob":"1/2"}]})");
  const ordered_json wave = cli::cmd_dependent(gate, orders);
  // q({1,2}) = 1/2, q({1,3}) = 0, q({2,3}) = 1/2.
  CHECK(wave["probability_signature"] == ordered_json({"1/2", "1/2", "0"}));

  // Exchangeable quality on the bridge reduces to the structural signature.
  std::string exchangeable = R"({"n":5,"q":{)";
  bool first = true;
  for (SubsetMask mask = 0; mask < 32; ++mask) {
    if (!first) exchangeable += ",";
    first = false;
    exchangeable += "\"" + subset_key(mask) + "\":\"" +
                    to_string(Rational(Int(1), binomial(5, mask_popcount(mask)))) + "\"";
  }
  exchangeable += "}}";
  const ordered_json bridge_report =
      cli::cmd_dependent(parse_system_document(kBridgeDoc), parse_quality_document(exchangeable));
  CHECK(bridge_report["probability_signature"] == ordered_json({"0", "1/5", "3/5", "1/5", "0"}));

  // Level-sum violation surfaces as a validation error.
  CHECK_THROWS_AS(parse_quality_document(R"({"n":2,"q":{"":"1","1":"1","2":"1",
                                             "1,2":"1"}})"),
                  ValidationError);
  // Dimension mismatch between the two documents.
  CHECK_THROWS_AS(cli::cmd_dependent(gate, parse_quality_document(
                                             R"({"n":2,"q":{"":"1","1":"1/2","2":"1/2","1,2":"1"}})")),
                  ValidationError);
}

TEST_CASE("verify passes on reference systems") {
  const cli::VerifyOutcome bridge = cli::cmd_verify(parse_system_document(kBridgeDoc));
  CHECK(bridge.all_pass);
  CHECK(bridge.report["all_pass"] == true);
  for (const auto& check : bridge.report["checks"]) CHECK(check["pass"] == true);

  const cli::VerifyOutcome series =
      cli::cmd_verify(parse_system_document(R"({"n":3,"pathsets":[[1,2,3]]})"));
  CHECK(series.all_pass);

  CHECK_THROWS_AS(cli::cmd_verify(parse_system_document(kBridgeDoc), 4), CapError);
}

TEST_CASE("command line end to end") {
  const std::string sys = write_temp("bridge.json", kBridgeDoc);
  const std::string out = "cli_tmp_report.json";

  CHECK(run_cli({"analyze", sys, "--output", out}) == cli::kExitOk);
  const std::string first = slurp(out);
  CHECK(first.find("\"signature\"") != std::string::npos);
  CHECK(run_cli({"analyze", sys, "--output", out}) == cli::kExitOk);
  CHECK(slurp(out) == first);  // byte-stable across runs

  // Every emitted value is a canonical rational string; no floats anywhere.
  const ordered_json parsed = ordered_json::parse(first);
  for (const auto& [key, value] : parsed.items()) {
    if (!value.is_array()) continue;
    for (const auto& entry : value) {
      REQUIRE(entry.is_string());
      CHECK(is_canonical_rational(entry.get<std::string>()));
    }
  }
  CHECK(first.find('.') == std::string::npos);

  CHECK(run_cli({"verify", sys, "--output", out}) == cli::kExitOk);

  const std::string vec = write_temp(
      "tail.json", R"({"kind":"tail","n":5,"values":["1","1","4/5","1/5","0","0"]})");
  CHECK(run_cli({"convert", "--from", "tail", "--to", "domination", vec, "--output", out}) ==
        cli::kExitOk);
  CHECK(ordered_json::parse(slurp(out))["values"] ==
        ordered_json({"0", "0", "2", "2", "-5", "2"}));
  // Kind tags must match --from.
  CHECK(run_cli({"convert", "--from", "signature", "--to", "domination", vec}) ==
        cli::kExitValidation);

  const std::string bad = write_temp("bad.json", R"({"n":2,"pathsets":)");
  CHECK(run_cli({"analyze", bad}) == cli::kExitParse);

  const std::string nonmono = write_temp("nonmono.json", R"({"n":3,"table":"01000101"})");
  CHECK(run_cli({"analyze", nonmono}) == cli::kExitValidation);

  const std::string big = write_temp("big.json", R"({"n":27,"pathsets":[[1]]})");
  CHECK(run_cli({"analyze", big}) == cli::kExitCap);

  const std::string missing = "cli_tmp_does_not_exist.json";
  std::remove(missing.c_str());
  CHECK(run_cli({"analyze", missing}) == cli::kExitParse);

  std::remove(sys.c_str());
  std::remove(vec.c_str());
  std::remove(bad.c_str());
  std::remove(nonmono.c_str());
  std::remove(big.c_str());
  std::remove(out.c_str());
}
