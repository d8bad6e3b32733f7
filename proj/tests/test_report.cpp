#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "divalg/catalog.hpp"
#include "divalg/io.hpp"
#include "divalg/report.hpp"

using namespace divalg;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DIVALG_TEST_DATA) + "/" + name; }

json payload(const Result& r) { return json::parse(r.out)["payload"]; }

}  // namespace

TEST_SUITE("report") {

TEST_CASE("fib classification from the builtin") {
  const auto r = cli({"ring", "classify", "--builtin", "fib", "--object", "tau"});
  REQUIRE(r.code == 0);
  const auto c = payload(r)["classification"];
  CHECK(c["simplistic"] == true);
  CHECK(c["essential"] == false);
  CHECK(c["algebra"] == json::array({1, 1}));
  CHECK(c["algebra_name"] == "1 ⊔ tau");
  CHECK(c["unreachable"] == json::array({"1"}));
}

TEST_CASE("classification from a ring file matches the builtin") {
  const auto file = cli({"ring", "classify", "--ring", data("fib.json"), "--object", "0,1"});
  const auto builtin = cli({"ring", "classify", "--builtin", "fib", "--object", "tau"});
  REQUIRE(file.code == 0);
  CHECK(payload(file)["classification"] == payload(builtin)["classification"]);
  const auto inputs = json::parse(file.out)["inputs"];
  CHECK(inputs[0]["sha256"] == sha256_hex(read_file(data("fib.json"))));
}

TEST_CASE("reports are byte-identical on repeat") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"ring", "classify", "--builtin", "rep_s3", "--object", "V"},
           {"monad", "check", "exception", "--marks", "2", "--max-size", "3"},
           {"ring", "classify", "--builtin", "fib", "--object", "tau", "--format", "markdown"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
}

TEST_CASE("JSON reports round-trip") {
  RunReport report;
  report.command = {"x"};
  report.kind = "test";
  report.inputs = {{"builtin:fib", "00"}};
  report.payload = {{"b", 1}, {"a", json::array({1, 2})}};
  const auto text = export_report(report, ReportFormat::json);
  CHECK(json::parse(text) == report_to_json(report));
  CHECK(json::parse(text).dump(2) + "\n" == text);
  // Keys come out sorted.
  CHECK(text.find("\"a\"") < text.find("\"b\""));
  CHECK(text.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("markdown names the algebra") {
  const auto r = cli({"ring", "classify", "--builtin", "fib", "--object", "tau", "--format",
                      "markdown"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("| tau | 1 ⊔ tau | X ⊗ X* | true | false |") != std::string::npos);
}

TEST_CASE("timing is opt-in") {
  const auto r = cli({"ring", "classify", "--builtin", "fib", "--object", "tau", "--timing"});
  CHECK(json::parse(r.out).contains("elapsed_ms"));
}

TEST_CASE("ring validation exit codes") {
  const auto broken = cli({"ring", "validate", data("broken.json")});
  CHECK(broken.code == 1);
  const auto v = payload(broken)["validation"];
  CHECK(v["passed"] == false);
  bool associativity = false;
  for (const auto& x : v["violations"]) associativity = associativity || x["axiom"] == "associativity";
  CHECK(associativity);

  CHECK(cli({"ring", "validate", data("fib.json")}).code == 0);
  CHECK(cli({"ring", "validate", "--builtin", "matrix_multifusion(3)"}).code == 0);
  CHECK(cli({"ring", "validate", data("malformed.json")}).code == 2);
  CHECK(cli({"ring", "validate", data("wrong_shape.json")}).code == 2);
  CHECK(cli({"ring", "validate", data("wrong_type.json")}).code == 2);
  CHECK(cli({"ring", "validate", data("does_not_exist.json")}).code == 2);
  CHECK(cli({"ring", "classify", "--ring", data("broken.json"), "--object", "a"}).code == 1);
}

TEST_CASE("usage errors exit 2 with usage on stderr") {
  const auto r = cli({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(cli({}).code == 2);
  CHECK(cli({"ring", "classify", "--builtin", "fib"}).code == 2);
  CHECK(cli({"ring", "classify", "--builtin", "nope", "--object", "1"}).code == 2);
  CHECK(cli({"ring", "classify", "--builtin", "fib", "--object", "0,0"}).code == 2);
  CHECK(cli({"ring", "classify", "--builtin", "fib", "--object", "sigma"}).code == 2);
  CHECK(cli({"monad", "check", "list"}).code == 2);
  CHECK(cli({"--format", "xml", "catalog", "list"}).code == 2);
}

TEST_CASE("NIM-rep commands") {
  const auto r = cli({"nimrep", "classify", "--ring", data("fib.json"), "--nimrep",
                      data("fib_module.json"), "--object", "0,1"});
  REQUIRE(r.code == 0);
  const auto c = payload(r)["classification"];
  CHECK(c["simplistic"] == true);
  CHECK(c["essential"] == false);
  CHECK(c["algebra_form"] == "internal_end_of_module");
  CHECK(c["unreachable"] == json::array({"m0"}));

  const auto regular = cli({"nimrep", "classify", "--builtin", "vec_cyclic(3)", "--regular",
                            "--object", "g"});
  REQUIRE(regular.code == 0);
  CHECK(payload(regular)["classification"]["essential"] == true);

  CHECK(cli({"nimrep", "validate", "--ring", data("fib.json"), "--nimrep",
             data("fib_module.json")}).code == 0);
  CHECK(cli({"nimrep", "classify", "--ring", data("z2_split.json"), "--nimrep",
             data("z2_split_module.json"), "--object", "a"}).code == 1);
  // Ring and NIM-rep ranks disagree.
  CHECK(cli({"nimrep", "validate", "--builtin", "rep_s3", "--nimrep",
             data("fib_module.json")}).code == 2);
  CHECK(cli({"nimrep", "validate", "--builtin", "fib"}).code == 2);
}

TEST_CASE("catalog commands") {
  const auto list = cli({"catalog", "list"});
  REQUIRE(list.code == 0);
  const auto entries = payload(list)["entries"];
  CHECK(entries.size() == 18);
  CHECK(entries[0]["name"] == "fib");
  CHECK(entries[0]["rank"] == 2);

  for (const auto& e : catalog_entries()) {
    const auto exported = cli({"catalog", "export", e.name});
    REQUIRE(exported.code == 0);
    const FusionRing back(parse_ring_json(exported.out));
    CHECK(back.data().fusion == e.ring.data().fusion);
    CHECK(back.labels() == e.ring.labels());
  }
}

TEST_CASE("monad commands") {
  const auto r = cli({"monad", "check", "exception", "--marks", "2", "--max-size", "3"});
  REQUIRE(r.code == 0);
  const auto p = payload(r);
  CHECK(p["trivial"] == false);
  CHECK(p["status"] == "not_trivial");
  CHECK(p["counterexample"]["carrier_size"] == 1);
  CHECK(p["counterexample"]["structure"] == json::array({0, 0, 0}));
  CHECK(p["semantics"].get<std::string>().find("bounded") == 0);

  const auto maybe = cli({"monad", "check", "maybe", "--max-size", "7"});
  REQUIRE(maybe.code == 0);
  CHECK(payload(maybe)["trivial"] == true);

  const auto f2 = cli({"monad", "check", "freevec2", "--max-size", "6"});
  REQUIRE(f2.code == 0);
  CHECK(payload(f2)["bound"] == 4);
  CHECK(payload(f2)["requested_bound"] == 6);

  const auto strength = cli({"monad", "strength", "maybe", "--max-size", "3"});
  REQUIRE(strength.code == 0);
  CHECK(payload(strength)["strength"]["passed"] == true);
  CHECK(payload(strength)["very_strong"]["very_strong"] == true);

  const auto vs = cli({"monad", "strength", "freevec2", "--max-size", "2"});
  REQUIRE(vs.code == 0);
  CHECK(payload(vs)["very_strong"]["very_strong"] == false);

  CHECK(cli({"monad", "agreement", "exception", "--marks", "2"}).code == 0);
  CHECK(cli({"monad", "agreement", "freevec2"}).code == 1);
  const auto cmp = cli({"monad", "comparison", "maybe"});
  REQUIRE(cmp.code == 0);
  CHECK(payload(cmp)["fully_faithful"] == true);
}

TEST_CASE("budget exhaustion exits 3") {
  setenv("DIVALG_CANDIDATE_BUDGET", "5", 1);
  const auto r = cli({"monad", "check", "freevec2", "--max-size", "4"});
  unsetenv("DIVALG_CANDIDATE_BUDGET");
  CHECK(r.code == 3);
  setenv("DIVALG_CANDIDATE_BUDGET", "lots", 1);
  CHECK(cli({"monad", "check", "maybe"}).code == 2);
  unsetenv("DIVALG_CANDIDATE_BUDGET");
  CHECK(cli({"monad", "strength", "freevec2", "--max-size", "3"}).code == 3);
}

}
