#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symstrata/cli.hpp"
#include "symstrata/json_io.hpp"

using namespace symstrata;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() /
             (name + "-" + std::to_string(std::hash<std::string>{}(name + __TIME__)))) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("betti of configurations of the punctured line") {
    Run r = run({"betti", "--space", "uconf:gm:4"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out == "0\t1\n1\t2\n2\t2\n3\t2\n4\t1\n");
  }

  TEST_CASE("brute count, cached") {
    TempDir dir("symstrata-cli-cache");
    std::string cache = (dir.path / "counts.jsonl").string();
    std::vector<std::string> args = {"--cache", cache, "count", "--lambda", "1,1,2,2",
                                     "--q",     "2",   "--method", "brute"};
    auto before = operation_counters().brute_divisors;
    Run first = run(args);
    auto middle = operation_counters().brute_divisors;
    Run second = run(args);
    auto after = operation_counters().brute_divisors;
    CHECK(first.code == exit_code::ok);
    CHECK(first.out == "6\n");
    CHECK(second.out == "6\n");
    CHECK(middle > before);
    CHECK(after == middle);

    CountCache reloaded(cache);
    CHECK(reloaded.size() == 1);
    auto hit = reloaded.find(Partition::parse("1,1,2,2"), 2, CountMethod::brute);
    REQUIRE(hit);
    CHECK(hit->count == 6);
    CHECK_FALSE(std::filesystem::exists(cache + ".tmp"));
  }

  TEST_CASE("cache ignores other engine versions and junk") {
    TempDir dir("symstrata-cli-versions");
    auto path = dir.path / "counts.jsonl";
    {
      std::ofstream f(path);
      f << R"({"lambda":[1,1],"q":3,"count":999,"method":"fast","engine_version":"0.0.1"})" << "\n";
      f << "not json\n";
    }
    CountCache cache(path);
    CHECK(cache.size() == 0);
    Run r = run({"--cache", path.string(), "count", "--lambda", "1,1", "--q", "3"});
    CHECK(r.out == "9\n");
  }

  TEST_CASE("no-cache leaves the file system alone") {
    TempDir dir("symstrata-cli-nocache");
    auto path = dir.path / "counts.jsonl";
    Run r = run({"--cache", path.string(), "--no-cache", "count", "--lambda", "1", "--q", "5"});
    CHECK(r.out == "6\n");
    CHECK_FALSE(std::filesystem::exists(path));
  }

  TEST_CASE("conjecture refutation exits 3 with a JSON report") {
    Run r = run({"check", "conjecture", "--name", "stable_limits_one_in_degrees_0_1", "--n",
                 "2..6"});
    CHECK(r.code == exit_code::inconsistent);
    Json j = Json::parse(r.out);
    CHECK(j.at("verdict") == "inconsistent");
    CHECK(j.at("evidence").at("ledger").size() > 0);
  }

  TEST_CASE("trace refutation and the caveat") {
    Run r = run({"--no-cache", "check", "trace", "--lambda", "1,1,2,2", "--claim", "w:1,1,2,2"});
    CHECK(r.code == exit_code::inconsistent);
    Json j = Json::parse(r.out);
    CHECK(j.at("evidence").at("claimed_text") == "q^4 - 2q^3 + q^2");
    CHECK(j.at("evidence").at("observed_text") == "q^4 - q^3 - q^2 + q");
    CHECK(j.at("notes").at(0) == kCountsCaveat);
  }

  TEST_CASE("the 1^n 2 2 re-derivation succeeds") {
    Run r = run({"--format", "tsv", "check", "theorem-a", "--n", "5"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("verdict: consistent") != std::string::npos);
  }

  TEST_CASE("E1 grid rows run q downward") {
    Run r = run({"e1", "--space", "p1", "--n", "2"});
    CHECK(r.out == "q\\p\t0\t1\n4\t1\t.\n3\t.\t.\n2\t1\t1\n1\t.\t.\n0\t1\t1\n");
  }

  TEST_CASE("Serre pages with a split action") {
    TempDir dir("symstrata-cli-serre");
    auto path = dir.path / "action.json";
    {
      std::ofstream f(path);
      f << R"({"base_sign": {"flavor": "ordinary", "classes": [{"degree": 2, "p": 1, "q": 1, "mult": 1}]},
              "fiber_sign": {"flavor": "ordinary", "classes": []}})";
    }
    Run trivial = run({"serre", "--base", "p1", "--fiber", "gm"});
    CHECK(trivial.out == "q\\p\t0\t1\t2\n1\t1\t.\t1\n0\t1\t.\t1\n");
    Run split = run({"serre", "--base", "p1", "--fiber", "gm", "--action", "split:" + path.string()});
    CHECK(split.code == exit_code::ok);
    CHECK(split.out == "q\\p\t0\n1\t1\n0\t1\n");
    Run missing = run({"serre", "--base", "p1", "--fiber", "gm", "--action", "split:/nonexistent"});
    CHECK(missing.code == exit_code::usage_error);
  }

  TEST_CASE("interp, epoly and zeta") {
    CHECK(run({"--no-cache", "interp", "--lambda", "2,2,1,1", "--primes", "2,3,5,7,11",
               "--held-out", "13"})
              .out == "q^4 - q^3 - q^2 + q\n");
    CHECK(run({"epoly", "--lambda", "1,1"}).out == "u^2v^2\n");
    CHECK(run({"zeta", "--space", "p1", "--order", "2"}).out == "0\t1\n1\tuv + 1\n2\tu^2v^2 + uv + 1\n");
  }

  TEST_CASE("usage errors exit 2 before any work") {
    auto before = operation_counters();
    CHECK(run({"frobnicate"}).code == exit_code::usage_error);
    CHECK(run({"count", "--lambda", "1,x", "--q", "2"}).code == exit_code::usage_error);
    CHECK(run({"count", "--lambda", "1,1", "--q", "4"}).code == exit_code::usage_error);
    CHECK(run({"count", "--lambda", "1,1", "--q", "3", "--method", "strata"}).code ==
          exit_code::usage_error);
    CHECK(run({"betti", "--space", "klein-bottle"}).code == exit_code::usage_error);
    CHECK(run({"--format", "xml", "betti", "--space", "p1"}).code == exit_code::usage_error);
    CHECK(run({"check", "conjecture", "--name", "nope", "--n", "2..3"}).code ==
          exit_code::usage_error);
    CHECK(run({}).code == exit_code::usage_error);
    auto after = operation_counters();
    CHECK(after.brute_divisors == before.brute_divisors);
    CHECK(after.fast_evaluations == before.fast_evaluations);
  }

  TEST_CASE("computational errors exit 1") {
    Run r = run({"--no-cache", "--budget", "10", "count", "--lambda", "1,1,1,1", "--q", "5",
                 "--method", "brute"});
    CHECK(r.code == exit_code::computation_error);
    CHECK(run({"betti", "--space", "w:1,1,2,3", "--compact"}).code == exit_code::computation_error);
  }

  TEST_CASE("identical inputs give identical bytes") {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"--format", "json", "e1", "--space", "gm", "--n", "5"},
             {"--format", "json", "betti", "--space", "w:1,1,1,2,3"},
             {"--format", "json", "--no-cache", "count", "--lambda", "3,2,1", "--q", "5"},
             {"--format", "json", "zeta", "--space", "gm", "--order", "4"},
             {"check", "conjecture", "--name", "periodic_nonzero_limits_one", "--n", "2..4"}}) {
      Run a = run(args), b = run(args);
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);
      CHECK(Json::accept(a.out));
    }
  }

  TEST_CASE("parse_int_range") {
    CHECK(parse_int_range("2..5") == std::vector<int>{2, 3, 4, 5});
    CHECK(parse_int_range("2,3,7") == std::vector<int>{2, 3, 7});
    CHECK_THROWS(parse_int_range("5..2"));
    CHECK_THROWS(parse_int_range("a..b"));
  }
}

TEST_SUITE("json") {
  TEST_CASE("tables and pages round trip") {
    HodgeTable t(Flavor::compact, {{0, {0, 0}, 1}, {3, {1, 2}, 4}});
    CHECK(hodge_table_from_json(Json::parse(to_json(t).dump())) == t);
    Page page = e1_page(HodgeTable(Flavor::compact, {{0, {0, 0}, 1}, {2, {1, 1}, 1}}), 3);
    Page back = page_from_json(Json::parse(to_json(page).dump()));
    CHECK(back.entries() == page.entries());
    CHECK(back.page_index() == page.page_index());
  }

  TEST_CASE("polynomials round trip") {
    EPoly e = EPoly::monomial(2, 1, -3) + EPoly(5);
    CHECK(epoly_from_json(to_json(e)) == e);
    QPoly q;
    q.add_term(2, Rational(1, 3));
    q.add_term(-1, 7);
    CHECK(qpoly_from_json(Json::parse(to_json(q).dump())) == q);
  }

  TEST_CASE("count records round trip") {
    CountRecord r{Partition::parse("1,1,2"), 7, 1234, CountMethod::brute};
    CHECK(count_record_from_json(to_json(r)) == r);
    CHECK(to_json(r).dump() ==
          R"({"lambda":[1,1,2],"q":7,"count":1234,"method":"brute","engine_version":"1.0.0"})");
  }

  TEST_CASE("report field order is stable") {
    Json j = to_json(check_theorem_a(2));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"subject", "verdict", "evidence", "violations", "notes"});
  }
}
