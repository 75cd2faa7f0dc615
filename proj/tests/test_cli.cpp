#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ktf/cli.hpp"
#include "ktf/seqdet.hpp"
#include "ktf/solver.hpp"

using namespace ktf;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

QPoly parse_poly(const json& arr) {
  std::vector<Rational> c;
  for (const auto& x : arr) c.push_back(parse_rational(x.get<std::string>()));
  return QPoly(c);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("seq_sylvester_example") {
    const Run r = run_cli({"seq", "--family", "Sylv", "--k", "2", "--y", "2", "--format", "json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["poly"] == json::array({"0", "-4", "0", "1"}));
  }

  TEST_CASE("seq_evaluation") {
    const Run r = run_cli({"seq", "--family", "Cay", "--k", "3", "--y", "4", "--x", "4"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["value"] == "24");
  }

  TEST_CASE("sol_example") {
    const Run r = run_cli({"sol", "--model", "II", "--s", "0", "--n", "1"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dim"] == 2);
    CHECK(j["mrep"] == "H");
    CHECK(j["expected"] == 2);
    CHECK(j["match"] == true);
  }

  TEST_CASE("verify_palindromic_example") {
    const Run r = run_cli({"verify", "--suite", "palindromic", "--max-n", "20"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() >= 6);
    for (const auto& c : j["checks"]) CHECK(c["status"] != "fail");
  }

  TEST_CASE("heun_and_ktype_commands") {
    const Run h = run_cli({"heun", "--kind", "a", "--s", "2", "--n", "4"});
    CHECK(h.code == 0);
    CHECK(json::parse(h.out)["poly"] == json::array({"1", "0", "10", "0", "1"}));
    const Run u = run_cli({"heun", "--kind", "u", "--s", "1", "--n", "4", "--terms", "5"});
    CHECK(json::parse(u.out)["coefficients"] == json::array({"1", "2", "1", "0", "0"}));
    const Run k = run_cli({"ktype", "--sigma", "H", "--s", "0", "--max-n", "13"});
    CHECK(k.code == 0);
    const json kj = json::parse(k.out);
    CHECK(kj["degrees"] == json::array({1, 5, 9, 13}));
    CHECK(kj["crosscheck"]["agree"] == true);
    CHECK(kj["crosscheck"]["h_literal_discrepancies"] == json::array({3, 7, 11}));
  }

  TEST_CASE("usage_errors_exit_2_without_output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"seq", "--family", "Z", "--k", "2", "--y", "1"},
             {"seq", "--family", "P", "--k", "1/2", "--y", "1"},
             {"seq", "--family", "P", "--k", "2", "--y", "x"},
             {"seq", "--family", "P", "--k", "2"},
             {"sol", "--model", "III", "--s", "0", "--n", "1"},
             {"verify", "--suite", "nope"},
             {"--format", "xml", "seq", "--family", "P", "--k", "1", "--y", "1"}}) {
      const Run r = run_cli(args);
      CHECK(r.code == 2);
      CHECK(r.out.empty());
      CHECK_FALSE(r.err.empty());
    }
  }

  TEST_CASE("domain_errors_exit_1") {
    const Run r = run_cli({"heun", "--kind", "a", "--s", "1", "--n", "4"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("UndefinedC") != std::string::npos);
  }

  TEST_CASE("json_round_trip") {
    for (long k = 0; k <= 6; ++k)
      for (const char* y : {"7", "-5/3", "11/2"}) {
        const Run r = run_cli({"seq", "--family", "P", "--k", std::to_string(k), "--y", y});
        REQUIRE(r.code == 0);
        CHECK(parse_poly(json::parse(r.out)["poly"]) == family_poly(Family::P, k, parse_rational(y)));
      }
    for (long n = 0; n <= 6; ++n) {
      const Run r = run_cli({"sol", "--model", "I", "--s", "1/3", "--n", std::to_string(n)});
      REQUIRE(r.code == 0);
      const auto sp = solution_space(Model::I, make_rational(1, 3), n);
      const json j = json::parse(r.out);
      REQUIRE(j["basis"].size() == sp.basis.size());
      for (size_t b = 0; b < sp.basis.size(); ++b) CHECK(parse_poly(j["basis"][b]) == sp.basis[b]);
      for (const auto& c : j["constituents"])
        for (const auto& v : c["span"])
          for (const auto& g : v) {
            CHECK(g.contains("re"));
            CHECK(g.contains("im"));
            parse_rational(g["im"].get<std::string>());
          }
    }
  }

  TEST_CASE("csv_and_pretty_formats") {
    const Run c = run_cli({"--format", "csv", "seq", "--family", "Sylv", "--k", "2"});
    CHECK(c.code == 0);
    CHECK(c.out == "index,coefficient\n0,0\n1,-4\n2,0\n3,1\n");
    const Run p = run_cli({"--format", "pretty", "verify", "--suite", "determinants", "--max-n", "8"});
    CHECK(p.code == 0);
    CHECK(p.out.find("[PASS] sylvester_factorization") != std::string::npos);
    const Run v = run_cli({"--format", "csv", "verify", "--suite", "determinants", "--max-n", "8"});
    CHECK(v.out.rfind("check,status,cases,counterexamples\n", 0) == 0);
  }

  TEST_CASE("out_file_and_determinism") {
    const std::string path = "ktf_cli_test_out.json";
    const Run r = run_cli({"--out", path, "verify", "--suite", "determinants", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream file;
    file << f.rdbuf();
    const Run again = run_cli({"verify", "--suite", "determinants", "--max-n", "10"});
    CHECK(file.str() == again.out);
    std::remove(path.c_str());
  }

  TEST_CASE("help_exits_0") {
    const Run r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("seq") != std::string::npos);
  }
}
