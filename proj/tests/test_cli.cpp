#include "doctest.h"

#include "chainsim/cli.hpp"

#include <filesystem>
#include <sstream>

using namespace chainsim;
using namespace chainsim::cli;

namespace {

std::vector<Violation> violations_of(const std::string& raw) {
  try {
    validate_config(raw);
  } catch (const InvalidConfig& e) {
    return e.violations();
  }
  return {};
}

bool mentions(const std::vector<Violation>& v, const std::string& needle) {
  for (const auto& x : v) {
    if (x.message.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("a minimal oracle-checked config is accepted") {
  const auto c = validate_config(R"({"command": "transfer", "n": 8, "model": "nn", "engine": "both"})");
  CHECK(c.command == Command::Transfer);
  CHECK(resolved_n(c) == 8);
  CHECK(c.engine == Engine::Both);
  CHECK(resolved_t_max(c) == 40.0);
  CHECK(resolved_n_points(c) == 2000);
}

TEST_CASE("every violation is reported at once") {
  const auto v = violations_of(R"({"n": 5, "a": 9, "d": 0, "colour": "red", "points": 1})");
  CHECK(v.size() == 4);
  CHECK(mentions(v, "colour"));
  CHECK(mentions(v, "a=9"));
  CHECK(mentions(v, "d must be"));
  CHECK(mentions(v, "points"));
}

TEST_CASE("analytic engine with long-range couplings names the conflict") {
  const auto v = violations_of(R"({"n": 6, "model": "dipolar", "engine": "analytic"})");
  REQUIRE(v.size() == 1);
  CHECK(mentions(v, "engine=analytic"));
  CHECK(mentions(v, "model=dipolar"));
  CHECK(mentions(v, "exponent=3"));
  CHECK_FALSE(v.front().resource);
  CHECK(violations_of(R"({"n": 6, "model": "dipolar", "engine": "oracle"})").empty());
}

TEST_CASE("exceeding the oracle cap is a resource violation") {
  try {
    validate_config(R"({"n": 13, "engine": "oracle"})");
    FAIL("expected InvalidConfig");
  } catch (const InvalidConfig& e) {
    CHECK(e.resource_only());
    CHECK(std::string(e.what()).find("cap of 12") != std::string::npos);
  }
  CHECK(violations_of(R"({"n": 1000, "engine": "analytic"})").empty());
}

TEST_CASE("malformed JSON reports the line") {
  try {
    validate_config("{\n  \"n\": 8,\n  \"d\": ,\n}");
    FAIL("expected ConfigError");
  } catch (const InvalidConfig&) {
    FAIL("parse errors are not field violations");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("type mismatches are violations") {
  const auto v = violations_of(R"({"n": "eight", "engine": "quantum", "state": 3})");
  CHECK(v.size() == 3);
}

TEST_CASE("state strings and objects") {
  const auto s = parse_state("1:1,21:0.5");
  CHECK(s.at(1) == 1.0);
  CHECK(s.at(21) == 0.5);
  CHECK(parse_state("4").at(4) == 1.0);
  CHECK_THROWS_AS(parse_state("1:x"), ConfigError);
  CHECK_THROWS_AS(parse_state(""), ConfigError);

  const auto c = validate_config(R"({"command": "mqc", "n": 21, "state": {"1": 1, "21": 1}})");
  CHECK(c.state.size() == 2);
  CHECK(mentions(violations_of(R"({"n": 4, "state": "1:1,7:1"})"), "state index 7"));
  CHECK(mentions(violations_of(R"({"n": 4, "state": "1:0"})"), "nonzero"));
}

TEST_CASE("figure names and defaults") {
  CHECK(mentions(violations_of(R"({"command": "figure", "figure": "3"})"), "unknown figure"));
  const auto c = validate_config(R"({"command": "figure", "figure": "longrange"})");
  CHECK(resolved_n(c) == 6);
  const auto v = validate_config(R"({"command": "verify"})");
  CHECK(resolved_t_max(v) == 20.0);
  CHECK(resolved_n_points(v) == 100);
}

TEST_CASE("running a small transfer writes a CSV and one summary line") {
  const auto dir = std::filesystem::temp_directory_path() / "chainsim_cli_test";
  std::filesystem::remove_all(dir);
  RunConfig c;
  c.n = 4;
  c.engine = Engine::Both;
  c.n_points = 50;
  c.out = dir;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == exit_code::ok);
  CHECK(std::filesystem::exists(dir / "transfer_4_both.csv"));
  const std::string line = out.str();
  CHECK(line.find("transfer:") == 0);
  CHECK(std::count(line.begin(), line.end(), '\n') == 1);
  std::filesystem::remove_all(dir);

  RunConfig bad;
  bad.n = 30;
  bad.engine = Engine::Oracle;
  CHECK(run(bad, out, err) == exit_code::resource);
}
