#include <doctest.h>

#include <sstream>

#include "bhn/cli.hpp"
#include "bhn/error.hpp"

using namespace bhn;
using namespace bhn::cli;

namespace {

std::string run_to_string(const RunConfig& c, int& code) {
  std::ostringstream out;
  code = run(c, out);
  return out.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("config round trip") {
  RunConfig c;
  c.command = Command::growth;
  c.profile = ProfileSpec::preset("builtin");
  c.n = 12;
  c.seed = 99;
  c.format = Format::json;
  c.budget_ms = 5000;
  c.envelope = EnvelopeConstants{10.0, 3.0, 1.5};
  c.random_words = 17;
  const RunConfig back = RunConfig::from_json(c.to_json());
  CHECK(back == c);
  CHECK(back.to_json() == c.to_json());

  RunConfig t;
  t.profile.f_table = {30, 40, 50};
  CHECK(RunConfig::from_json(t.to_json()) == t);
  RunConfig tab;
  tab.profile.kind = "table";
  tab.profile.log_F = {10.0, 20.0, 40.0};
  CHECK(RunConfig::from_json(tab.to_json()) == tab);
}

TEST_CASE("config errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(RunConfig::from_json(json{{"bogus", 1}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json{{"n", "ten"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json{{"n", 0}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json{{"format", "xml"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json{{"command", "fly"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json{{"profile", {{"kind", "weird"}}}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json{{"profile", {{"kind", "table"}, {"log_F", {3.0, 2.0}}}}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(json::array()), ConfigError);
  CHECK_THROWS_AS(RunConfig::load("/nonexistent/config.json"), ConfigError);
  CHECK(RunConfig::from_json(json{{"profile", "builtin"}}).profile == ProfileSpec::preset("builtin"));
}

TEST_CASE("build emits certified rows") {
  RunConfig c;
  c.command = Command::build;
  c.n = 20;
  int code = -1;
  const auto lines = lines_of(run_to_string(c, code));
  CHECK(code == 0);
  REQUIRE(lines.size() >= 22);
  CHECK(lines[0] == "# sequences");
  std::size_t certified = 0;
  for (std::size_t i = 2; i < 22; ++i) certified += lines[i].ends_with("\ttrue");
  CHECK(certified == 20);
  CHECK(lines.back() == "build\t20\t0\tpass");
}

TEST_CASE("verify passes on the toy profile and is reproducible") {
  RunConfig c;
  c.command = Command::verify;
  c.n = 10;
  c.locality_length = 5;
  c.random_words = 200;
  int code1 = -1, code2 = -1;
  const std::string a = run_to_string(c, code1), b = run_to_string(c, code2);
  CHECK(code1 == 0);
  CHECK(a == b);
  c.format = Format::json;
  const std::string j = run_to_string(c, code1);
  CHECK(code1 == 0);
  for (const auto& line : lines_of(j)) CHECK(nlohmann::json::parse(line).is_object());
}

TEST_CASE("oracle reports ball sizes") {
  RunConfig c;
  c.command = Command::oracle;
  c.n = 1;
  c.format = Format::json;
  int code = -1;
  const auto lines = lines_of(run_to_string(c, code));
  CHECK(code == 0);
  const auto first = nlohmann::json::parse(lines.at(0));
  CHECK(first["section"] == "ball");
  CHECK(first["ball_size"] == 5);
  CHECK(first["pairwise_size"] == 5);
  CHECK(first["rho_injective"] == true);
}

TEST_CASE("growth tables pass for both shipped profiles") {
  for (const char* name : {"toy", "builtin"}) {
    RunConfig c;
    c.command = Command::growth;
    c.profile = ProfileSpec::preset(name);
    c.n = 8;
    int code = -1;
    const std::string out = run_to_string(c, code);
    CHECK_MESSAGE(code == 0, name);
    CHECK(out.find("\tfail\n") == std::string::npos);
  }
}

TEST_CASE("failing checks give exit status 1") {
  RunConfig c;
  c.command = Command::growth;
  c.profile = ProfileSpec::preset("builtin");
  c.n = 8;
  c.envelope = EnvelopeConstants{1.0, 0.0, 0.0};
  int code = -1;
  run_to_string(c, code);
  CHECK(code == 1);

  RunConfig slow;
  slow.command = Command::oracle;
  slow.n = 3;
  slow.budget_ms = 0;
  CHECK_THROWS_AS(run_to_string(slow, code), BudgetExceeded);
}
