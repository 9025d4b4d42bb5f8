#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "covercalc/cli.hpp"
#include "covercalc/knot_model.hpp"

namespace fs = std::filesystem;
using covercalc::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("covercalc_test_" + name);
  std::ofstream(p) << content;
  return p;
}

const char* kSmallTable = R"([
  {"name": "unknot", "alexander": [1], "genus": 0, "fibered": true},
  {"name": "trefoil", "alexander": [1, -1, 1], "genus": 1, "arc_index": 5, "fibered": true}
])";

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"cover", "3_1", "--n", "1..6"}).code == 0);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"table", "check"}).code == 0);

  Result r = call({"cover", "nope", "--n", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown knot") != std::string::npos);
  CHECK(call({"cover", "3_1", "--n", "5..2"}).code == 2);
  CHECK(call({"cover", "3_1", "--n", "0"}).code == 2);
  CHECK(call({"cover", "3_1", "--n", "x"}).code == 2);
  CHECK(call({"skp", "3_1", "-p", "4"}).code == 2);
  CHECK(call({"obstruct", "3_1"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"--table", "/nonexistent/table.json", "table", "list"}).code == 2);

  CHECK(call({"obstruct", "4_1", "3_1"}).code == 0);
  CHECK(call({"obstruct", "4_1", "3_1", "--strict"}).code == 1);
  CHECK(call({"obstruct", "3_1", "granny", "--strict"}).code == 0);
}

TEST_CASE("text output carries the expected values") {
  Result r = call({"cover", "3_1", "--n", "1..6"});
  CHECK(r.out.find("∞") != std::string::npos);
  r = call({"--json", "cover", "3_1", "--n", "1..6"});
  const auto j = nlohmann::json::parse(r.out);
  std::vector<long> orders;
  for (const auto& row : j.at("rows")) orders.push_back(row.at("order").get<long>());
  CHECK(orders == std::vector<long>{1, 3, 4, 3, 1, 0});
  CHECK(j.at("rows")[5].at("infinite") == true);

  r = call({"skp", "4_1", "-p", "3"});
  CHECK(r.out.find("{2}") != std::string::npos);
  r = call({"obstruct", "4_1", "3_1"});
  CHECK(r.out.find("obstructed by alex_div") != std::string::npos);
  r = call({"--json", "filter", "granny"});
  CHECK(nlohmann::json::parse(r.out).at("predecessors") == nlohmann::json{"unknot", "3_1", "granny"});
}

TEST_CASE("every --json record renders to the same text") {
  const std::vector<std::vector<std::string>> commands{
      {"table", "list"},
      {"table", "check"},
      {"cover", "4_1", "--n", "1..10", "-p", "2", "-p", "3"},
      {"cover", "3_1#6_1", "--n", "20"},
      {"skp", "6_3", "-p", "5"},
      {"obstruct", "3_1", "3_1#6_1", "--max-n", "12"},
      {"obstruct", "granny", "3_1"},
      {"filter", "3_1#6_1"},
      {"bounds", "4_1"},
      {"bounds", "5_2", "--delta", "9", "--genus", "2"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const Result text = call(cmd);
    REQUIRE(text.code == 0);
    std::vector<std::string> with_json{"--json"};
    with_json.insert(with_json.end(), cmd.begin(), cmd.end());
    const Result js = call(with_json);
    REQUIRE(js.code == 0);
    const fs::path rec = scratch("record.json", js.out);
    const Result rendered = call({"render", rec.string()});
    CHECK(rendered.code == 0);
    CHECK(rendered.out == text.out);
    CHECK(covercalc::cli::render_text(nlohmann::json::parse(js.out)) == text.out);
  }
}

TEST_CASE("render rejects unknown records") {
  const fs::path rec = scratch("bad_record.json", R"({"command": "mystery"})");
  CHECK(call({"render", rec.string()}).code == 2);
  const fs::path junk = scratch("junk.json", "{not json");
  CHECK(call({"render", junk.string()}).code == 2);
}

TEST_CASE("table source selection") {
  const fs::path table = scratch("table.json", kSmallTable);
  Result r = call({"--table", table.string(), "--json", "table", "list"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("knots").size() == 2);
  CHECK(call({"--table", table.string(), "cover", "trefoil", "--n", "2"}).code == 0);
  CHECK(call({"--table", table.string(), "cover", "3_1", "--n", "2"}).code == 2);

  ::setenv("COVERCALC_TABLE", table.string().c_str(), 1);
  r = call({"--json", "table", "list"});
  CHECK(nlohmann::json::parse(r.out).at("knots").size() == 2);
  CHECK(call({"cover", "trefoil", "--n", "3"}).code == 0);
  ::unsetenv("COVERCALC_TABLE");

  r = call({"--json", "table", "list"});
  CHECK(nlohmann::json::parse(r.out).at("knots").size() == covercalc::bundled_table().size());
}

TEST_CASE("bounds with a samples file") {
  const fs::path samples = scratch("samples.json", R"([{"n": 2, "count": 9}, {"n": 3, "count": 27}])");
  Result r = call({"--json", "bounds", "4_1", "--samples", samples.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("dilatation").at("upper").get<double>() == doctest::Approx(3.0));
  CHECK(j.contains("volume_bound"));

  const fs::path bad = scratch("bad_samples.json", R"([{"n": 3, "count": 9}, {"n": 2, "count": 27}])");
  CHECK(call({"bounds", "4_1", "--samples", bad.string()}).code == 2);
  CHECK(call({"bounds", "unknot"}).code == 2);
}
