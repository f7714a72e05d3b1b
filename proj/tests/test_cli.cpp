#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "turan/cli.hpp"
#include "turan/norms.hpp"
#include "turan/optimizer.hpp"
#include "turan/report.hpp"

using namespace turan;
using namespace turan::test;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "turan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(TURAN_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("turan_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("analyze") {
  const auto sq = run({"analyze", data("square.json")});
  REQUIRE(sq.code == kExitOk);
  const auto doc = Json::parse(sq.out);
  CHECK(doc["manifest"]["command"] == "analyze");
  CHECK(!doc["manifest"].contains("timestamp"));
  CHECK(doc["result"]["summary"]["depth"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["result"]["summary"]["classification"] == "III");
  CHECK(doc["result"]["summary"]["circularity_radius"].is_null());

  const auto tri = Json::parse(run({"analyze", data("triangle.json")}).out);
  CHECK(tri["result"]["summary"]["depth"].get<double>() == 0.0);
  CHECK(tri["result"]["summary"]["classification"] == "II");

  const auto bad = run({"analyze", data("clockwise.json")});
  CHECK(bad.code == kExitInvalidInput);
  CHECK(bad.err.find("vertices not counterclockwise") != std::string::npos);
  CHECK(bad.out.empty());

  const auto missing = run({"analyze", temp_file("nofield.json", R"({"type":"disk","center":[0,0]})")});
  CHECK(missing.code == kExitInvalidInput);
  CHECK(missing.err.find("radius") != std::string::npos);

  CHECK(run({"analyze", "/nonexistent/domain.json"}).code == kExitInvalidInput);
  CHECK(run({"frobnicate"}).code == kExitInvalidInput);
  const auto stamped = Json::parse(run({"--timestamp", "analyze", data("unit_disk.json")}).out);
  CHECK(stamped["manifest"].contains("timestamp"));
}

TEST_CASE("oscillation") {
  const auto r = run({"oscillation", data("unit_disk.json"), data("triple_zero_origin.json"), "--q", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["result"]["oscillation"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));
  const auto inf = run({"oscillation", data("unit_disk.json"), data("triple_zero_origin.json"), "--q", "inf"});
  CHECK(Json::parse(inf.out)["result"]["q"] == "inf");

  const auto outside = run({"oscillation", data("unit_disk.json"), data("outside_zero.json")});
  CHECK(outside.code == kExitPrecondition);
  CHECK(outside.err.find("zero 0 at [2, 0]") != std::string::npos);

  CHECK(run({"oscillation", data("unit_disk.json"), data("triple_zero_origin.json"), "--q", "0.5"}).code ==
        kExitInvalidInput);
}

TEST_CASE("oscillation report matches the library") {
  std::mt19937_64 rng(12);
  const auto sq = unit_square();
  for (int trial = 0; trial < 3; ++trial) {
    ZeroSet zs;
    Json arr = Json::array();
    for (int j = 0; j < 4 + trial; ++j) {
      zs.push_back(random_point_in(sq, rng));
      arr.push_back(Json::array({zs.back().real(), zs.back().imag()}));
    }
    const auto zeros = temp_file("zeros" + std::to_string(trial) + ".json", Json{{"zeros", arr}}.dump());
    const auto r = run({"oscillation", data("square.json"), zeros, "--q", "3"});
    REQUIRE(r.code == kExitOk);
    Json expected = oscillation_ratio(sq, MonicPolynomial(zs), 3.0);
    CHECK(Json::parse(r.out)["result"] == Json::parse(expected.dump()));
  }
}

TEST_CASE("search output is byte-identical across runs") {
  const std::vector<std::string> args{"search", data("unit_disk.json"), "--n", "2", "--q", "2", "--restarts", "3",
                                      "--seed", "9"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto doc = Json::parse(a.out);
  CHECK(doc["manifest"]["config"]["seed"] == 9);
  CHECK(doc["result"]["trace"].size() == 3);

  SearchConfig cfg;
  cfg.restarts = 3;
  cfg.seed = 9;
  const auto lib = minimize_oscillation(unit_disk(), 2, 2.0, cfg);
  CHECK(doc["result"]["value"].get<double>() == lib.value);

  const auto csv = std::filesystem::temp_directory_path() / "turan_test_trace.csv";
  auto with_csv = args;
  with_csv.insert(with_csv.end(), {"--csv", csv.string()});
  REQUIRE(run(with_csv).code == kExitOk);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  CHECK(header == "restart,seed,value,iterations,converged");
}

TEST_CASE("verify and capacity") {
  const auto v = run({"verify", data("unit_disk.json"), "--n", "1..2", "--q", "1,2", "--restarts", "2"});
  CHECK(v.code == kExitOk);
  CHECK(v.err.find("FAIL") == std::string::npos);
  CHECK(v.err.find("PASS f_check") != std::string::npos);
  CHECK(Json::parse(v.out)["result"]["suite"]["entries"].size() == 4);
  CHECK(run({"verify", data("unit_disk.json"), "--n", "3..1"}).code == kExitInvalidInput);

  const auto c = run({"capacity", data("segment.json"), "--m", "16", "--restarts", "2"});
  REQUIRE(c.code == kExitOk);
  const auto doc = Json::parse(c.out);
  CHECK(doc["result"]["exact"].get<double>() == doctest::Approx(1.0));
  CHECK(doc["result"]["fekete"]["points"].size() == 16);
  const auto iv = Json::parse(run({"capacity", data("two_intervals.json"), "--m", "16", "--restarts", "2"}).out);
  CHECK(iv["result"]["polya"]["holds"] == true);
  CHECK(run({"capacity", data("segment.json"), "--m", "1"}).code == kExitInvalidInput);
}
