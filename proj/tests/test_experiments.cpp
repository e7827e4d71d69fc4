#include "doctest.h"

#include "chainsim/errors.hpp"
#include "chainsim/experiments.hpp"
#include "chainsim/fermion_analytic.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "json.hpp"

using namespace chainsim;
using namespace chainsim::experiments;

TEST_CASE("local extrema, plateaus and prominence") {
  const std::vector<double> y = {0, 2, 1, 3, 3, 0, 1, 0.5, 4, 0};
  CHECK(local_maxima(y) == std::vector<std::size_t>{1, 3, 6, 8});
  CHECK(local_minima(y) == std::vector<std::size_t>{2, 5, 7});
  CHECK(prominence(y, 8) == doctest::Approx(4.0));
  CHECK(prominence(y, 1) == doctest::Approx(1.0));
  CHECK(prominence(y, 6) == doctest::Approx(0.5));
  CHECK(prominent_maxima(y, 0.5) == std::vector<std::size_t>{3, 8});
}

TEST_CASE("mean spacing of peaks") {
  const std::vector<double> t = {0, 1, 2, 3, 4, 5, 6};
  CHECK(mean_spacing(t, {1, 3, 6}) == doctest::Approx(2.5));
  CHECK(mean_spacing(t, {2}) == 0.0);
}

TEST_CASE("first significant extremum skips numerical noise") {
  const std::vector<double> y = {0.0, 1e-9, 0.0, -0.2, -0.5, -0.1, 0.8, 0.0};
  const auto i = first_significant_extremum(y);
  REQUIRE(i.has_value());
  CHECK(*i == 4);
  CHECK_FALSE(first_significant_extremum(std::vector<double>(5, 0.0)).has_value());
}

TEST_CASE("Brent refinement of a maximum") {
  const auto [t, f] = refine_maximum([](double x) { return 2.0 - (x - 1.25) * (x - 1.25); }, 0.0, 3.0);
  CHECK(t == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(f == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("time series CSV layout") {
  TimeSeries s("demo", {0.0, 0.5});
  s.add_channel("A", {1.0, 2.0});
  s.add_channel("B", {-1.0, 0.25});
  CHECK(s.to_csv() == "t,A,B\n0,1,-1\n0.5,2,0.25\n");
  CHECK(s.to_csv().substr(0, 6) == "t,A,B\n");
  CHECK_THROWS(s.add_channel("A", {0.0, 0.0}));
  CHECK_THROWS(s.add_channel("C", {0.0}));
  CHECK_THROWS(s.channel("missing"));
  const auto g = uniform_grid(2.0, 5);
  CHECK(g == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
}

TEST_CASE("reports write CSV and JSON") {
  const auto dir = std::filesystem::temp_directory_path() / "chainsim_report_test";
  std::filesystem::remove_all(dir);
  const auto report = figure1_transfer(5, {4.0, 41});
  const auto files = report.write(dir);
  REQUIRE(files.size() == 2);
  for (const auto& f : files) CHECK(std::filesystem::exists(f));
  std::ifstream json_in(dir / "figure1_transfer.json");
  const auto doc = nlohmann::json::parse(json_in);
  CHECK(doc.contains("summary"));
  CHECK(doc["summary"]["max_abs_diff"].get<double>() < 1e-12);
  std::filesystem::remove_all(dir);
}

TEST_CASE("figure 1 channels superimpose and peak where expected") {
  const auto r = figure1_transfer(3, {6.0, 601});
  const auto& s = r.find_series("figure1_transfer");
  CHECK(s.has_channel("P_xy_1N"));
  CHECK(s.has_channel("P_dq_1N"));
  CHECK(r.summary.at("max_abs_diff") < 1e-12);
  CHECK(r.summary.at("refined_peak_time") == doctest::Approx(std::numbers::pi / std::sqrt(2.0)).epsilon(1e-8));
  CHECK(r.summary.at("refined_peak_transfer") == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("inset parity for short chains") {
  const auto r = figure1_inset_parity(6, 7, {20.0, 2000});
  CHECK(r.summary.at("sign_even") == -1.0);
  CHECK(r.summary.at("sign_odd") == 1.0);
  CHECK(r.summary.at("signs_differ") == 1.0);
}

TEST_CASE("figure 2 channels obey the sum rule") {
  const auto r = figure2_mqc(9, {20.0, 400});
  const auto& s = r.series.front();
  for (const char* c : {"J0", "J2", "J0_collective", "J2_collective", "J0_single_end", "J2_single_end", "P_1N"}) {
    CHECK(s.has_channel(c));
  }
  CHECK(r.summary.at("sum_rule_max_error") < 1e-12);
  CHECK(s.channel("J0").front() == doctest::Approx(1.0));
  CHECK(s.channel("J2").front() == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("long-range comparison reaches higher orders") {
  const auto r = longrange_comparison(5, 3.0, {10.0, 60});
  CHECK(r.summary.at("max_order_nn") == 2.0);
  CHECK(r.summary.at("max_order_longrange") >= 4.0);
  CHECK(r.summary.at("max_deviation") > 1e-3);
  CHECK_THROWS_AS(longrange_comparison(13), ResourceLimit);
}

TEST_CASE("dipolar baseline stays below the XY transfer") {
  const auto r = dipolar_baseline(5, {20.0, 400});
  CHECK(r.summary.at("max_P_1N_dipolar") < r.summary.at("max_P_1N_xy"));
}

TEST_CASE("engines agree on a small chain") {
  const auto r = verify_engines(4, {10.0, 30});
  CHECK(r.summary.at("passed") == 1.0);
  CHECK(r.summary.at("max_dev") < 1e-10);
}

TEST_CASE("beat maxima separate dominant peaks from ripples") {
  std::vector<double> y;
  for (int i = 0; i <= 4000; ++i) {
    const double t = i * 0.01;
    y.push_back((1.0 - 0.005 * t) * std::pow(std::cos(t), 8) +
                0.05 * std::pow(std::sin(t), 4) * std::cos(9.0 * t));
  }
  const auto beats = beat_maxima(y);
  const std::vector<double> t = uniform_grid(40.0, 4001);
  CHECK(beats.size() == 12);
  CHECK(mean_spacing(t, beats) == doctest::Approx(std::numbers::pi).epsilon(1e-3));
}
