#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainsim/time_series.hpp"

namespace chainsim::experiments {

/// Largest chain for which experiments also run the dense oracle and compare.
inline constexpr int kCrossCheckMaxSpins = 8;
inline constexpr double kCrossCheckTolerance = 1e-10;

struct ExperimentReport {
  std::string name;
  std::vector<TimeSeries> series;
  std::map<std::string, double> summary;

  const TimeSeries& find_series(const std::string& series_name) const;
  /// Metadata of every series plus the summary, as a JSON document.
  std::string to_json() const;
  /// One CSV per series named <series>_<n>_<engine>.csv plus <name>.json.
  /// Returns the written paths.
  std::vector<std::filesystem::path> write(const std::filesystem::path& dir) const;
};

struct GridSpec {
  double t_max = 40.0;
  int n_points = 2000;
};

// Peak helpers over uniformly sampled data. Extrema are strict three-point
// comparisons; on a plateau the earliest sample wins.
std::vector<std::size_t> local_maxima(const std::vector<double>& y);
std::vector<std::size_t> local_minima(const std::vector<double>& y);
/// Height of peak i above the higher of its two bounding minima.
double prominence(const std::vector<double>& y, std::size_t i);
/// Local maxima whose prominence is at least `relative` times the largest
/// prominence among all local maxima.
std::vector<std::size_t> prominent_maxima(const std::vector<double>& y, double relative = 0.5);
/// Local maxima above the widest ratio gap in the sorted prominences, which
/// separates the dominant beats from secondary ripples. Peaks below
/// `floor` times the largest prominence are ignored when locating the gap.
std::vector<std::size_t> beat_maxima(const std::vector<double>& y, double floor = 0.05);
/// Mean spacing of consecutive peak times; 0 with fewer than two peaks.
double mean_spacing(const std::vector<double>& t, const std::vector<std::size_t>& peaks);
/// First local extremum with |y| >= relative * max |y|.
std::optional<std::size_t> first_significant_extremum(const std::vector<double>& y, double relative = 0.01);

/// Maximize f on [lo, hi] (unimodal bracket) to ~1e-12 in t. Returns {t*, f(t*)}.
std::pair<double, double> refine_maximum(const std::function<double(double)>& f, double lo,
                                         double hi);

/// End-to-end transfer under H_xy and H_dq from spin 1 to spin N.
/// Channels P_xy_1N, P_dq_1N. Summary: max_abs_diff, peak_transfer, peak_time,
/// refined_peak_transfer, refined_peak_time.
ExperimentReport figure1_transfer(int n = 21, GridSpec grid = {}, double d = 1.0);

/// End-to-end P_dq for an even and an odd chain. Summary: sign_even, sign_odd
/// (sign of the first significant extremum) and signs_differ.
ExperimentReport figure1_inset_parity(int n_even = 20, int n_odd = 21, GridSpec grid = {},
                                      double d = 1.0);

/// MQC intensities for sigma_z^1 + sigma_z^N, collective variants, the
/// single-end reference run and P_1N. Summary: beat periods, their ratio,
/// and the alignment of every second beat with a P_1N maximum.
ExperimentReport figure2_mqc(int n = 21, GridSpec grid = {}, double d = 1.0);

/// Oracle DQ end-to-end transfer for NN vs power-law couplings.
ExperimentReport longrange_comparison(int n = 6, double exponent = 3.0,
                                      GridSpec grid = {20.0, 200}, double d = 1.0);

/// Full analytic-vs-oracle comparison on a NN chain: P_xy and P_dq for all
/// pairs, per-spin and collective J0/J2 for every single-spin state, and the
/// phase-encoded protocol against the direct decomposition. Summary holds the
/// max absolute deviation per quantity and `passed` (all <= tolerance).
ExperimentReport verify_engines(int n, GridSpec grid = {20.0, 100}, double d = 1.0,
                                double tolerance = kCrossCheckTolerance);

/// Oracle P_1N under the secular dipolar Hamiltonian vs H_xy on the same NN table.
ExperimentReport dipolar_baseline(int n = 6, GridSpec grid = {20.0, 400}, double d = 1.0);

}  // namespace chainsim::experiments
