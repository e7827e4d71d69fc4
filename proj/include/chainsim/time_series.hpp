#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace chainsim {

/// Sampled trajectories sharing one time grid (units of 1/d).
class TimeSeries {
 public:
  TimeSeries() = default;
  TimeSeries(std::string name, std::vector<double> t) : name_(std::move(name)), t_(std::move(t)) {}

  const std::string& name() const { return name_; }
  const std::vector<double>& t() const { return t_; }

  /// Throws InvalidInput if the length differs from the time grid or the
  /// channel already exists.
  void add_channel(const std::string& label, std::vector<double> values);
  const std::vector<double>& channel(const std::string& label) const;
  bool has_channel(const std::string& label) const;
  const std::vector<std::pair<std::string, std::vector<double>>>& channels() const {
    return channels_;
  }

  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  /// Header `t,<channel>,...`; values in shortest round-trip decimal.
  std::string to_csv() const;

 private:
  std::string name_;
  std::vector<double> t_;
  std::vector<std::pair<std::string, std::vector<double>>> channels_;
  std::map<std::string, std::string> metadata_;
};

/// n_points samples evenly spaced on [0, t_max], both ends included.
std::vector<double> uniform_grid(double t_max, int n_points);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace chainsim
