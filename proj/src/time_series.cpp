#include "chainsim/time_series.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "chainsim/errors.hpp"

namespace chainsim {

void TimeSeries::add_channel(const std::string& label, std::vector<double> values) {
  if (values.size() != t_.size()) {
    throw InvalidInput("channel '" + label + "' has " + std::to_string(values.size()) +
                       " samples, grid has " + std::to_string(t_.size()));
  }
  if (has_channel(label)) throw InvalidInput("duplicate channel '" + label + "'");
  channels_.emplace_back(label, std::move(values));
}

bool TimeSeries::has_channel(const std::string& label) const {
  return std::any_of(channels_.begin(), channels_.end(),
                     [&](const auto& c) { return c.first == label; });
}

const std::vector<double>& TimeSeries::channel(const std::string& label) const {
  for (const auto& [name, values] : channels_) {
    if (name == label) return values;
  }
  throw InvalidInput("no channel '" + label + "' in series '" + name_ + "'");
}

std::string TimeSeries::to_csv() const {
  std::string out = "t";
  for (const auto& [label, values] : channels_) out += "," + label;
  out += "\n";
  for (std::size_t i = 0; i < t_.size(); ++i) {
    out += format_double(t_[i]);
    for (const auto& [label, values] : channels_) {
      out += ",";
      out += format_double(values[i]);
    }
    out += "\n";
  }
  return out;
}

std::vector<double> uniform_grid(double t_max, int n_points) {
  if (n_points < 2) throw InvalidInput("time grid needs at least 2 points");
  if (!(t_max > 0.0)) throw InvalidInput("t_max must be positive");
  std::vector<double> t(static_cast<std::size_t>(n_points));
  const double step = t_max / (n_points - 1);
  for (int i = 0; i < n_points; ++i) t[i] = step * i;
  t.back() = t_max;
  return t;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << contents;
  if (!f) throw Error("failed writing " + path.string());
}

}  // namespace chainsim
