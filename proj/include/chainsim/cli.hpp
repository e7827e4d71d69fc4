#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chainsim/errors.hpp"

namespace chainsim::cli {

enum class Command { Transfer, Mqc, Figure, Verify };
enum class CouplingModel { NearestNeighbor, Dipolar };
enum class Engine { Analytic, Oracle, Both };

struct RunConfig {
  Command command = Command::Transfer;
  std::string figure = "1";  // 1, 1-inset, 2, longrange, baseline
  std::optional<int> n;  // default depends on the command
  CouplingModel model = CouplingModel::NearestNeighbor;
  double d = 1.0;
  double exponent = 3.0;
  int a = 1;
  std::optional<int> b;  // defaults to n
  std::map<int, double> state;  // empty: single spin a
  std::optional<double> t_max;  // default 40 (verify: 20)
  std::optional<int> n_points;  // default 2000 (verify: 100)
  Engine engine = Engine::Analytic;
  std::filesystem::path out = "out";
  int mq_steps = 8;
};

int resolved_n(const RunConfig& config);
double resolved_t_max(const RunConfig& config);
int resolved_n_points(const RunConfig& config);

struct Violation {
  std::string message;
  bool resource = false;  // oracle cap exceeded
};

/// Carries every violation found, not only the first.
class InvalidConfig : public ConfigError {
 public:
  explicit InvalidConfig(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }
  bool resource_only() const;

 private:
  std::vector<Violation> violations_;
};

/// Overlay JSON keys onto `base`. Malformed JSON throws ConfigError with the
/// line number; bad keys and values are appended to `violations`.
RunConfig apply_json(RunConfig base, std::string_view raw, std::vector<Violation>& violations);

/// Invariant checks across fields (oracle cap, analytic engine needs NN, ...).
std::vector<Violation> check_invariants(const RunConfig& config);

/// Parse + check a flat JSON config; throws InvalidConfig listing all problems.
RunConfig validate_config(std::string_view raw, RunConfig base = {});

/// "1:1,21:0.5" -> {1: 1, 21: 0.5}
std::map<int, double> parse_state(std::string_view text);

Command parse_command(std::string_view name);
CouplingModel parse_model(std::string_view name);
Engine parse_engine(std::string_view name);
std::string_view to_string(Engine engine);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
inline constexpr int cross_check = 4;
}  // namespace exit_code

/// Executes a validated config, writing artifacts under config.out and one
/// summary line to `summary`. Returns the process exit code.
int run(const RunConfig& config, std::ostream& summary, std::ostream& diagnostics);

}  // namespace chainsim::cli
