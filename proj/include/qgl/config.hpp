#pragma once

// Run configuration read from flat key=value text. Blank lines and lines
// starting with '#' are ignored.

#include <qgl/enumerate.hpp>
#include <qgl/error.hpp>
#include <qgl/parallel.hpp>
#include <qgl/qaoa/optimize.hpp>

#include <fmt/format.h>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

namespace qgl {

inline constexpr std::string_view kWorkersEnv = "QGL_WORKERS";

struct RunConfig {
  int n_min = kMinEnumerationOrder;
  int n_max = 6;
  int p_max = kMaxDepth;
  int starts = 200;
  std::uint64_t seed = 1;
  OptimizerOptions optimizer;
  std::filesystem::path output_dir = "out";
  std::optional<int> workers;

  void validate() const {
    if (n_min < kMinEnumerationOrder || n_max > kMaxEnumerationOrder || n_min > n_max) {
      throw Error(Errc::parameter, fmt::format("n range {}..{} outside 3..8", n_min, n_max));
    }
    if (p_max < 0 || p_max > kMaxDepth) throw Error(Errc::parameter, fmt::format("p_max = {} outside 0..3", p_max));
    if (starts < 1) throw Error(Errc::parameter, "starts must be at least 1");
    if (workers && *workers < 1) throw Error(Errc::parameter, "workers must be at least 1");
    if (optimizer.grid_resolution < kMinGridResolution) {
      throw Error(Errc::parameter, fmt::format("grid_resolution must be at least {}", kMinGridResolution));
    }
  }
};

namespace config_detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T value(std::string_view key, std::string_view text) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::parameter, fmt::format("config key '{}': bad value '{}'", key, text));
  }
  return v;
}

}  // namespace config_detail

inline RunConfig parse_run_config(std::istream& in) {
  using config_detail::trim;
  using config_detail::value;
  RunConfig c;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::parameter, fmt::format("config line {}: expected key=value", line_no));
    }
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view val = trim(text.substr(eq + 1));
    if (key == "n_min") c.n_min = value<int>(key, val);
    else if (key == "n_max") c.n_max = value<int>(key, val);
    else if (key == "p_max") c.p_max = value<int>(key, val);
    else if (key == "starts") c.starts = value<int>(key, val);
    else if (key == "seed") c.seed = value<std::uint64_t>(key, val);
    else if (key == "max_iterations") c.optimizer.max_iterations = value<int>(key, val);
    else if (key == "function_tolerance") c.optimizer.function_tolerance = value<double>(key, val);
    else if (key == "gradient_tolerance") c.optimizer.gradient_tolerance = value<double>(key, val);
    else if (key == "grid_resolution") c.optimizer.grid_resolution = value<int>(key, val);
    else if (key == "output_dir") c.output_dir = std::string(val);
    else if (key == "workers") c.workers = value<int>(key, val);
    else throw Error(Errc::parameter, fmt::format("config line {}: unknown key '{}'", line_no, key));
  }
  c.validate();
  return c;
}

inline RunConfig read_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path.string());
  return parse_run_config(in);
}

/// QGL_WORKERS wins over the config key, which wins over the hardware count.
inline int resolve_workers(const std::optional<int>& configured) {
  if (const char* env = std::getenv(std::string(kWorkersEnv).c_str()); env && *env) {
    const int w = config_detail::value<int>(kWorkersEnv, env);
    if (w < 1) throw Error(Errc::parameter, fmt::format("{} must be at least 1", kWorkersEnv));
    return w;
  }
  return configured.value_or(default_workers());
}

}  // namespace qgl
