#include <qgl/config.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace qgl;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_run_config(in);
}

Errc parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised for: " << text;
  return Errc::io;
}

struct EnvGuard {
  EnvGuard() { ::unsetenv(kWorkersEnv.data()); }
  ~EnvGuard() { ::unsetenv(kWorkersEnv.data()); }
};

}  // namespace

TEST(Config, Defaults) {
  const RunConfig c = parse("");
  EXPECT_EQ(c.n_min, 3);
  EXPECT_EQ(c.p_max, 3);
  EXPECT_EQ(c.starts, 200);
  EXPECT_FALSE(c.workers.has_value());
}

TEST(Config, ParsesKeys) {
  const RunConfig c = parse(
      "# comment\n"
      "n_min = 4\n"
      "n_max=5\n"
      "\n"
      "p_max = 2\r\n"
      "starts = 17\n"
      "seed = 99\n"
      "max_iterations = 40\n"
      "function_tolerance = 1e-6\n"
      "gradient_tolerance = 1e-9\n"
      "grid_resolution = 64\n"
      "output_dir = results/run one\n"
      "workers = 3\n");
  EXPECT_EQ(c.n_min, 4);
  EXPECT_EQ(c.n_max, 5);
  EXPECT_EQ(c.p_max, 2);
  EXPECT_EQ(c.starts, 17);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.optimizer.max_iterations, 40);
  EXPECT_DOUBLE_EQ(c.optimizer.function_tolerance, 1e-6);
  EXPECT_DOUBLE_EQ(c.optimizer.gradient_tolerance, 1e-9);
  EXPECT_EQ(c.optimizer.grid_resolution, 64);
  EXPECT_EQ(c.output_dir, "results/run one");
  EXPECT_EQ(c.workers, 3);
}

TEST(Config, Rejections) {
  EXPECT_EQ(parse_error("colour = blue\n"), Errc::parameter);
  EXPECT_EQ(parse_error("n_max\n"), Errc::parameter);
  EXPECT_EQ(parse_error("starts = many\n"), Errc::parameter);
  EXPECT_EQ(parse_error("starts = 0\n"), Errc::parameter);
  EXPECT_EQ(parse_error("n_max = 9\n"), Errc::parameter);
  EXPECT_EQ(parse_error("n_min = 2\n"), Errc::parameter);
  EXPECT_EQ(parse_error("n_min = 6\nn_max = 5\n"), Errc::parameter);
  EXPECT_EQ(parse_error("p_max = 4\n"), Errc::parameter);
  EXPECT_EQ(parse_error("workers = 0\n"), Errc::parameter);
  EXPECT_EQ(parse_error("grid_resolution = 16\n"), Errc::parameter);
}

TEST(Config, MissingFile) {
  try {
    read_run_config("/nonexistent/qgl.conf");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::io);
  }
}

TEST(Config, WorkerPrecedence) {
  EnvGuard guard;
  EXPECT_EQ(resolve_workers(std::nullopt), default_workers());
  EXPECT_EQ(resolve_workers(5), 5);
  ::setenv(kWorkersEnv.data(), "2", 1);
  EXPECT_EQ(resolve_workers(5), 2);
  EXPECT_EQ(resolve_workers(std::nullopt), 2);
  ::setenv(kWorkersEnv.data(), "0", 1);
  EXPECT_THROW(resolve_workers(5), Error);
  ::setenv(kWorkersEnv.data(), "lots", 1);
  EXPECT_THROW(resolve_workers(5), Error);
}
