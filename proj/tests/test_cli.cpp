#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "logseries/fit.hpp"

namespace {

const char* cli_path() { return LOGSERIES_CLI_PATH; }

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string out_file = "cli_test_stdout.tmp";
  const std::string cmd = env + (env.empty() ? "" : " ") + cli_path() + " " +
                          args + " > " + out_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(out_file.c_str());
  return {WEXITSTATUS(raw), ss.str()};
}

// Re-serialize a CSV: every cell that parses fully as a double is
// re-printed with the writer's own format.
std::string reserialize(const std::string& csv) {
  std::string out;
  std::string cell;
  auto flush = [&] {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (!cell.empty() && end && *end == '\0') {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
    } else {
      out += cell;
    }
    cell.clear();
  };
  for (char c : csv) {
    if (c == ',' || c == '\n') {
      flush();
      out += c;
    } else {
      cell += c;
    }
  }
  flush();
  return out;
}

}  // namespace

TEST_CASE("sample subcommand: shape, determinism, validation") {
  const auto a = run("sample --p 0.6 --n 10 --seed 7");
  CHECK(a.exit_code == 0);
  std::stringstream ss(a.stdout_text);
  int lines = 0;
  long long v;
  while (ss >> v) {
    CHECK(v >= 1);
    ++lines;
  }
  CHECK(lines == 10);

  const auto b = run("sample --p 0.6 --n 10 --seed 7");
  CHECK(b.stdout_text == a.stdout_text);

  const auto bad = run("sample --p 1.2 --n 10 --seed 7");
  CHECK(bad.exit_code == 2);
  const auto edge = run("sample --p 1.0 --n 10 --seed 7");
  CHECK(edge.exit_code == 2);
}

TEST_CASE("estimate subcommand on a tiny sample") {
  {
    std::ofstream f("cli_test_sample.tmp");
    f << "1\n1\n2\n";
  }
  const auto res =
      run("estimate --in cli_test_sample.tmp --methods MLE,UMVUE --x 1 --x 4");
  CHECK(res.exit_code == 0);

  // MLE row carries the root of mean(p) = 4/3.
  std::stringstream ss(res.stdout_text);
  std::string line;
  std::getline(ss, line);
  CHECK(line ==
        "method,n,t,p_hat,converged,iterations,objective_value,x,pmf,cdf");
  bool saw_mle = false, saw_umvue_tail = false;
  while (std::getline(ss, line)) {
    std::stringstream cells(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    row.resize(10);
    if (row[0] == "MLE" && row[7] == "1") {
      const double p_hat = std::stod(row[3]);
      CHECK(std::abs(logseries::mean(logseries::Param(p_hat)) - 4.0 / 3.0) <
            1e-10);
      saw_mle = true;
    }
    // t=4, n=3: support ends at t-n+1 = 2, so x=4 is past it.
    if (row[0] == "UMVUE" && row[7] == "4") {
      CHECK(std::stod(row[8]) == 0.0);
      CHECK(std::stod(row[9]) == 1.0);
      saw_umvue_tail = true;
    }
  }
  CHECK(saw_mle);
  CHECK(saw_umvue_tail);

  CHECK(run("estimate --in cli_test_sample.tmp --methods BOGUS").exit_code == 2);
  {
    std::ofstream f("cli_test_sample.tmp");
  }
  CHECK(run("estimate --in cli_test_sample.tmp").exit_code == 2);
  {
    std::ofstream f("cli_test_sample.tmp");
    f << "1\n0\n";
  }
  CHECK(run("estimate --in cli_test_sample.tmp").exit_code == 2);
  std::remove("cli_test_sample.tmp");
}

TEST_CASE("simulate subcommand: shape, determinism, thread independence") {
  const std::string flags =
      "simulate --n 5,10 --replications 40 --seed 3 --methods UMVUE,MLE,LSE";
  const auto a = run(flags + " --threads 1");
  CHECK(a.exit_code == 0);
  int rows = 0;
  for (char c : a.stdout_text) rows += c == '\n';
  CHECK(rows == 1 + 2 * 3);  // header + (n, method) cells

  const auto b = run(flags + " --threads 1");
  CHECK(a.stdout_text == b.stdout_text);
  const auto c = run(flags + " --threads 4");
  CHECK(a.stdout_text == c.stdout_text);

  // Env var stands in for an absent --threads flag.
  const auto d = run(flags, "env LOGSERIES_THREADS=2");
  CHECK(a.stdout_text == d.stdout_text);

  CHECK(run("simulate --p 1.2").exit_code == 2);
  CHECK(run("simulate --methods NOPE").exit_code == 2);
}

TEST_CASE("simulate config file mirrors flags and flags win") {
  {
    std::ofstream f("cli_test_config.tmp");
    f << "# study manifest\n"
      << "p=0.5\nx=3\nn=5,10\nreplications=30\nseed=9\nmethods=UMVUE,MLE\n"
      << "threads=1\n";
  }
  const auto from_file = run("simulate --config cli_test_config.tmp");
  const auto from_flags =
      run("simulate --p 0.5 --x 3 --n 5,10 --replications 30 --seed 9 "
          "--methods UMVUE,MLE --threads 1");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.stdout_text == from_flags.stdout_text);

  // Flag overrides the file.
  const auto overridden =
      run("simulate --config cli_test_config.tmp --p 0.4");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.stdout_text != from_file.stdout_text);
  std::remove("cli_test_config.tmp");
}

TEST_CASE("true-variance flag adds exact columns for UMVUE rows") {
  const auto res = run(
      "simulate --n 4 --replications 20 --methods UMVUE,MLE --true-variance "
      "--threads 1");
  CHECK(res.exit_code == 0);
  std::stringstream ss(res.stdout_text);
  std::string header;
  std::getline(ss, header);
  CHECK(header.find("true_mse_pmf,true_mse_cdf") != std::string::npos);
  std::string line;
  while (std::getline(ss, line)) {
    std::stringstream cells(line);
    std::string cell;
    std::vector<std::string> row;
    while (std::getline(cells, cell, ',')) row.push_back(cell);
    row.resize(13);
    if (row[0] == "UMVUE") {
      CHECK(std::stod(row[11]) > 0.0);
      CHECK(std::stod(row[12]) > 0.0);
    } else {
      CHECK(row[11].empty());
      CHECK(row[12].empty());
    }
  }
}

TEST_CASE("emitted CSV survives a parse/re-serialize round trip") {
  const auto sim =
      run("simulate --n 5 --replications 25 --threads 1 --true-variance");
  CHECK(sim.exit_code == 0);
  CHECK(reserialize(sim.stdout_text) == sim.stdout_text);
}

TEST_CASE("stirling capacity exhaustion exits with code 3") {
  const auto res = run(
      "simulate --n 5 --x 1 --replications 50 --methods UMVUE "
      "--stirling-cap 6");
  CHECK(res.exit_code == 3);
}
