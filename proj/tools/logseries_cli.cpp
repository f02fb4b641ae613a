// Command-line front end: sampling, fitting, exact UMVUE variances and
// the Monte Carlo estimator-comparison study, all emitted as CSV.
//
// Exit codes: 0 success, 2 usage/validation error, 3 capacity error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logseries/simulation.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// NaN cells are left empty.
std::string cell(double v) { return std::isnan(v) ? "" : fmt17(v); }

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  // Empty path means stdout.
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open output path: " << path << "\n";
      return false;
    }
    stream = &file;
    return true;
  }
};

std::vector<logseries::Method> parse_methods(const std::string& csv) {
  std::vector<logseries::Method> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(logseries::method_from_name(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty method list");
  return out;
}

int run_sample(double p, int n, std::uint64_t seed, const std::string& out_path) {
  Output out;
  if (!out.open(out_path)) return kExitValidation;
  const auto values = logseries::sample(logseries::Param(p), n, seed);
  for (int v : values) *out.stream << v << "\n";
  return 0;
}

int run_estimate(const std::string& in_path, const std::string& methods_csv,
                 std::vector<int> x_list, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "error: cannot read input path: " << in_path << "\n";
    return kExitValidation;
  }
  std::vector<int> values;
  long long v;
  while (in >> v) {
    if (v < 1) {
      std::cerr << "error: sample values must be integers >= 1\n";
      return kExitValidation;
    }
    values.push_back(static_cast<int>(v));
  }
  if (values.empty()) {
    std::cerr << "error: empty input sample\n";
    return kExitValidation;
  }
  const logseries::Sample sample(values);
  const auto methods = parse_methods(methods_csv);
  if (x_list.empty()) x_list = {1};
  for (int x : x_list) {
    if (x < 1) {
      std::cerr << "error: evaluation points must be >= 1\n";
      return kExitValidation;
    }
  }

  Output out;
  if (!out.open(out_path)) return kExitValidation;
  logseries::LogStirlingTable table;
  *out.stream << "method,n,t,p_hat,converged,iterations,objective_value,x,pmf,cdf\n";
  for (auto method : methods) {
    if (method == logseries::Method::Umvue) {
      for (int x : x_list) {
        *out.stream << "UMVUE," << sample.n() << ',' << sample.t() << ",,,,,"
                    << x << ',' << fmt17(logseries::umvue_pmf(sample, x, table))
                    << ',' << fmt17(logseries::umvue_cdf(sample, x, table))
                    << "\n";
      }
      continue;
    }
    const logseries::FitResult f = logseries::fit(method, sample);
    for (int x : x_list) {
      *out.stream << logseries::method_name(method) << ',' << sample.n() << ','
                  << sample.t() << ',' << fmt17(f.p_hat) << ','
                  << (f.converged ? 1 : 0) << ',' << f.iterations << ','
                  << fmt17(f.objective_value) << ',' << x << ','
                  << fmt17(logseries::plugin_pmf(f, x)) << ','
                  << fmt17(logseries::plugin_cdf(f, x)) << "\n";
    }
  }
  return 0;
}

// Simple key=value manifest mirroring the simulate flags.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line is not key=value: " + line);
    }
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

int run_simulate(logseries::StudyConfig config, bool true_variance,
                 std::size_t stirling_cap, const std::string& out_path) {
  config.validate();
  Output out;
  if (!out.open(out_path)) return kExitValidation;
  logseries::LogStirlingTable table(stirling_cap);
  const auto result = logseries::run_study(config, table);

  std::map<int, logseries::TrueMseRow> exact;
  if (true_variance) {
    for (const auto& row : logseries::true_mse_umvue(config, table)) {
      exact[row.n] = row;
    }
  }

  *out.stream << "method,n,p,x,replications,mse_pmf,mse_cdf,bias_pmf,bias_cdf,"
                 "mean_estimate,failure_count";
  if (true_variance) *out.stream << ",true_mse_pmf,true_mse_cdf";
  *out.stream << "\n";
  for (const auto& c : result.cells) {
    *out.stream << logseries::method_name(c.method) << ',' << c.n << ','
                << fmt17(config.p_true) << ',' << config.x_eval << ','
                << config.replications << ',' << fmt17(c.mse_pmf) << ','
                << fmt17(c.mse_cdf) << ',' << fmt17(c.bias_pmf) << ','
                << fmt17(c.bias_cdf) << ',' << cell(c.mean_estimate) << ','
                << c.failure_count;
    if (true_variance) {
      if (c.method == logseries::Method::Umvue) {
        *out.stream << ',' << fmt17(exact.at(c.n).mse_pmf) << ','
                    << fmt17(exact.at(c.n).mse_cdf);
      } else {
        *out.stream << ",,";
      }
    }
    *out.stream << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic series distribution: sampling, PMF/CDF "
               "estimators and the Monte Carlo comparison study"};
  app.require_subcommand(1);

  const auto p_range =
      CLI::Range(0.0, 1.0).description("requires 0<p<1 (open interval)");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Draw random variates");
  double s_p = 0.6;
  int s_n = 1;
  std::uint64_t s_seed = 1;
  std::string s_out;
  sample_cmd->add_option("--p", s_p, "parameter, 0<p<1")->required()
      ->check(p_range);
  sample_cmd->add_option("--n", s_n, "number of draws")->required()
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", s_seed, "RNG seed")->required();
  sample_cmd->add_option("--out", s_out, "output path (default stdout)");

  // estimate
  auto* est_cmd = app.add_subcommand("estimate", "Fit estimators to a sample");
  std::string e_in;
  std::string e_methods = "UMVUE,MLE,LSE,WLSE,PCE";
  std::vector<int> e_x;
  std::string e_out;
  est_cmd->add_option("--in", e_in, "input file, one integer per line")
      ->required();
  est_cmd->add_option("--methods", e_methods,
                      "comma list of UMVUE,MLE,LSE,WLSE,PCE");
  est_cmd->add_option("--x", e_x, "evaluation points (repeatable)");
  est_cmd->add_option("--out", e_out, "output path (default stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Run the Monte Carlo study");
  logseries::StudyConfig config;
  std::string m_methods, m_config, m_out, m_ngrid;
  bool true_variance = false;
  auto* op = sim_cmd->add_option("--p", config.p_true, "true parameter")
      ->check(p_range);
  auto* ox = sim_cmd->add_option("--x", config.x_eval, "evaluation point");
  auto* on = sim_cmd->add_option("--n", m_ngrid, "comma list of sample sizes");
  auto* orep = sim_cmd->add_option("--replications", config.replications,
                                   "replications per cell");
  auto* oseed = sim_cmd->add_option("--seed", config.seed, "RNG seed");
  auto* ometh = sim_cmd->add_option("--methods", m_methods,
                                    "comma list of methods");
  auto* othr = sim_cmd->add_option("--threads", config.threads,
                                   "worker threads, 0 = auto");
  auto* oeps = sim_cmd->add_option("--eps", config.eps,
                                   "series truncation tolerance");
  std::size_t stirling_cap = 50000;
  sim_cmd->add_option("--stirling-cap", stirling_cap,
                      "row cap for the Stirling table");
  sim_cmd->add_flag("--true-variance", true_variance,
                    "add exact UMVUE MSE columns");
  sim_cmd->add_option("--config", m_config, "key=value manifest; flags win");
  sim_cmd->add_option("--out", m_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (sample_cmd->parsed()) {
      if (s_p <= 0.0 || s_p >= 1.0) {
        std::cerr << "error: requires 0<p<1 (open interval)\n";
        return kExitValidation;
      }
      return run_sample(s_p, s_n, s_seed, s_out);
    }
    if (est_cmd->parsed()) {
      return run_estimate(e_in, e_methods, e_x, e_out);
    }
    // simulate: config file fills in whatever flags were not given.
    if (!m_config.empty()) {
      const auto kv = read_config(m_config);
      auto get = [&](const char* key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
      };
      if (auto* s = get("p"); s && op->count() == 0) config.p_true = std::stod(*s);
      if (auto* s = get("x"); s && ox->count() == 0) config.x_eval = std::stoi(*s);
      if (auto* s = get("n"); s && on->count() == 0) m_ngrid = *s;
      if (auto* s = get("replications"); s && orep->count() == 0)
        config.replications = std::stoi(*s);
      if (auto* s = get("seed"); s && oseed->count() == 0)
        config.seed = std::stoull(*s);
      if (auto* s = get("methods"); s && ometh->count() == 0) m_methods = *s;
      if (auto* s = get("threads"); s && othr->count() == 0)
        config.threads = std::stoi(*s);
      if (auto* s = get("eps"); s && oeps->count() == 0)
        config.eps = std::stod(*s);
      if (auto* s = get("true-variance"); s) true_variance = *s != "0";
    }
    if (!m_ngrid.empty()) config.sample_sizes = parse_int_list(m_ngrid);
    if (!m_methods.empty()) config.methods = parse_methods(m_methods);
    if (othr->count() == 0) {
      if (const char* env = std::getenv("LOGSERIES_THREADS")) {
        config.threads = std::atoi(env);
      }
    }
    if (config.p_true <= 0.0 || config.p_true >= 1.0) {
      std::cerr << "error: requires 0<p<1 (open interval)\n";
      return kExitValidation;
    }
    return run_simulate(config, true_variance, stirling_cap, m_out);
  } catch (const logseries::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
