// Copyright 2026 The eqnn authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eqnn/harness/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "eqnn/repsn/irreps.hpp"

namespace eqnn::harness {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ValidationError("config line " + std::to_string(line) + ": " + message);
}

}  // namespace

std::string serialize(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "experiment = " << cfg.experiment << "\n";
  out << "n = " << cfg.n << "\n";
  out << "n_min = " << cfg.n_min << "\n";
  out << "n_max = " << cfg.n_max << "\n";
  out << "depth_rule = " << cfg.depth_rule << "\n";
  out << "family = " << cfg.family << "\n";
  out << "gen = " << cfg.gen << "\n";
  out << "obs = " << cfg.obs << "\n";
  out << "samples = " << cfg.samples << "\n";
  out << "states = " << cfg.states << "\n";
  out << "params = " << cfg.params << "\n";
  out << "draws = " << cfg.draws << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "out = " << cfg.out << "\n";
  out << "p = " << format_double(cfg.p) << "\n";
  out << "phi = " << format_double(cfg.phi) << "\n";
  out << "restarts = " << cfg.restarts << "\n";
  out << "trials = " << cfg.trials << "\n";
  out << "train_size = " << cfg.train_size << "\n";
  out << "test_size = " << cfg.test_size << "\n";
  out << "graphs = " << cfg.graphs << "\n";
  out << "hea = " << (cfg.hea ? 1 : 0) << "\n";
  return out.str();
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "experiment") {
        cfg.experiment = value;
      } else if (key == "n") {
        cfg.n = std::stoi(value);
      } else if (key == "n_min") {
        cfg.n_min = std::stoi(value);
      } else if (key == "n_max") {
        cfg.n_max = std::stoi(value);
      } else if (key == "n_range") {
        const auto colon = value.find(':');
        if (colon == std::string::npos) fail(line_no, "n_range needs 'lo:hi'");
        cfg.n_min = std::stoi(value.substr(0, colon));
        cfg.n_max = std::stoi(value.substr(colon + 1));
      } else if (key == "depth_rule") {
        cfg.depth_rule = value;
      } else if (key == "family") {
        cfg.family = value;
      } else if (key == "gen") {
        cfg.gen = value;
      } else if (key == "obs") {
        cfg.obs = value;
      } else if (key == "samples") {
        cfg.samples = std::stoi(value);
      } else if (key == "states") {
        cfg.states = std::stoi(value);
      } else if (key == "params") {
        cfg.params = std::stoi(value);
      } else if (key == "draws") {
        cfg.draws = std::stoi(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "out") {
        cfg.out = value;
      } else if (key == "p") {
        cfg.p = std::stod(value);
      } else if (key == "phi") {
        cfg.phi = std::stod(value);
      } else if (key == "restarts") {
        cfg.restarts = std::stoi(value);
      } else if (key == "trials") {
        cfg.trials = std::stoi(value);
      } else if (key == "train_size") {
        cfg.train_size = std::stoi(value);
      } else if (key == "test_size") {
        cfg.test_size = std::stoi(value);
      } else if (key == "graphs") {
        cfg.graphs = std::stoi(value);
      } else if (key == "hea") {
        cfg.hea = std::stoi(value) != 0;
      } else {
        fail(line_no, "unknown key '" + key + "'");
      }
    } catch (const ValidationError&) {
      throw;
    } catch (...) {
      fail(line_no, "bad value '" + value + "' for key '" + key + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<int> config_sizes(const ExperimentConfig& cfg) {
  if (cfg.n > 0) return {cfg.n};
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
    throw ValidationError("config: need n or a valid n_min..n_max range");
  }
  std::vector<int> sizes;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) sizes.push_back(n);
  return sizes;
}

int resolve_depth(const std::string& rule, int n) {
  if (rule.empty()) throw ValidationError("depth rule: empty");
  auto parse_count = [&](const std::string& s) {
    if (s.empty()) return 1;
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size() || v < 1) throw ValidationError("depth rule: bad multiplier " + s);
      return v;
    } catch (const ValidationError&) {
      throw;
    } catch (...) {
      throw ValidationError("depth rule: bad multiplier " + s);
    }
  };
  if (rule.size() >= 2 && rule.substr(rule.size() - 2) == "te") {
    const auto te = static_cast<int>(repsn::tetrahedral(n));
    return parse_count(rule.substr(0, rule.size() - 2)) * te;
  }
  if (rule.back() == 'n') {
    return parse_count(rule.substr(0, rule.size() - 1)) * n;
  }
  try {
    std::size_t used = 0;
    const int v = std::stoi(rule, &used);
    if (used != rule.size() || v < 1) throw ValidationError("depth rule: bad value " + rule);
    return v;
  } catch (const ValidationError&) {
    throw;
  } catch (...) {
    throw ValidationError("depth rule: bad value " + rule);
  }
}

}  // namespace eqnn::harness
