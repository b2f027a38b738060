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

#include "eqnn/harness/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include "json.hpp"

#include "eqnn/harness/csv.hpp"
#include "eqnn/qsim/block_model.hpp"
#include "eqnn/qsim/generalization.hpp"
#include "eqnn/qsim/train.hpp"
#include "eqnn/repsn/irreps.hpp"
#include "eqnn/states/dataset.hpp"
#include "eqnn/states/families.hpp"
#include "eqnn/variance/classify.hpp"
#include "eqnn/variance/delta.hpp"
#include "eqnn/variance/empirical.hpp"
#include "eqnn/variance/predict.hpp"

namespace eqnn::harness {

namespace {

using qsim::Generator;
using qsim::Measurement;

states::StateFamilySpec spec_from_config(const ExperimentConfig& cfg) {
  states::StateFamilySpec spec = states::parse_family(cfg.family);
  if (cfg.family == "er") spec.p = cfg.p;
  spec.phi = cfg.phi;
  return spec;
}

int cycle_offset(Generator g) {
  for (int i = 0; i < 3; ++i) {
    if (repsn::kGeneratorCycle[i] == g) return i;
  }
  throw ValidationError("unknown generator");
}

// Draw keys: inputs use (size, index); angle draws tag the high bit so the
// two streams never collide.
std::uint64_t input_key(int n, int i) {
  return (static_cast<std::uint64_t>(n) << 40) | static_cast<std::uint64_t>(i);
}
std::uint64_t angle_key(int n, std::int64_t draw) {
  return 0x8000000000000000ull | (static_cast<std::uint64_t>(n) << 40) |
         static_cast<std::uint64_t>(draw);
}

std::vector<Vec> draw_inputs(const ExperimentConfig& cfg, const states::StateFamilySpec& spec,
                             int n) {
  std::vector<Vec> inputs;
  inputs.reserve(static_cast<std::size_t>(cfg.states));
  for (int i = 0; i < cfg.states; ++i) {
    Rng rng = Rng::for_item(cfg.seed, input_key(n, i));
    inputs.push_back(states::sample_state(spec, n, rng));
  }
  return inputs;
}

// Pools cfg.params derivative draws per input at the given layer positions.
std::vector<std::vector<double>> pooled_gradients(const ExperimentConfig& cfg,
                                                  const qsim::BlockModel& model, int layers,
                                                  const std::vector<int>& positions,
                                                  const std::vector<Vec>& inputs) {
  const std::vector<Generator> gens = qsim::cycle_generators(layers);
  std::vector<std::vector<double>> pools(positions.size());
  std::vector<qsim::Layer> circ(gens.size());
  RVec grad;
  const int n = model.n();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto sbar = model.compile({inputs[i]}, {1.0});
    for (int j = 0; j < cfg.params; ++j) {
      const std::int64_t draw = static_cast<std::int64_t>(i) * cfg.params + j;
      Rng rng = Rng::for_item(cfg.seed, angle_key(n, draw));
      for (std::size_t l = 0; l < gens.size(); ++l) {
        circ[l] = qsim::Layer{gens[l], rng.uniform(-kPi, kPi)};
      }
      model.loss_and_grad(circ, sbar, grad);
      for (std::size_t p = 0; p < positions.size(); ++p) {
        pools[p].push_back(grad[positions[p]]);
      }
    }
  }
  return pools;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file " + path);
  return out;
}

}  // namespace

void cmd_variance_scan(const ExperimentConfig& cfg, std::ostream& out) {
  const states::StateFamilySpec spec = spec_from_config(cfg);
  const Generator gen = repsn::parse_generator(cfg.gen);
  const Measurement obs = repsn::parse_measurement(cfg.obs);
  csv_row(out, {"n", "family", "samples", "mean_grad", "var_grad", "stderr"});
  for (const int n : config_sizes(cfg)) {
    const int layers = resolve_depth(cfg.depth_rule, n);
    const qsim::BlockModel model(n, obs);
    const int pos = variance::middle_positions(layers)[static_cast<std::size_t>(
        cycle_offset(gen))];
    const auto inputs = draw_inputs(cfg, spec, n);
    const auto pools = pooled_gradients(cfg, model, layers, {pos}, inputs);
    const variance::EmpiricalEstimate est = variance::sample_stats(pools[0]);
    csv_row(out, {csv_num(n), states::family_name(spec), csv_num(est.samples),
                  csv_num(est.mean), csv_num(est.variance), csv_num(est.variance_stderr)});
  }
}

void cmd_compare_analytic(const ExperimentConfig& cfg, std::ostream& out) {
  const states::StateFamilySpec spec = spec_from_config(cfg);
  const Measurement obs = repsn::parse_measurement(cfg.obs);
  const Generator gens[3] = {Generator::SumX, Generator::SumY, Generator::SumZZ};
  csv_row(out,
          {"n", "generator", "phi", "predicted", "empirical", "stderr", "agree_3sigma"});
  for (const int n : config_sizes(cfg)) {
    const int layers = resolve_depth(cfg.depth_rule, n);
    const qsim::BlockModel model(n, obs);
    const auto middles = variance::middle_positions(layers);
    const auto inputs = draw_inputs(cfg, spec, n);

    std::vector<int> positions(3);
    for (int g = 0; g < 3; ++g) {
      positions[static_cast<std::size_t>(g)] =
          middles[static_cast<std::size_t>(cycle_offset(gens[g]))];
    }
    const auto pools = pooled_gradients(cfg, model, layers, positions, inputs);

    for (int g = 0; g < 3; ++g) {
      double predicted = 0.0;
      for (const Vec& psi : inputs) {
        predicted +=
            variance::predicted_variance(gens[g], obs, {psi}, {1.0}, model.basis()).total;
      }
      predicted /= static_cast<double>(inputs.size());
      const variance::EmpiricalEstimate est =
          variance::sample_stats(pools[static_cast<std::size_t>(g)]);
      const bool agree = std::abs(predicted - est.variance) <= 3.0 * est.variance_stderr;
      csv_row(out, {csv_num(n), repsn::generator_name(gens[g]), csv_num(cfg.phi),
                    csv_num(predicted), csv_num(est.variance), csv_num(est.variance_stderr),
                    csv_num(agree ? 1 : 0)});
    }
  }
}

void cmd_irrep_contributions(const ExperimentConfig& cfg, std::ostream& out) {
  const states::StateFamilySpec spec = spec_from_config(cfg);
  const Generator gen = repsn::parse_generator(cfg.gen);
  const Measurement obs = repsn::parse_measurement(cfg.obs);
  csv_row(out, {"n", "lambda_m", "d_lambda", "m_lambda", "delta_H", "delta_O", "delta_sigma",
                "prefactor", "contribution", "total"});
  for (const int n : config_sizes(cfg)) {
    const repsn::SchurBasis basis(n);
    const auto inputs = draw_inputs(cfg, spec, n);
    const auto& irreps = basis.irreps();

    std::vector<double> mean_sigma(irreps.size(), 0.0);
    for (const Vec& psi : inputs) {
      for (std::size_t b = 0; b < irreps.size(); ++b) {
        mean_sigma[b] += variance::delta(basis.state_block_sum(static_cast<int>(b), psi));
      }
    }
    for (double& v : mean_sigma) v /= static_cast<double>(inputs.size());

    std::vector<variance::BlockContribution> recs;
    double total = 0.0;
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      const auto& ir = irreps[b];
      variance::BlockContribution rec;
      rec.irrep = ir;
      rec.delta_sigma = mean_sigma[b];
      rec.delta_h = variance::generator_block_delta(gen, ir.dim, n);
      rec.delta_o = variance::observable_block_delta(obs, ir.dim, n);
      if (ir.dim > 1) {
        const auto d = static_cast<double>(ir.dim);
        rec.prefactor = 2.0 * d / ((d * d - 1.0) * (d * d - 1.0));
      }
      rec.contribution = rec.prefactor * rec.delta_h * rec.delta_o * rec.delta_sigma;
      total += rec.contribution;
      recs.push_back(rec);
    }
    for (const auto& rec : recs) {
      csv_row(out, {csv_num(n), csv_num(rec.irrep.m), csv_num(rec.irrep.dim),
                    csv_num(rec.irrep.mult), csv_num(rec.delta_h), csv_num(rec.delta_o),
                    csv_num(rec.delta_sigma), csv_num(rec.prefactor),
                    csv_num(rec.contribution), csv_num(total)});
    }
  }
}

void cmd_qfim_scan(const ExperimentConfig& cfg, std::ostream& out) {
  const states::StateFamilySpec spec = spec_from_config(cfg);
  struct Summary {
    int n, graph_id, l_ovp;
    std::uint64_t te;
  };
  std::vector<Summary> summaries;
  csv_row(out, {"n", "graph_id", "L", "rank"});
  for (const int n : config_sizes(cfg)) {
    const int l_max = resolve_depth(cfg.depth_rule, n);
    for (int gid = 0; gid < cfg.graphs; ++gid) {
      Rng rng = Rng::for_item(cfg.seed, input_key(n, gid));
      const Vec psi = states::sample_state(spec, n, rng);
      Rng angle_rng = Rng::for_item(cfg.seed, angle_key(n, gid));
      const qsim::OverparamResult res = qsim::find_overparam_depth(n, psi, l_max, angle_rng);
      for (int l = 1; l <= l_max; ++l) {
        csv_row(out, {csv_num(n), csv_num(gid), csv_num(l),
                      csv_num(res.ranks[static_cast<std::size_t>(l - 1)])});
      }
      summaries.push_back({n, gid, res.l_ovp, repsn::tetrahedral(n)});
    }
  }
  out << "\n";
  csv_row(out, {"n", "graph_id", "l_ovp", "te"});
  for (const auto& s : summaries) {
    csv_row(out, {csv_num(s.n), csv_num(s.graph_id), csv_num(s.l_ovp), csv_num(s.te)});
  }
}

void cmd_train(const ExperimentConfig& cfg, std::ostream& out) {
  const auto sizes = config_sizes(cfg);
  if (sizes.size() != 1) throw ValidationError("train: needs a single n");
  const int n = sizes[0];
  const auto te = static_cast<int>(repsn::tetrahedral(n));
  const int third = std::max(2, te / 3 - (te / 3) % 2);
  const int train_size = cfg.train_size > 0 ? cfg.train_size : third;
  const int test_size = cfg.test_size > 0 ? cfg.test_size : train_size;
  const Measurement obs = repsn::parse_measurement(cfg.obs);

  Rng data_rng = Rng::for_item(cfg.seed, 0xDA7Aull);
  const qsim::LabeledDataset train_set =
      states::classification_dataset(n, train_size, cfg.p, cfg.phi, data_rng);
  const qsim::LabeledDataset test_set =
      states::classification_dataset(n, test_size, cfg.p, cfg.phi, data_rng);

  std::vector<int> grid;
  if (cfg.depth_rule == "grid") {
    for (const int l : {n, 2 * n, 4 * n, te / 2, te, 3 * te / 2, 2 * te}) {
      if (l >= 1) grid.push_back(l);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  } else {
    grid.push_back(resolve_depth(cfg.depth_rule, n));
  }

  const qsim::BlockModel model(n, obs);
  qsim::TrainConfig tcfg;
  tcfg.restarts = cfg.restarts;
  tcfg.seed = cfg.seed;

  nlohmann::json doc;
  doc["experiment"] = "train";
  doc["n"] = n;
  doc["obs"] = repsn::measurement_name(obs);
  doc["train_size"] = train_size;
  doc["test_size"] = test_size;
  doc["restarts"] = cfg.restarts;
  doc["seed"] = cfg.seed;

  std::vector<qsim::TrainResult> results;
  std::vector<double> losses;
  for (const int layers : grid) {
    const auto gens = qsim::cycle_generators(layers);
    qsim::TrainResult res = qsim::train(model, gens, train_set, tcfg);
    losses.push_back(res.loss);
    results.push_back(std::move(res));
  }
  const double best_loss = *std::min_element(losses.begin(), losses.end());

  doc["grid"] = nlohmann::json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& res = results[i];
    const auto gens = qsim::cycle_generators(grid[i]);
    const double denom = std::abs(best_loss);
    const double rel = denom > 1e-15 ? std::abs(res.loss - best_loss) / denom
                                     : std::abs(res.loss - best_loss);
    nlohmann::json entry;
    entry["layers"] = grid[i];
    entry["train_loss"] = res.loss;
    entry["rel_error"] = rel;
    entry["train_accuracy"] = res.train_accuracy;
    entry["test_accuracy"] =
        qsim::eqnn_accuracy(model, gens, res.theta, test_set.states, test_set.labels);
    entry["best_restart"] = res.best_restart;
    entry["status"] = res.status;
    entry["iterations"] = res.iterations;
    doc["grid"].push_back(entry);
  }

  Rng ovp_rng = Rng::for_item(cfg.seed, 0x0F1ull);
  const qsim::OverparamResult ovp =
      qsim::find_overparam_depth(n, train_set.states[0], grid.back(), ovp_rng);
  doc["l_ovp"] = ovp.l_ovp;
  doc["l_ovp_saturated"] = ovp.saturated;

  if (cfg.hea) {
    const int matched = grid.back();
    const qsim::HeaCircuit hc{n, std::max(1, (matched + n / 2) / n)};
    qsim::TrainConfig hcfg = tcfg;
    hcfg.seed = cfg.seed ^ 0x5555555555555555ull;
    const qsim::TrainResult hres = qsim::train_hea(hc, train_set, hcfg);
    nlohmann::json hj;
    hj["layers"] = hc.layers;
    hj["params"] = qsim::hea_param_count(hc);
    hj["train_loss"] = hres.loss;
    hj["train_accuracy"] = hres.train_accuracy;
    hj["test_accuracy"] =
        qsim::hea_accuracy(hc, hres.theta, test_set.states, test_set.labels);
    hj["status"] = hres.status;
    doc["hea"] = hj;
  }

  out << doc.dump(2) << "\n\n";
  csv_row(out, {"iter", "loss"});
  const auto& trace = results.back().trace;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    csv_row(out, {csv_num(static_cast<int>(i)), csv_num(trace[i])});
  }
}

void cmd_generalization(const ExperimentConfig& cfg, std::ostream& out) {
  const Measurement obs = repsn::parse_measurement(cfg.obs);
  csv_row(out, {"n", "M", "percentile90_normalized_gen_error", "thm4_bound"});
  for (const int n : config_sizes(cfg)) {
    const auto te = static_cast<int>(repsn::tetrahedral(n));
    // The dataset needs balanced labels, so an odd parameter-count target
    // rounds down to the nearest even size.
    qsim::GeneralizationConfig gcfg;
    gcfg.n = n;
    gcfg.train_size = cfg.train_size > 0 ? cfg.train_size : te - te % 2;
    gcfg.test_size = cfg.test_size > 0 ? cfg.test_size : 2 * te;
    gcfg.layers = resolve_depth(cfg.depth_rule, n);
    gcfg.trials = cfg.trials;
    gcfg.seed = cfg.seed + static_cast<std::uint64_t>(n);
    gcfg.obs = obs;
    const double p = cfg.p, phi = cfg.phi;
    const auto sampler = [&, n](std::uint64_t trial) {
      Rng rng = Rng::for_item(gcfg.seed, trial);
      auto train = states::classification_dataset(n, gcfg.train_size, p, phi, rng);
      auto test = states::classification_dataset(n, gcfg.test_size, p, phi, rng);
      return std::make_pair(std::move(train), std::move(test));
    };
    const qsim::GeneralizationReport rep = qsim::generalization_experiment(gcfg, sampler);
    csv_row(out, {csv_num(n), csv_num(rep.train_size), csv_num(rep.percentile90),
                  csv_num(rep.bound)});
  }
}

void cmd_trainability_table(const ExperimentConfig& cfg, std::ostream& out) {
  std::vector<int> sizes;
  if (cfg.n == 0 && cfg.n_min == 0) {
    sizes = {4, 6, 8, 10, 12};
  } else {
    for (const int n : config_sizes(cfg)) {
      if (n % 2 == 0) sizes.push_back(n);
    }
  }
  if (sizes.size() < 4) {
    throw ValidationError("trainability-table: need at least 4 even sizes");
  }
  const std::vector<std::string> families = {"symmetric",       "hamming1", "local_haar",
                                             "hea15",           "disconnected_er",
                                             "3regular",        "global_haar",
                                             "hea3n",           "er0.4"};
  csv_row(out, {"family", "verdict", "d_aic", "poly_slope", "exp_rate", "degenerate"});
  for (const auto& name : families) {
    const states::StateFamilySpec spec = states::parse_family(name);
    const variance::TrainabilityReport rep =
        variance::classify_family(spec, sizes, cfg.draws, cfg.seed);
    csv_row(out, {name, variance::trainability_name(rep.verdict), csv_num(rep.d_aic),
                  csv_num(rep.poly_slope), csv_num(rep.exp_rate),
                  csv_num(rep.degenerate ? 1 : 0)});
  }
}

void run_experiment(const ExperimentConfig& cfg, std::ostream& fallback) {
  void (*fn)(const ExperimentConfig&, std::ostream&) = nullptr;
  if (cfg.experiment == "variance-scan") {
    fn = cmd_variance_scan;
  } else if (cfg.experiment == "compare-analytic") {
    fn = cmd_compare_analytic;
  } else if (cfg.experiment == "irrep-contributions") {
    fn = cmd_irrep_contributions;
  } else if (cfg.experiment == "qfim-scan") {
    fn = cmd_qfim_scan;
  } else if (cfg.experiment == "train") {
    fn = cmd_train;
  } else if (cfg.experiment == "generalization") {
    fn = cmd_generalization;
  } else if (cfg.experiment == "trainability-table") {
    fn = cmd_trainability_table;
  } else {
    throw ValidationError("unknown experiment '" + cfg.experiment + "'");
  }
  if (cfg.out.empty()) {
    fn(cfg, fallback);
  } else {
    std::ofstream out = open_out(cfg.out);
    fn(cfg, out);
  }
}

}  // namespace eqnn::harness
