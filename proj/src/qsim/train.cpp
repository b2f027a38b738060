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

#include "eqnn/qsim/train.hpp"

#include "eqnn/qsim/optimize.hpp"

namespace eqnn::qsim {

namespace {

RVec random_start(std::int64_t count, std::uint64_t seed, int restart) {
  Rng rng = Rng::for_item(seed, static_cast<std::uint64_t>(restart));
  RVec x(count);
  for (std::int64_t i = 0; i < count; ++i) x[i] = rng.uniform(-kPi, kPi);
  return x;
}

void check_train_config(const TrainConfig& cfg) {
  if (cfg.restarts < 1) throw ValidationError("train: restarts must be >= 1");
  if (cfg.max_iter < 1) throw ValidationError("train: max_iter must be >= 1");
}

// Runs the restart loop over an objective; the winner is the restart with
// the lowest final loss.
TrainResult run_restarts(const Objective& fg, std::int64_t param_count, const TrainConfig& cfg) {
  OptimizeConfig ocfg;
  ocfg.max_iter = cfg.max_iter;
  ocfg.grad_tol = cfg.grad_tol;
  ocfg.f_tol = cfg.f_tol;

  TrainResult best;
  for (int r = 0; r < cfg.restarts; ++r) {
    OptimizeResult res = minimize(fg, random_start(param_count, cfg.seed, r), ocfg);
    if (r == 0 || res.f < best.loss) {
      best.theta = res.x;
      best.loss = res.f;
      best.trace = res.trace;
      best.best_restart = r;
      best.iterations = res.iterations;
      best.evaluations = res.evaluations;
      best.status = res.status;
    }
  }
  return best;
}

}  // namespace

TrainResult train(const BlockModel& model, const std::vector<Generator>& gens,
                  const LabeledDataset& data, const TrainConfig& cfg) {
  check_train_config(cfg);
  if (gens.empty()) throw ValidationError("train: circuit has no layers");
  if (data.size() == 0) throw ValidationError("train: empty dataset");

  const BlockModel::Blocks sbar = model.compile(data.states, data.weights);
  std::vector<Layer> layers(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) layers[i].gen = gens[i];

  Objective fg = [&](const RVec& x, RVec& grad) {
    std::vector<Layer> cur = layers;
    for (std::size_t i = 0; i < cur.size(); ++i)
      cur[i].theta = x[static_cast<std::int64_t>(i)];
    return model.loss_and_grad(cur, sbar, grad);
  };

  TrainResult result = run_restarts(fg, static_cast<std::int64_t>(gens.size()), cfg);
  result.train_accuracy = eqnn_accuracy(model, gens, result.theta, data.states, data.labels);
  return result;
}

TrainResult train(const Circuit& circuit, const LabeledDataset& data, Measurement obs,
                  const TrainConfig& cfg) {
  std::vector<Generator> gens(circuit.layers.size());
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = circuit.layers[i].gen;
  BlockModel model(circuit.n, obs);
  return train(model, gens, data, cfg);
}

TrainResult train_hea(const HeaCircuit& circuit, const LabeledDataset& data,
                      const TrainConfig& cfg) {
  check_train_config(cfg);
  if (circuit.layers < 1) throw ValidationError("train: circuit has no layers");
  if (data.size() == 0) throw ValidationError("train: empty dataset");

  Objective fg = [&](const RVec& x, RVec& grad) {
    return hea_loss_and_grad(circuit, x, data, grad);
  };

  TrainResult result = run_restarts(fg, hea_param_count(circuit), cfg);
  result.train_accuracy = hea_accuracy(circuit, result.theta, data.states, data.labels);
  return result;
}

double eqnn_accuracy(const BlockModel& model, const std::vector<Generator>& gens,
                     const RVec& theta, const std::vector<Vec>& states,
                     const std::vector<int>& labels) {
  std::vector<Layer> layers(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    layers[i] = Layer{gens[i], theta[static_cast<std::int64_t>(i)]};
  return accuracy_from_losses(model.per_state_losses(layers, states), labels);
}

double hea_accuracy(const HeaCircuit& circuit, const RVec& params,
                    const std::vector<Vec>& states, const std::vector<int>& labels) {
  return accuracy_from_losses(hea_per_state_losses(circuit, params, states), labels);
}

}  // namespace eqnn::qsim
