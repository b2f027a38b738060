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

// Experiment subcommands. Each writes a documented CSV (or JSON) artifact
// and is bit-reproducible from (config, seed).

#pragma once

#include <ostream>

#include "eqnn/harness/config.hpp"

namespace eqnn::harness {

// CSV: n,family,samples,mean_grad,var_grad,stderr
// One row per size; the derivative is taken at the middle layer matching
// cfg.gen, pooling cfg.states input draws x cfg.params angle draws.
void cmd_variance_scan(const ExperimentConfig& cfg, std::ostream& out);

// CSV: n,generator,phi,predicted,empirical,stderr,agree_3sigma
// Closed-form variance (averaged over sampled inputs) against the sampled
// variance at depth cfg.depth_rule; one row per (size, generator).
void cmd_compare_analytic(const ExperimentConfig& cfg, std::ostream& out);

// CSV: n,lambda_m,d_lambda,m_lambda,delta_H,delta_O,delta_sigma,prefactor,
//      contribution,total
// Per-block breakdown of the closed-form variance; totals match
// cmd_compare_analytic's predicted column for the same config.
void cmd_irrep_contributions(const ExperimentConfig& cfg, std::ostream& out);

// Two CSV tables separated by a blank line:
//   n,graph_id,L,rank        (rank per depth 1..L_max)
//   n,graph_id,l_ovp,te      (saturation depth per input)
void cmd_qfim_scan(const ExperimentConfig& cfg, std::ostream& out);

// JSON document, a blank line, then CSV trace (iter,loss) of the winning
// restart at the largest depth. depth_rule "grid" sweeps
// {n, 2n, 4n, te/2, te, 3te/2, 2te}.
void cmd_train(const ExperimentConfig& cfg, std::ostream& out);

// CSV: n,M,percentile90_normalized_gen_error,thm4_bound
void cmd_generalization(const ExperimentConfig& cfg, std::ostream& out);

// CSV: family,verdict,d_aic,poly_slope,exp_rate,degenerate
// Classifies the nine stock families over even sizes in the config range.
void cmd_trainability_table(const ExperimentConfig& cfg, std::ostream& out);

// Dispatches on cfg.experiment; writes to cfg.out when set, else fallback.
void run_experiment(const ExperimentConfig& cfg, std::ostream& fallback);

}  // namespace eqnn::harness
