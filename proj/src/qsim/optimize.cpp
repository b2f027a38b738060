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

#include "eqnn/qsim/optimize.hpp"

#include <cmath>
#include <deque>
#include <limits>

namespace eqnn::qsim {
namespace {

bool finite(double v) { return std::isfinite(v); }
bool finite(const RVec& v) { return v.allFinite(); }

struct LinePoint {
  double a = 0.0;  // step length
  double f = 0.0;
  double df = 0.0;  // directional derivative
};

// Minimizer of the cubic interpolant through two (a, f, df) samples, clamped
// inside the interval; falls back to bisection when the cubic degenerates.
double cubic_step(const LinePoint& lo, const LinePoint& hi) {
  const double d1 = lo.df + hi.df - 3.0 * (lo.f - hi.f) / (lo.a - hi.a);
  const double disc = d1 * d1 - lo.df * hi.df;
  if (disc >= 0.0) {
    const double d2 = std::copysign(std::sqrt(disc), hi.a - lo.a);
    double t = hi.a - (hi.a - lo.a) * (hi.df + d2 - d1) / (hi.df - lo.df + 2.0 * d2);
    const double lo_a = std::min(lo.a, hi.a), hi_a = std::max(lo.a, hi.a);
    const double margin = 0.1 * (hi_a - lo_a);
    if (finite(t) && t > lo_a + margin && t < hi_a - margin) return t;
  }
  return 0.5 * (lo.a + hi.a);
}

}  // namespace

OptimizeResult minimize(const Objective& fg, RVec x0, const OptimizeConfig& cfg) {
  OptimizeResult res;
  const auto dim = x0.size();
  RVec x = std::move(x0);
  RVec g(dim);
  double f = fg(x, g);
  res.evaluations = 1;
  if (!finite(f) || !finite(g)) {
    res.x = x;
    res.f = f;
    res.grad = g;
    res.status = "diverged";
    return res;
  }

  std::deque<RVec> s_hist, y_hist;
  std::deque<double> rho_hist;
  RVec best_x = x;
  double best_f = f;
  res.trace.push_back(best_f);

  std::string status = "max_iter";
  int it = 0;
  for (; it < cfg.max_iter; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < cfg.grad_tol) {
      status = "converged";
      break;
    }

    // Two-loop recursion for the quasi-Newton direction.
    RVec d = -g;
    const int hlen = static_cast<int>(s_hist.size());
    std::vector<double> alpha(static_cast<std::size_t>(hlen));
    for (int i = hlen - 1; i >= 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      alpha[ui] = rho_hist[ui] * s_hist[ui].dot(d);
      d -= alpha[ui] * y_hist[ui];
    }
    if (hlen > 0) {
      const auto last = static_cast<std::size_t>(hlen - 1);
      const double gamma = s_hist[last].dot(y_hist[last]) / y_hist[last].squaredNorm();
      d *= gamma;
    }
    for (int i = 0; i < hlen; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double beta = rho_hist[ui] * y_hist[ui].dot(d);
      d += (alpha[ui] - beta) * s_hist[ui];
    }

    double dg = d.dot(g);
    if (!(dg < 0.0)) {  // not a descent direction: restart from steepest descent
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      d = -g;
      dg = d.dot(g);
      if (!(dg < 0.0)) {
        status = "converged";
        break;
      }
    }

    // Strong-Wolfe line search: bracket then zoom with cubic interpolation.
    const LinePoint p0{0.0, f, dg};
    LinePoint prev = p0;
    double a = (it == 0) ? std::min(1.0, 1.0 / std::max(1e-12, g.lpNorm<Eigen::Infinity>()))
                         : 1.0;
    RVec xt(dim), gt(dim);
    double ft = f;
    bool found = false;
    LinePoint lo = p0, hi = p0;
    bool bracketed = false;
    for (int ls = 0; ls < cfg.max_line_iter; ++ls) {
      xt = x + a * d;
      ft = fg(xt, gt);
      ++res.evaluations;
      if (!finite(ft) || !finite(gt)) {
        a *= 0.25;
        continue;
      }
      const LinePoint cur{a, ft, gt.dot(d)};
      if (cur.f > p0.f + cfg.c1 * a * p0.df || (ls > 0 && cur.f >= prev.f)) {
        lo = prev;
        hi = cur;
        bracketed = true;
        break;
      }
      if (std::abs(cur.df) <= -cfg.c2 * p0.df) {
        found = true;
        break;
      }
      if (cur.df >= 0.0) {
        lo = cur;
        hi = prev;
        bracketed = true;
        break;
      }
      prev = cur;
      a *= 2.0;
    }
    if (bracketed && !found) {
      for (int z = 0; z < cfg.max_line_iter; ++z) {
        a = cubic_step(lo, hi);
        xt = x + a * d;
        ft = fg(xt, gt);
        ++res.evaluations;
        if (!finite(ft) || !finite(gt)) {
          hi = LinePoint{a, std::numeric_limits<double>::infinity(), 0.0};
          continue;
        }
        const LinePoint cur{a, ft, gt.dot(d)};
        if (cur.f > p0.f + cfg.c1 * a * p0.df || cur.f >= lo.f) {
          hi = cur;
        } else {
          if (std::abs(cur.df) <= -cfg.c2 * p0.df) {
            found = true;
            break;
          }
          if (cur.df * (hi.a - lo.a) >= 0.0) hi = lo;
          lo = cur;
        }
        if (std::abs(hi.a - lo.a) < 1e-16) break;
      }
      if (!found && lo.a > 0.0 && lo.f < f) {
        // Accept the best bracketed point even without curvature.
        a = lo.a;
        xt = x + a * d;
        ft = fg(xt, gt);
        ++res.evaluations;
        found = finite(ft) && finite(gt) && ft < f;
      }
    }
    if (!found) {
      status = "line_search";
      break;
    }

    const RVec s = xt - x;
    const RVec yv = gt - g;
    const double sy = s.dot(yv);
    if (sy > 1e-12 * s.norm() * yv.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(yv);
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > cfg.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    const double f_prev = f;
    x = xt;
    f = ft;
    g = gt;
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
    res.trace.push_back(best_f);
    if (f_prev - f <= cfg.f_tol * std::max({std::abs(f_prev), std::abs(f), 1.0})) {
      status = "f_converged";
      ++it;
      break;
    }
  }

  res.x = best_x;
  res.f = best_f;
  res.grad = g;
  res.iterations = it;
  res.status = status;
  return res;
}

OptimizeResult minimize_adam(const Objective& fg, RVec x0, int iters, double lr) {
  OptimizeResult res;
  RVec x = std::move(x0);
  const auto dim = x.size();
  RVec g(dim), m = RVec::Zero(dim), v = RVec::Zero(dim);
  const double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  double f = fg(x, g);
  res.evaluations = 1;
  RVec best_x = x;
  double best_f = finite(f) ? f : std::numeric_limits<double>::infinity();
  res.trace.push_back(best_f);
  for (int t = 1; t <= iters; ++t) {
    if (!finite(f) || !finite(g)) break;
    m = b1 * m + (1.0 - b1) * g;
    v = b2 * v.array().matrix() + (1.0 - b2) * g.cwiseProduct(g);
    const double bc1 = 1.0 - std::pow(b1, t), bc2 = 1.0 - std::pow(b2, t);
    x -= (lr / bc1) * (m.array() / ((v.array() / bc2).sqrt() + eps)).matrix();
    f = fg(x, g);
    ++res.evaluations;
    if (finite(f) && f < best_f) {
      best_f = f;
      best_x = x;
    }
    res.trace.push_back(best_f);
  }
  res.x = best_x;
  res.f = best_f;
  res.grad = g;
  res.iterations = iters;
  res.status = "adam";
  return res;
}

}  // namespace eqnn::qsim
