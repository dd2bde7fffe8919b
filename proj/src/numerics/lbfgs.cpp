// Copyright 2026 The qinst Authors
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

#include "qinst/numerics/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace qinst::numerics {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(std::span<const double> a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

struct Trial {
  double step = 0.0;
  double value = 0.0;
  double slope = 0.0;
  std::vector<double> x;
  std::vector<double> grad;
};

class LineSearch {
 public:
  LineSearch(const Objective& f, const std::vector<double>& x,
             const std::vector<double>& dir, double f0, double slope0,
             int max_evals, int& evaluations)
      : f_(f), x_(x), dir_(dir), f0_(f0), slope0_(slope0),
        max_evals_(max_evals), evaluations_(evaluations) {}

  // Nocedal & Wright, algorithms 3.5 and 3.6.
  bool run(double initial_step, Trial& out) {
    Trial prev{0.0, f0_, slope0_, {}, {}};
    double step = initial_step;
    for (int i = 0; evals_ < max_evals_; ++i) {
      Trial cur = evaluate(step);
      if (!std::isfinite(cur.value) ||
          cur.value > f0_ + kC1 * step * slope0_ ||
          (i > 0 && cur.value >= prev.value)) {
        return zoom(prev, cur, out);
      }
      if (std::abs(cur.slope) <= -kC2 * slope0_) {
        out = std::move(cur);
        return true;
      }
      if (cur.slope >= 0) return zoom(cur, prev, out);
      prev = std::move(cur);
      step *= 2.0;
    }
    return accept_if_decreased(prev, out);
  }

 private:
  static constexpr double kC1 = 1e-4;
  static constexpr double kC2 = 0.9;

  Trial evaluate(double step) {
    Trial t;
    t.step = step;
    t.x.resize(x_.size());
    t.grad.resize(x_.size());
    for (std::size_t i = 0; i < x_.size(); ++i) t.x[i] = x_[i] + step * dir_[i];
    t.value = f_(t.x, t.grad);
    t.slope = dot(t.grad, dir_);
    ++evals_;
    ++evaluations_;
    return t;
  }

  bool zoom(Trial lo, Trial hi, Trial& out) {
    while (evals_ < max_evals_) {
      const double a = interpolate(lo, hi);
      if (std::abs(hi.step - lo.step) <= 1e-16 * std::max(1.0, lo.step)) break;
      Trial cur = evaluate(a);
      if (!std::isfinite(cur.value) ||
          cur.value > f0_ + kC1 * a * slope0_ || cur.value >= lo.value) {
        hi = std::move(cur);
      } else {
        if (std::abs(cur.slope) <= -kC2 * slope0_) {
          out = std::move(cur);
          return true;
        }
        if (cur.slope * (hi.step - lo.step) >= 0) hi = lo;
        lo = std::move(cur);
      }
    }
    return accept_if_decreased(lo, out);
  }

  // Safeguarded cubic interpolation, falling back to bisection.
  static double interpolate(const Trial& lo, const Trial& hi) {
    const double a = lo.step, b = hi.step;
    const double lower = std::min(a, b), upper = std::max(a, b);
    const double margin = 0.1 * (upper - lower);
    if (std::isfinite(hi.value)) {
      const double d1 = lo.slope + hi.slope - 3.0 * (lo.value - hi.value) / (a - b);
      const double disc = d1 * d1 - lo.slope * hi.slope;
      if (disc >= 0) {
        const double d2 = std::copysign(std::sqrt(disc), b - a);
        const double denom = hi.slope - lo.slope + 2.0 * d2;
        if (denom != 0) {
          const double c = b - (b - a) * (hi.slope + d2 - d1) / denom;
          if (std::isfinite(c) && c >= lower + margin && c <= upper - margin) {
            return c;
          }
        }
      }
    }
    return 0.5 * (a + b);
  }

  bool accept_if_decreased(Trial& best, Trial& out) {
    if (best.step > 0 && !best.x.empty() && best.value < f0_) {
      out = std::move(best);
      return true;
    }
    return false;
  }

  const Objective& f_;
  const std::vector<double>& x_;
  const std::vector<double>& dir_;
  double f0_;
  double slope0_;
  int max_evals_;
  int& evaluations_;
  int evals_ = 0;
};

}  // namespace

LbfgsResult minimize_lbfgs(const Objective& objective, std::vector<double> x0,
                           const LbfgsOptions& options) {
  const std::size_t n = x0.size();
  LbfgsResult result{std::move(x0), 0.0, 0, 0, LbfgsStatus::max_iterations};
  std::vector<double> grad(n);
  result.value = objective(result.x, grad);
  result.evaluations = 1;

  if (result.value <= options.target_value) {
    result.status = LbfgsStatus::target_reached;
    return result;
  }
  if (n == 0 || max_abs(grad) <= options.gradient_tolerance) {
    result.status = LbfgsStatus::gradient_converged;
    return result;
  }

  struct Correction {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Correction> history;
  std::deque<double> recent{result.value};
  std::vector<double> dir(n), q(n);
  std::vector<double> alpha(options.memory);
  double step = std::min(1.0, 1.0 / std::sqrt(dot(grad, grad)));

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Two-loop recursion for dir = -H grad.
    q = grad;
    for (std::size_t i = history.size(); i-- > 0;) {
      alpha[i] = history[i].rho * dot(history[i].s, q);
      for (std::size_t k = 0; k < n; ++k) q[k] -= alpha[i] * history[i].y[k];
    }
    if (!history.empty()) {
      const auto& last = history.back();
      const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
      for (auto& v : q) v *= gamma;
    }
    for (std::size_t i = 0; i < history.size(); ++i) {
      const double beta = history[i].rho * dot(history[i].y, q);
      for (std::size_t k = 0; k < n; ++k) q[k] += history[i].s[k] * (alpha[i] - beta);
    }
    for (std::size_t k = 0; k < n; ++k) dir[k] = -q[k];

    double slope = dot(grad, dir);
    if (!(slope < 0)) {
      history.clear();
      for (std::size_t k = 0; k < n; ++k) dir[k] = -grad[k];
      slope = -dot(grad, grad);
      step = std::min(1.0, 1.0 / std::sqrt(-slope));
    }

    Trial accepted;
    LineSearch search(objective, result.x, dir, result.value, slope,
                      options.max_line_search_evaluations, result.evaluations);
    if (!search.run(step, accepted)) {
      result.status = LbfgsStatus::line_search_failed;
      return result;
    }
    ++result.iterations;

    Correction c{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      c.s[k] = accepted.x[k] - result.x[k];
      c.y[k] = accepted.grad[k] - grad[k];
    }
    const double sy = dot(c.s, c.y);
    if (sy > 1e-12 * std::sqrt(dot(c.y, c.y) * dot(c.s, c.s))) {
      c.rho = 1.0 / sy;
      history.push_back(std::move(c));
      if (static_cast<int>(history.size()) > options.memory) history.pop_front();
    }

    result.x = std::move(accepted.x);
    grad = std::move(accepted.grad);
    result.value = accepted.value;
    step = 1.0;

    if (result.value <= options.target_value) {
      result.status = LbfgsStatus::target_reached;
      return result;
    }
    if (max_abs(grad) <= options.gradient_tolerance) {
      result.status = LbfgsStatus::gradient_converged;
      return result;
    }
    recent.push_back(result.value);
    if (static_cast<int>(recent.size()) > options.stall_window) {
      if (recent.front() - recent.back() <= options.stall_tolerance) {
        result.status = LbfgsStatus::stalled;
        return result;
      }
      recent.pop_front();
    }
  }
  result.status = LbfgsStatus::max_iterations;
  return result;
}

}  // namespace qinst::numerics
