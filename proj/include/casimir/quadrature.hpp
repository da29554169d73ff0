/*
 * Copyright 2026 The casimir-lifshitz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

// Deterministic globally adaptive Gauss-Kronrod (G7/K15) integration of
// vector-valued integrands. The panel with the largest error is bisected
// until the summed error meets the tolerance; ties go to the oldest panel, so
// a given integrand always sees the same sequence of nodes.
namespace casimir::quadrature {

template <std::size_t N>
using Vec = std::array<double, N>;

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_subdivisions = 200;
};

template <std::size_t N>
struct Result {
  Vec<N> value{};
  Vec<N> error{};
  double error_norm = 0.0;
  std::size_t evaluations = 0;
  int subdivisions = 0;
  bool converged = false;
};

namespace detail {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss
// weights apply to the odd-indexed abscissae.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline constexpr int kNodes = 15;

inline std::array<double, kNodes> nodes(double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, kNodes> x{};
  for (int j = 0; j < 7; ++j) {
    x[2 * j] = centre - half * kXgk[j];
    x[2 * j + 1] = centre + half * kXgk[j];
  }
  x[14] = centre;
  return x;
}

template <std::size_t N>
struct Panel {
  double a;
  double b;
  Vec<N> value;
  Vec<N> error;
  double norm;
};

// QUADPACK qk15 error heuristic, applied per component.
template <std::size_t N>
Panel<N> combine(double a, double b, std::span<const Vec<N>> f, const Vec<N>& weights) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double half = 0.5 * (b - a);
  Panel<N> p{a, b, {}, {}, 0.0};
  for (std::size_t c = 0; c < N; ++c) {
    const double fc = f[14][c];
    double resk = fc * kWgk[7];
    double resg = fc * kWg[3];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
      const double f1 = f[2 * j][c];
      const double f2 = f[2 * j + 1][c];
      resk += kWgk[j] * (f1 + f2);
      resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
      if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
      resasc += kWgk[j] * (std::abs(f[2 * j][c] - mean) + std::abs(f[2 * j + 1][c] - mean));
    }
    resk *= half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg * half));
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    p.value[c] = resk;
    p.error[c] = err;
    p.norm += weights[c] * err;
  }
  return p;
}

}  // namespace detail

/// Integrates over [breakpoints.front(), breakpoints.back()], starting from
/// the given partition. batch(xs, out) must fill out[i] = f(xs[i]); it is
/// handed every node of a refinement step at once, so it may evaluate them in
/// parallel. Only components with a non-zero norm weight enter the error
/// test; the others are integrated along for the ride.
template <std::size_t N, class Batch>
Result<N> integrate_batched(Batch&& batch, std::span<const double> breakpoints, const Options& opt,
                            const Vec<N>& norm_weights) {
  using detail::kNodes;
  Result<N> res;
  std::vector<detail::Panel<N>> panels;
  std::vector<double> xs;
  std::vector<Vec<N>> fs;

  auto evaluate = [&](std::span<const std::pair<double, double>> intervals) {
    xs.clear();
    for (const auto& [a, b] : intervals) {
      const auto x = detail::nodes(a, b);
      xs.insert(xs.end(), x.begin(), x.end());
    }
    fs.assign(xs.size(), Vec<N>{});
    batch(std::span<const double>(xs), std::span<Vec<N>>(fs));
    res.evaluations += xs.size();
    std::vector<detail::Panel<N>> out;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      out.push_back(detail::combine<N>(intervals[i].first, intervals[i].second,
                                       std::span<const Vec<N>>(fs).subspan(i * kNodes, kNodes),
                                       norm_weights));
    }
    return out;
  };

  auto totals = [&] {
    Vec<N> v{};
    Vec<N> e{};
    double norm = 0.0;
    for (const auto& p : panels) {
      for (std::size_t c = 0; c < N; ++c) {
        v[c] += p.value[c];
        e[c] += p.error[c];
      }
      norm += p.norm;
    }
    res.value = v;
    res.error = e;
    res.error_norm = norm;
  };

  auto tolerance = [&] {
    double scale = 0.0;
    for (std::size_t c = 0; c < N; ++c) scale += norm_weights[c] * std::abs(res.value[c]);
    return std::max(opt.abs_tol, opt.rel_tol * scale);
  };

  std::vector<std::pair<double, double>> initial;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) initial.emplace_back(breakpoints[i], breakpoints[i + 1]);
  }
  if (initial.empty()) {
    res.converged = true;
    return res;
  }
  panels = evaluate(initial);
  totals();

  while (!(res.error_norm <= tolerance())) {
    if (res.subdivisions >= opt.max_subdivisions) return res;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].norm > panels[worst].norm) worst = i;
    }
    const double a = panels[worst].a;
    const double b = panels[worst].b;
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) return res;  // interval exhausted at double precision
    const std::array<std::pair<double, double>, 2> halves{{{a, mid}, {mid, b}}};
    auto split = evaluate(halves);
    panels[worst] = split[0];
    panels.push_back(split[1]);
    ++res.subdivisions;
    totals();
    if (!std::isfinite(res.error_norm)) return res;
  }
  res.converged = true;
  return res;
}

/// Scalar convenience wrapper over integrate_batched.
template <class F>
Result<1> integrate(F&& f, std::span<const double> breakpoints, const Options& opt) {
  auto batch = [&](std::span<const double> xs, std::span<Vec<1>> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i][0] = f(xs[i]);
  };
  return integrate_batched<1>(batch, breakpoints, opt, Vec<1>{1.0});
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

}  // namespace casimir::quadrature
