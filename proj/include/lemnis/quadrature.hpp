#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <queue>

#include "lemnis/numerics.hpp"

namespace lemnis {

struct QuadResult {
  Complex value{};
  double error = 0.0;
  int panels = 0;
};

namespace detail {

inline constexpr std::array<double, 8> gk_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights on the odd Kronrod nodes (1, 3, 5, 7)
inline constexpr std::array<double, 4> gk_wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Complex g7k15(const F& f, double a, double b, double& err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex fc = f(c);
  Complex k = gk_wk[7] * fc, g = gk_wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * gk_x[j];
    Complex s = f(c - dx) + f(c + dx);
    k += gk_wk[j] * s;
    if (j % 2 == 1) g += gk_wg[j / 2] * s;
  }
  err = std::abs((k - g) * h);
  return k * h;
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) for complex-valued f on a real interval:
// the panel with the largest error estimate is bisected until the summed estimate
// drops below abs_tol.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-12, int max_depth = 30) {
  struct Panel {
    double a, b;
    Complex v;
    double err;
    int depth;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  std::priority_queue<Panel> heap;
  double e = 0.0;
  Complex v = detail::g7k15(f, a, b, e);
  heap.push({a, b, v, e, 0});
  Complex total = v;
  double total_err = e;
  constexpr int max_panels = 20000;
  while (total_err > abs_tol) {
    Panel p = heap.top();
    if (p.depth >= max_depth || static_cast<int>(heap.size()) >= max_panels)
      throw iteration_limit_error("integrate: subdivision limit reached");
    heap.pop();
    const double m = 0.5 * (p.a + p.b);
    double el = 0.0, er = 0.0;
    Complex l = detail::g7k15(f, p.a, m, el), r = detail::g7k15(f, m, p.b, er);
    total += l + r - p.v;
    total_err += el + er - p.err;
    heap.push({p.a, m, l, el, p.depth + 1});
    heap.push({m, p.b, r, er, p.depth + 1});
  }
  // re-sum to shed the drift of the running update
  QuadResult out;
  while (!heap.empty()) {
    out.value += heap.top().v;
    out.error += heap.top().err;
    heap.pop();
    ++out.panels;
  }
  return out;
}

}  // namespace lemnis
