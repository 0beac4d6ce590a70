#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lemnis/hypergeometric.hpp"
#include "lemnis/numerics.hpp"

namespace lemnis {

// Rings Z[w] with w^2 = c0 + c1 w.
struct Gauss {
  static constexpr long long c0 = -1, c1 = 0;  // i^2 = -1
  static constexpr int unit_order = 4;
  static Complex omega() { return I; }
  static constexpr const char* name = "Z[i]";
};

struct Eisenstein6 {
  static constexpr long long c0 = -1, c1 = 1;  // zeta^2 = zeta - 1
  static constexpr int unit_order = 6;
  static Complex omega() { return ZETA; }
  static constexpr const char* name = "Z[zeta]";
};

template <class Ring>
struct CycInt {
  long long x = 0, y = 0;  // x + y w

  constexpr CycInt() = default;
  constexpr CycInt(long long a, long long b = 0) : x(a), y(b) {}

  static constexpr CycInt w() { return {0, 1}; }

  friend constexpr CycInt operator+(CycInt a, CycInt b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr CycInt operator-(CycInt a, CycInt b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr CycInt operator-(CycInt a) { return {-a.x, -a.y}; }
  friend constexpr CycInt operator*(CycInt a, CycInt b) {
    const long long yy = a.y * b.y;
    return {a.x * b.x + Ring::c0 * yy, a.x * b.y + a.y * b.x + Ring::c1 * yy};
  }
  friend constexpr bool operator==(CycInt a, CycInt b) { return a.x == b.x && a.y == b.y; }
  friend constexpr bool operator<(CycInt a, CycInt b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

  Complex to_complex() const { return static_cast<double>(x) + static_cast<double>(y) * Ring::omega(); }
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

template <class Ring>
std::vector<CycInt<Ring>> units() {
  std::vector<CycInt<Ring>> out{CycInt<Ring>(1)};
  // w generates the unit group in both rings (i has order 4, zeta order 6)
  for (int k = 1; k < Ring::unit_order; ++k) out.push_back(out.back() * CycInt<Ring>::w());
  return out;
}

template <class Ring>
bool is_unit(CycInt<Ring> a) {
  for (auto u : units<Ring>())
    if (u == a) return true;
  return false;
}

template <class Ring>
CycInt<Ring> unit_inverse(CycInt<Ring> a) {
  for (auto u : units<Ring>())
    if (u * a == CycInt<Ring>(1)) return u;
  throw domain_error("unit_inverse: element is not a unit");
}

template <class Ring>
struct CircuitMatrix {
  std::array<std::array<CycInt<Ring>, 2>, 2> e{};

  static CircuitMatrix identity() { return {{{{CycInt<Ring>(1), CycInt<Ring>(0)}, {CycInt<Ring>(0), CycInt<Ring>(1)}}}}; }
  static CircuitMatrix of(CycInt<Ring> a, CycInt<Ring> b, CycInt<Ring> c, CycInt<Ring> d) {
    return {{{{a, b}, {c, d}}}};
  }

  CycInt<Ring> det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

  friend CircuitMatrix operator*(const CircuitMatrix& A, const CircuitMatrix& B) {
    CircuitMatrix C;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) C.e[i][j] = A.e[i][0] * B.e[0][j] + A.e[i][1] * B.e[1][j];
    return C;
  }
  friend bool operator==(const CircuitMatrix& A, const CircuitMatrix& B) { return A.e == B.e; }

  CircuitMatrix inverse() const {
    const CycInt<Ring> di = unit_inverse(det());
    return of(di * e[1][1], -(di * e[0][1]), -(di * e[1][0]), di * e[0][0]);
  }

  std::array<std::array<Complex, 2>, 2> to_complex() const {
    return {{{e[0][0].to_complex(), e[0][1].to_complex()}, {e[1][0].to_complex(), e[1][1].to_complex()}}};
  }
};

// smallest k <= cap with M^k = I, exactly
template <class Ring>
std::optional<int> matrix_order(const CircuitMatrix<Ring>& M, int cap = 24) {
  CircuitMatrix<Ring> P = M;
  for (int k = 1; k <= cap; ++k) {
    if (P == CircuitMatrix<Ring>::identity()) return k;
    P = P * M;
  }
  return std::nullopt;
}

template <class Ring>
struct NTriple {
  CircuitMatrix<Ring> n0, n1, n01inv;
};

template <SchwarzVariant V>
struct ring_of {
  using type = Gauss;
};
template <>
struct ring_of<SchwarzVariant::sextic> {
  using type = Eisenstein6;
};

// N0 = [[-1, w], [0, 1]], N1 = [[w, 0], [0, 1]] and (N0 N1)^{-1}
template <SchwarzVariant V>
NTriple<typename ring_of<V>::type> n_matrices() {
  using R = typename ring_of<V>::type;
  using C = CycInt<R>;
  const auto n0 = CircuitMatrix<R>::of(C(-1), C::w(), C(0), C(1));
  const auto n1 = CircuitMatrix<R>::of(C::w(), C(0), C(0), C(1));
  return {n0, n1, (n0 * n1).inverse()};
}

using CMatrix = std::array<std::array<Complex, 2>, 2>;

inline CMatrix mat_mul(const CMatrix& A, const CMatrix& B) {
  CMatrix C{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) C[i][j] = A[i][0] * B[0][j] + A[i][1] * B[1][j];
  return C;
}

inline CMatrix mat_inv(const CMatrix& A) {
  const Complex d = A[0][0] * A[1][1] - A[0][1] * A[1][0];
  return {{{A[1][1] / d, -A[0][1] / d}, {-A[1][0] / d, A[0][0] / d}}};
}

inline double mat_distance(const CMatrix& A, const CMatrix& B) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(A[i][j] - B[i][j]));
  return m;
}

struct GeneralCircuits {
  CMatrix h;                     // intersection matrix
  CMatrix m0, m1;                // from H by the rank-one formulas
  CMatrix m0_closed, m1_closed;  // triangular closed forms
};

inline CMatrix intersection_matrix(const GaussParams& p) {
  const double a = p.alpha, b = p.beta, c = p.gamma;
  const Complex d = e_of(c - a) - 1.0;
  return {{{(e_of(c - a) - e_of(b)) / d, -e_of(c - a) / d},
           {(1.0 - e_of(b)) / d, (1.0 - e_of(c)) / (d * (e_of(a) - 1.0))}}};
}

// Circuit matrices on the basis (f1, f2) around x = 0 and x = 1.
inline GeneralCircuits general_m0_m1(const GaussParams& p) {
  const double a = p.alpha, b = p.beta, c = p.gamma;
  auto is_int = [](double v) { return std::abs(v - std::round(v)) < 1e-12; };
  if (is_int(a) || is_int(a - c) || is_int(b - c))
    throw domain_error("general_m0_m1: alpha, alpha-gamma, beta-gamma must avoid Z");
  const Complex la0 = e_of(-c), la1 = e_of(c - a - b);
  GeneralCircuits g;
  g.h = intersection_matrix(p);
  // base I - (base - lam)/(e_k H e_k^*) H e_k^* e_k
  auto rank_one = [&](int k, Complex base, Complex lam) {
    CMatrix M{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Complex id = i == j ? base : 0.0;
        const Complex outer = j == k ? g.h[i][k] : 0.0;
        M[i][j] = id - (base - lam) / g.h[k][k] * outer;
      }
    return M;
  };
  g.m0 = rank_one(1, la0, 1.0);
  g.m1 = rank_one(0, 1.0, la1);
  g.m0_closed = {{{la0, 1.0 - e_of(-a)}, {0.0, 1.0}}};
  g.m1_closed = {{{la1, 0.0}, {-1.0 + e_of(-b), 1.0}}};
  return g;
}

// D M D^{-1} with D = diag(1, 1 - e(alpha)); for integer beta this gives N0, N1
inline std::pair<CMatrix, CMatrix> base_changed_circuits(const GaussParams& p) {
  const GeneralCircuits g = general_m0_m1(p);
  const CMatrix D{{{1.0, 0.0}, {0.0, 1.0 - e_of(p.alpha)}}};
  return {mat_mul(mat_mul(D, g.m0_closed), mat_inv(D)), mat_mul(mat_mul(D, g.m1_closed), mat_inv(D))};
}

inline std::pair<CMatrix, CMatrix> n_closed(const GaussParams& p) {
  return {CMatrix{{{e_of(-p.gamma), -e_of(-p.alpha)}, {0.0, 1.0}}},
          CMatrix{{{e_of(p.gamma - p.alpha), 0.0}, {0.0, 1.0}}}};
}

template <class Ring>
struct AffineMap {
  CycInt<Ring> unit{1};
  CycInt<Ring> shift{0};

  // (this o g)(z) = unit (g.unit z + g.shift) + shift
  AffineMap compose(const AffineMap& g) const { return {unit * g.unit, unit * g.shift + shift}; }
  Complex apply(Complex z) const { return unit.to_complex() * z + shift.to_complex(); }
  friend bool operator==(const AffineMap& a, const AffineMap& b) { return a.unit == b.unit && a.shift == b.shift; }
  friend bool operator<(const AffineMap& a, const AffineMap& b) {
    return a.unit == b.unit ? a.shift < b.shift : a.unit < b.unit;
  }
};

template <class Ring>
AffineMap<Ring> as_affine(const CircuitMatrix<Ring>& M) {
  if (!(M.e[1][0] == CycInt<Ring>(0) && M.e[1][1] == CycInt<Ring>(1)))
    throw domain_error("as_affine: bottom row is not (0, 1)");
  if (!is_unit(M.e[0][0])) throw domain_error("as_affine: leading entry is not a unit");
  return {M.e[0][0], M.e[0][1]};
}

template <class Ring>
struct ClosureSummary {
  std::vector<CycInt<Ring>> unit_set;
  bool shift_one = false;    // z -> z + 1 reached
  bool shift_omega = false;  // z -> z + w reached
  std::size_t explored = 0;
  bool saturated = false;  // unit set stopped growing before the cap
};

// Breadth-first closure under composition; asserts only unit saturation and
// reachability of the pure translations by 1 and w.
template <class Ring>
ClosureSummary<Ring> group_closure(const std::vector<AffineMap<Ring>>& gens, std::size_t cap) {
  if (cap > 10000) throw domain_error("group_closure: cap must be <= 10000");
  using A = AffineMap<Ring>;
  std::set<A> seen{A{}};
  std::vector<A> frontier{A{}};
  std::set<CycInt<Ring>> us{CycInt<Ring>(1)};
  ClosureSummary<Ring> out;
  std::size_t stable_rounds = 0;
  while (!frontier.empty() && seen.size() < cap) {
    std::vector<A> next;
    const std::size_t before = us.size();
    for (const A& f : frontier)
      for (const A& g : gens) {
        A h = g.compose(f);
        if (seen.size() >= cap) break;
        if (seen.insert(h).second) {
          next.push_back(h);
          us.insert(h.unit);
          if (h.unit == CycInt<Ring>(1)) {
            if (h.shift == CycInt<Ring>(1) || h.shift == CycInt<Ring>(-1)) out.shift_one = true;
            if (h.shift == CycInt<Ring>::w() || h.shift == -CycInt<Ring>::w()) out.shift_omega = true;
          }
        }
      }
    stable_rounds = us.size() == before ? stable_rounds + 1 : 0;
    frontier = std::move(next);
    if (stable_rounds >= 3 && out.shift_one && out.shift_omega) break;
  }
  out.unit_set.assign(us.begin(), us.end());
  out.explored = seen.size();
  out.saturated = stable_rounds >= 1 || frontier.empty();
  if (!out.saturated) throw iteration_limit_error("group_closure: unit set still growing at the cap");
  return out;
}

}  // namespace lemnis
