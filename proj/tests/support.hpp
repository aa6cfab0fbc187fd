#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "origamiq/character.hpp"
#include "origamiq/template.hpp"

namespace testsupport {

using namespace origamiq;

inline std::string template_path(const std::string& name) {
  return std::string(ORIGAMIQ_TEMPLATE_DIR) + "/" + name;
}

inline DelzantPolytope unit_square() {
  return DelzantPolytope::from_halfspaces(
      2, {Halfspace({1, 0}, 0), Halfspace({0, 1}, 0), Halfspace({-1, 0}, 1),
          Halfspace({0, -1}, 1)});
}

inline DelzantPolytope unit_cube(int n) {
  std::vector<Halfspace> hs;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    hs.emplace_back(e, Rat(0));
    hs.emplace_back(negated(e), Rat(1));
  }
  return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

// Triangle conv{(0,0), (1,0), (0,2)} whose (1,0) vertex cone has determinant
// 2: the canonical non-Delzant rejection case.
inline DelzantPolytope det2_triangle() {
  return DelzantPolytope::from_halfspaces(
      2, {Halfspace({1, 0}, 0), Halfspace({0, 1}, 0), Halfspace({-2, -1}, 2)});
}

// A fixed pool of Delzant polytopes with integral vertices in dimensions 1-3.
inline std::vector<DelzantPolytope> delzant_corpus() {
  std::vector<DelzantPolytope> pool;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) pool.push_back(gen_simplex(n, k));  // 12
  pool.push_back(unit_square());
  pool.push_back(unit_cube(2));  // larger offsets below
  pool.push_back(unit_cube(3));
  pool.push_back(dilate(unit_cube(2), 3));
  pool.push_back(gen_product(gen_simplex(1, 2), gen_simplex(2, 1)));
  pool.push_back(gen_product(gen_simplex(2, 2), gen_simplex(1, 3)));
  for (int a = 0; a <= 3; ++a) pool.push_back(gen_hirzebruch(a, 2, 1));  // 4
  pool.push_back(translate(gen_simplex(2, 3), {Rat(-1), Rat(2)}));
  pool.push_back(translate(unit_cube(3), {Rat(1), Rat(-2), Rat(5)}));
  return pool;  // 24 entries
}

// Independent lattice enumeration: scans the integer bounding box and tests
// the defining inequalities directly, without any polytope machinery.
inline std::vector<IntVec> brute_force_lattice(const std::vector<Halfspace>& hs, int dim,
                                               long lo, long hi) {
  std::vector<IntVec> out;
  IntVec pt(static_cast<std::size_t>(dim), 0);
  auto rec = [&](auto&& self, int coord) -> void {
    if (coord == dim) {
      for (const Halfspace& h : hs)
        if (dot(h.normal, pt) + h.offset < 0) return;
      out.push_back(pt);
      return;
    }
    for (long c = lo; c <= hi; ++c) {
      pt[static_cast<std::size_t>(coord)] = c;
      self(self, coord + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline Character random_character(std::mt19937& rng, int vars, int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-5, 5);
  std::uniform_int_distribution<int> coefd(-9, 9);
  Character c(vars);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    IntVec e;
    for (int j = 0; j < vars; ++j) e.push_back(expo(rng));
    c += Character::monomial(e, coefd(rng));
  }
  return c;
}

// Adaptive Simpson quadrature, used as the floating-point cross-check for
// the exact profile antiderivative.
inline double simpson(double (*f)(double), double a, double b, double fa, double fb, double fm,
                      double eps, int depth) {
  double m = (a + b) / 2;
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
    return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, fm, flm, eps / 2, depth - 1) +
         simpson(f, m, b, fm, fb, frm, eps / 2, depth - 1);
}

inline double integrate(double (*f)(double), double a, double b, double eps = 1e-13) {
  return simpson(f, a, b, f(a), f(b), f((a + b) / 2), eps, 40);
}

}  // namespace testsupport
