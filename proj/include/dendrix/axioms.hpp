#pragma once

#include <string>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/rota_baxter.hpp"

namespace dendrix {

struct AxiomResult {
  std::string name;
  bool holds = false;
};

// (A1)–(A3), the left and right pre-Lie identities and a★b + b⊳a = a≻b + b≻a.
template <Dendriform A>
std::vector<AxiomResult> dendriform_axioms(const A& alg, const typename A::Element& x, const typename A::Element& y,
                                           const typename A::Element& z) {
  const auto p = [&](const auto& u, const auto& v) { return alg.prec(u, v); };
  const auto s = [&](const auto& u, const auto& v) { return alg.succ(u, v); };
  const auto st = [&](const auto& u, const auto& v) { return star_body(alg, u, v); };
  const auto left = [&](const auto& u, const auto& v) { return s(u, v) - p(v, u); };
  const auto right = [&](const auto& u, const auto& v) { return p(u, v) - s(v, u); };
  return {
      {"A1 (x<y)<z = x<(y*z)", p(p(x, y), z) == p(x, st(y, z))},
      {"A2 (x>y)<z = x>(y<z)", p(s(x, y), z) == s(x, p(y, z))},
      {"A3 x>(y>z) = (x*y)>z", s(x, s(y, z)) == s(st(x, y), z)},
      {"star associative", st(st(x, y), z) == st(x, st(y, z))},
      {"left pre-Lie", left(left(x, y), z) - left(x, left(y, z)) == left(left(y, x), z) - left(y, left(x, z))},
      {"right pre-Lie", right(right(x, y), z) - right(x, right(y, z)) == right(right(x, z), y) - right(x, right(z, y))},
      {"x*y + y|>x = x>y + y>x", st(x, y) + left(y, x) == s(x, y) + s(y, x)},
  };
}

// Rota–Baxter relation for R and R̃, image closure, the double-product
// homomorphism, the seven tridendriform axioms and the derived pre-Lie product.
template <RotaBaxterModel M>
std::vector<AxiomResult> rota_baxter_axioms(const M& m, const typename M::Element& x, const typename M::Element& y,
                                            const typename M::Element& z) {
  const Rational theta = m.weight();
  const auto mul = [&](const auto& u, const auto& v) { return m.mul(u, v); };
  const auto r = [&](const auto& u) { return m.rb(u); };
  const auto rt = [&](const auto& u) { return rb_tilde(m, u); };
  const auto lt = [&](const auto& u, const auto& v) { return tri_lt(m, u, v); };
  const auto gt = [&](const auto& u, const auto& v) { return tri_gt(m, u, v); };
  const auto dot = [&](const auto& u, const auto& v) { return tri_dot(m, u, v); };
  const auto st = [&](const auto& u, const auto& v) { return lt(u, v) + gt(u, v) + dot(u, v); };
  const auto dstar = [&](const auto& u, const auto& v) { return rb_double_product(m, u, v); };
  const auto prelie = [&](const auto& u, const auto& v) { return rb_succ(m, u, v) - rb_prec(m, v, u); };

  return {
      {"RB relation R", mul(r(x), r(y)) == r(mul(r(x), y) + mul(x, r(y)) + theta * mul(x, y))},
      {"RB relation R~", mul(rt(x), rt(y)) == rt(mul(rt(x), y) + mul(x, rt(y)) + theta * mul(x, y))},
      {"image of R closed", mul(r(x), r(y)) == r(dstar(x, y))},
      {"image of R~ closed", mul(rt(x), rt(y)) == rt(-dstar(x, y))},
      {"R(x*y) = R(x)R(y)", r(dstar(x, y)) == mul(r(x), r(y))},
      {"R~(x*y) = -R~(x)R~(y)", rt(dstar(x, y)) == -mul(rt(x), rt(y))},
      {"T1 (x<y)<z = x<(y*z)", lt(lt(x, y), z) == lt(x, st(y, z))},
      {"T2 (x>y)<z = x>(y<z)", lt(gt(x, y), z) == gt(x, lt(y, z))},
      {"T3 (x*y)>z = x>(y>z)", gt(st(x, y), z) == gt(x, gt(y, z))},
      {"T4 (x>y).z = x>(y.z)", dot(gt(x, y), z) == gt(x, dot(y, z))},
      {"T5 (x<y).z = x.(y>z)", dot(lt(x, y), z) == dot(x, gt(y, z))},
      {"T6 (x.y)<z = x.(y<z)", lt(dot(x, y), z) == dot(x, lt(y, z))},
      {"T7 (x.y).z = x.(y.z)", dot(dot(x, y), z) == dot(x, dot(y, z))},
      {"< + . is the derived prec", lt(x, y) + dot(x, y) == rb_prec(m, x, y)},
      {"x|>y = [R(x),y] - theta yx", prelie(x, y) == mul(r(x), y) - mul(y, r(x)) - theta * mul(y, x)},
  };
}

}  // namespace dendrix
