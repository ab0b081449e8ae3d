#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/prelie_expr.hpp"
#include "dendrix/rational.hpp"
#include "dendrix/series.hpp"

namespace dendrix {

// Ordered rooted tree; a default-constructed tree is a single vertex.
class PlanarTree {
 public:
  PlanarTree() = default;
  explicit PlanarTree(std::vector<PlanarTree> children);

  // B₊(t₁,…,tₙ)
  static PlanarTree graft(std::vector<PlanarTree> children) { return PlanarTree(std::move(children)); }
  static PlanarTree ladder(int degree);
  static PlanarTree corolla(int leaves);

  const std::vector<PlanarTree>& children() const { return children_; }
  int degree() const { return degree_; }
  int fertility() const { return static_cast<int>(children_.size()); }
  // Children counts in preorder; determines the tree.
  std::vector<int> fertility_sequence() const;

  // [] for a vertex, [t1t2...] for a vertex with ordered subtrees.
  std::string str() const;
  static PlanarTree parse(std::string_view text);

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.children_ == b.children_; }
  // Canonical order: degree, then fertility sequence lexicographically.
  friend bool operator<(const PlanarTree& a, const PlanarTree& b);

 private:
  std::vector<PlanarTree> children_;
  int degree_ = 1;
};

// Trees with n vertices whose fertilities are all 0, 1 or even, canonically ordered.
std::vector<PlanarTree> enumerate_e1(int n);
// All planar rooted trees with n vertices, canonically ordered.
std::vector<PlanarTree> enumerate_planar(int n);

// Π_v B_{f(v)}/f(v)!
Rational alpha(const PlanarTree& t);

// T₀..Tₙ from T_n = 1 + Σ_{p+q+r=n−2} T_p T_q T_r.
std::vector<Integer> poincare_counts(int n);

// Coefficients 0..order of T(z) − z²T(z)³ − 1/(1−z) and of W − W³ − z/(1−z), W = zT.
struct PoincareResiduals {
  std::vector<Integer> t_equation;
  std::vector<Integer> w_equation;
};
PoincareResiduals poincare_residuals(int order);

// F[t] as a formal ⊳-expression: F[•] = a, F[B₊(t₁..tₙ)] = F[t₁]⊳(F[t₂]⊳(…⊳a)).
PreLieExpr tree_expression(const PlanarTree& t);

template <Dendriform A>
AugmentedOf<A> tree_functional(const A& alg, const PlanarTree& t, const AugmentedOf<A>& a) {
  std::vector<AugmentedOf<A>> args;
  for (const auto& child : t.children()) args.push_back(tree_functional(alg, child, a));
  args.push_back(a);
  return prelie_left_nested(alg, args);
}

// Σ_{deg t ≤ order} α(t) F[t](a) λ^{deg t}
template <Dendriform A>
Series<A> butcher_omega(const A& alg, const AugmentedOf<A>& a, int order) {
  Series<A> omega(alg, order);
  std::map<std::string, AugmentedOf<A>> memo;
  // Subtrees of trees in T^{e1} are in T^{e1} and of smaller degree.
  for (int n = 1; n <= order; ++n) {
    const std::vector<PlanarTree> trees = enumerate_e1(n);
    for (const PlanarTree& t : trees) {
      std::vector<AugmentedOf<A>> args;
      for (const auto& child : t.children()) args.push_back(memo.at(child.str()));
      args.push_back(a);
      memo.emplace(t.str(), prelie_left_nested(alg, args));
    }
    AugmentedOf<A> acc = embed(alg, alg.zero());
    for (const PlanarTree& t : trees) acc = acc + alpha(t) * memo.at(t.str());
    omega[n] = acc;
  }
  return omega;
}

// Σ_t α(t)·F[t] for the trees of one degree, as formal expressions.
PreLieCombination butcher_terms(int degree);

}  // namespace dendrix
