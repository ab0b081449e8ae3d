#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dendrix/free_algebra.hpp"
#include "dendrix/rational.hpp"

namespace dendrix {

// A complete ⊳-bracketing of copies of the single letter a.
class PreLieExpr {
 public:
  static PreLieExpr letter();
  static PreLieExpr product(PreLieExpr left, PreLieExpr right);

  bool is_letter() const { return !node_; }
  const PreLieExpr& left() const;
  const PreLieExpr& right() const;
  int degree() const;

  // "a" or "(L▷R)"; parse also accepts '>' for ▷ and an unbracketed top level.
  std::string str() const;
  static PreLieExpr parse(std::string_view text);

  friend bool operator==(const PreLieExpr& x, const PreLieExpr& y);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

PreLieExpr operator>>(const PreLieExpr& x, const PreLieExpr& y);  // x ⊳ y

struct PreLieCombination {
  std::vector<std::pair<Rational, PreLieExpr>> terms;

  // "+1·a + -1/2·(a▷a)"; "0" when empty.
  std::string str() const;
  static PreLieCombination parse(std::string_view text);
};

// Evaluation in the free dendriform algebra on the single generator a.
FreeElement evaluate(const PreLieExpr& e);
FreeElement evaluate(const PreLieCombination& c);

// Equality as elements of the free dendriform algebra on one generator.
bool prelie_equal(const PreLieCombination& x, const PreLieCombination& y);

}  // namespace dendrix
