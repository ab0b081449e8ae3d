#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dendrix/dendriform.hpp"
#include "dendrix/random.hpp"
#include "dendrix/rational.hpp"

namespace dendrix {

// Labeled planar binary trees are hash-consed into a process-wide store; a
// TreeId is stable for the lifetime of the process. Id 0 is the bare leaf.
using TreeId = std::uint32_t;
inline constexpr TreeId kLeaf = 0;

struct TreeNode {
  TreeId left = kLeaf;
  TreeId right = kLeaf;
  std::uint32_t label = 0;
  std::uint32_t degree = 0;
};

TreeId make_tree(TreeId left, std::uint32_t label, TreeId right);
const TreeNode& tree_node(TreeId id);
inline std::uint32_t tree_degree(TreeId id) { return tree_node(id).degree; }

// Canonical order: degree, then preorder token sequence (leaf < any label).
bool tree_less(TreeId a, TreeId b);

class FreeElement {
 public:
  using Term = std::pair<TreeId, Rational>;

  FreeElement() = default;
  static FreeElement from_terms(std::vector<Term> terms);
  static FreeElement tree(TreeId id, Rational coeff = Rational(1));

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(TreeId id) const;
  // Terms sorted by the canonical tree order.
  std::vector<Term> canonical_terms() const;
  // Largest tree degree present, 0 for the zero element.
  std::uint32_t max_degree() const;
  bool homogeneous(std::uint32_t degree) const;

  friend bool operator==(const FreeElement&, const FreeElement&) = default;
  friend FreeElement operator+(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator-(const FreeElement& x, const FreeElement& y);
  friend FreeElement operator*(const Rational& c, const FreeElement& x);
  FreeElement operator-() const { return Rational(-1) * *this; }

 private:
  std::vector<Term> terms_;  // sorted by TreeId, no zero coefficients
};

inline bool is_zero(const FreeElement& x) { return x.terms().empty(); }

// The free dendriform algebra over a finite list of named generators.
class FreeDendriform {
 public:
  using Element = FreeElement;

  explicit FreeDendriform(std::vector<std::string> generator_names);
  // Generators named a, b, c, ...
  static FreeDendriform on_letters(int count);

  std::size_t generator_count() const { return names_->size(); }
  const std::string& generator_name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& generator_names() const { return *names_; }
  std::optional<std::size_t> generator_index(std::string_view name) const;
  FreeElement generator(std::size_t i) const;
  FreeElement generator(std::string_view name) const;

  FreeElement zero() const { return {}; }
  FreeElement prec(const FreeElement& x, const FreeElement& y) const;
  FreeElement succ(const FreeElement& x, const FreeElement& y) const;
  FreeElement star(const FreeElement& x, const FreeElement& y) const;

  std::string format_tree(TreeId id) const;
  TreeId parse_tree(std::string_view text) const;
  std::string format(const FreeElement& x) const;
  FreeElement parse(std::string_view text) const;

  friend bool operator==(const FreeDendriform& a, const FreeDendriform& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Up to max_terms terms, each a random tree of degree 1..max_degree with a
// nonzero small rational coefficient.
FreeElement random_element(const FreeDendriform& alg, SplitMix64& rng, int max_terms = 4, int max_degree = 3);
TreeId random_tree(std::size_t labels, std::uint32_t degree, SplitMix64& rng);

}  // namespace dendrix
