#include "dendrix/planar_tree.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "dendrix/errors.hpp"

namespace dendrix {

PlanarTree::PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {
  for (const auto& c : children_) degree_ += c.degree_;
}

PlanarTree PlanarTree::ladder(int degree) {
  PlanarTree t;
  for (int i = 1; i < degree; ++i) t = PlanarTree(std::vector<PlanarTree>{t});
  return t;
}

PlanarTree PlanarTree::corolla(int leaves) { return PlanarTree(std::vector<PlanarTree>(leaves)); }

std::vector<int> PlanarTree::fertility_sequence() const {
  std::vector<int> out;
  std::function<void(const PlanarTree&)> walk = [&](const PlanarTree& t) {
    out.push_back(t.fertility());
    for (const auto& c : t.children_) walk(c);
  };
  walk(*this);
  return out;
}

bool operator<(const PlanarTree& a, const PlanarTree& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return a.fertility_sequence() < b.fertility_sequence();
}

std::string PlanarTree::str() const {
  std::string out = "[";
  for (const auto& c : children_) out += c.str();
  return out + "]";
}

PlanarTree PlanarTree::parse(std::string_view text) {
  std::size_t pos = 0;
  std::function<PlanarTree()> node = [&]() -> PlanarTree {
    if (pos >= text.size() || text[pos] != '[') throw ParseError("tree parse error: expected '[' at " + std::to_string(pos));
    ++pos;
    std::vector<PlanarTree> children;
    while (pos < text.size() && text[pos] != ']') {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      children.push_back(node());
    }
    if (pos >= text.size()) throw ParseError("tree parse error: missing ']'");
    ++pos;
    return PlanarTree(std::move(children));
  };
  PlanarTree t = node();
  if (pos != text.size()) throw ParseError("tree parse error: trailing characters");
  return t;
}

namespace {

using TreeFamily = std::vector<std::vector<PlanarTree>>;

// All ordered forests of `parts` trees with total degree `total`.
void forests(const std::function<const std::vector<PlanarTree>&(int)>& trees_of, int parts, int total,
             std::vector<PlanarTree>& prefix, std::vector<std::vector<PlanarTree>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (int d = 1; d <= total - (parts - 1); ++d) {
    for (const PlanarTree& t : trees_of(d)) {
      prefix.push_back(t);
      forests(trees_of, parts - 1, total - d, prefix, out);
      prefix.pop_back();
    }
  }
}

const std::vector<PlanarTree>& family(int n, bool restricted) {
  static std::mutex mutex;
  static TreeFamily tables[2];
  std::lock_guard lock(mutex);
  TreeFamily& table = tables[restricted ? 1 : 0];
  std::function<const std::vector<PlanarTree>&(int)> trees_of = [&](int d) -> const std::vector<PlanarTree>& {
    while (static_cast<int>(table.size()) <= d) table.emplace_back();
    if (!table[d].empty() || d == 0) return table[d];
    std::vector<PlanarTree> out;
    if (d == 1) {
      out.emplace_back();
    } else {
      for (int k = 1; k <= d - 1; ++k) {
        if (restricted && k > 1 && k % 2 == 1) continue;
        std::vector<PlanarTree> prefix;
        std::vector<std::vector<PlanarTree>> kids;
        forests(trees_of, k, d - 1, prefix, kids);
        for (auto& f : kids) out.emplace_back(std::move(f));
      }
    }
    std::sort(out.begin(), out.end());
    table[d] = std::move(out);
    return table[d];
  };
  return trees_of(n);
}

}  // namespace

std::vector<PlanarTree> enumerate_e1(int n) {
  if (n < 1) throw std::invalid_argument("tree degree must be at least 1");
  return family(n, true);
}

std::vector<PlanarTree> enumerate_planar(int n) {
  if (n < 1) throw std::invalid_argument("tree degree must be at least 1");
  return family(n, false);
}

Rational alpha(const PlanarTree& t) {
  Rational r = bernoulli(t.fertility()) / factorial(t.fertility());
  for (const auto& c : t.children()) {
    if (r.is_zero()) break;
    r *= alpha(c);
  }
  return r;
}

std::vector<Integer> poincare_counts(int n) {
  if (n < 0) throw std::invalid_argument("count index must be nonnegative");
  std::vector<Integer> t(n + 1);
  for (int k = 0; k <= n; ++k) {
    Integer s = 1;
    for (int p = 0; p <= k - 2; ++p)
      for (int q = 0; p + q <= k - 2; ++q) s += t[p] * t[q] * t[k - 2 - p - q];
    t[k] = s;
  }
  return t;
}

namespace {

std::vector<Integer> mul(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  std::vector<Integer> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; i + j < x.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

}  // namespace

PoincareResiduals poincare_residuals(int order) {
  const std::vector<Integer> t = poincare_counts(order);
  const std::vector<Integer> t3 = mul(mul(t, t), t);
  PoincareResiduals out;
  out.t_equation.resize(order + 1);
  for (int k = 0; k <= order; ++k) out.t_equation[k] = t[k] - (k >= 2 ? t3[k - 2] : Integer(0)) - 1;
  std::vector<Integer> w(order + 1);
  for (int k = 1; k <= order; ++k) w[k] = t[k - 1];
  const std::vector<Integer> w3 = mul(mul(w, w), w);
  out.w_equation.resize(order + 1);
  for (int k = 0; k <= order; ++k) out.w_equation[k] = w[k] - w3[k] - (k >= 1 ? 1 : 0);
  return out;
}

PreLieExpr tree_expression(const PlanarTree& t) {
  PreLieExpr acc = PreLieExpr::letter();
  const auto& kids = t.children();
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) acc = tree_expression(*it) >> acc;
  return acc;
}

PreLieCombination butcher_terms(int degree) {
  PreLieCombination out;
  for (const PlanarTree& t : enumerate_e1(degree)) {
    Rational c = alpha(t);
    if (!c.is_zero()) out.terms.emplace_back(c, tree_expression(t));
  }
  return out;
}

}  // namespace dendrix
