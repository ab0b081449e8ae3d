#include "dendrix/prelie_expr.hpp"

#include <map>

#include "dendrix/errors.hpp"

namespace dendrix {

namespace {

constexpr std::string_view kTriangle = "\xE2\x96\xB7";  // U+25B7 ▷
constexpr std::string_view kDot = "\xC2\xB7";           // U+00B7 ·

const FreeDendriform& letter_algebra() {
  static const FreeDendriform alg({"a"});
  return alg;
}

struct ExprParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("pre-Lie expression parse error at " + std::to_string(pos) + ": " + why);
  }
  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool operator_ahead() {
    skip();
    if (s.substr(pos, kTriangle.size()) == kTriangle) {
      pos += kTriangle.size();
      return true;
    }
    if (pos < s.size() && s[pos] == '>') {
      ++pos;
      return true;
    }
    return false;
  }
  PreLieExpr atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == 'a') {
      ++pos;
      return PreLieExpr::letter();
    }
    if (s[pos] != '(') fail("expected 'a' or '('");
    ++pos;
    PreLieExpr inner = expr();
    skip();
    if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
    ++pos;
    return inner;
  }
  PreLieExpr expr() {
    PreLieExpr lhs = atom();
    if (operator_ahead()) {
      PreLieExpr rhs = atom();
      std::size_t save = pos;
      if (operator_ahead()) {
        pos = save;
        fail("ambiguous chained product; add brackets");
      }
      return PreLieExpr::product(lhs, rhs);
    }
    return lhs;
  }
};

}  // namespace

struct PreLieExpr::Node {
  PreLieExpr left, right;
};

const PreLieExpr& PreLieExpr::left() const { return node_->left; }
const PreLieExpr& PreLieExpr::right() const { return node_->right; }

PreLieExpr PreLieExpr::letter() { return PreLieExpr(); }

PreLieExpr PreLieExpr::product(PreLieExpr left, PreLieExpr right) {
  PreLieExpr e;
  e.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right)});
  return e;
}

PreLieExpr operator>>(const PreLieExpr& x, const PreLieExpr& y) { return PreLieExpr::product(x, y); }

int PreLieExpr::degree() const { return is_letter() ? 1 : left().degree() + right().degree(); }

std::string PreLieExpr::str() const {
  if (is_letter()) return "a";
  return "(" + left().str() + std::string(kTriangle) + right().str() + ")";
}

PreLieExpr PreLieExpr::parse(std::string_view text) {
  ExprParser p{text};
  PreLieExpr e = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return e;
}

bool operator==(const PreLieExpr& x, const PreLieExpr& y) {
  if (x.is_letter() || y.is_letter()) return x.is_letter() == y.is_letter();
  return x.left() == y.left() && x.right() == y.right();
}

std::string PreLieCombination::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, e] : terms) {
    if (!out.empty()) out += " + ";
    out += (c.sign() >= 0 ? "+" : "") + c.str() + std::string(kDot) + e.str();
  }
  return out;
}

PreLieCombination PreLieCombination::parse(std::string_view text) {
  PreLieCombination out;
  std::size_t start = 0;
  while (start < text.size() && text[start] == ' ') ++start;
  if (text.substr(start) == "0") return out;
  // Terms are separated by " + " at bracket depth zero.
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t last = start;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && text.substr(i, 3) == " + ") {
      parts.push_back(text.substr(last, i - last));
      last = i + 3;
      i += 2;
    }
  }
  parts.push_back(text.substr(last));
  for (std::string_view part : parts) {
    std::size_t sep = part.find(kDot);
    std::size_t sep_len = kDot.size();
    if (sep == std::string_view::npos) {
      sep = part.find('*');
      sep_len = 1;
    }
    if (sep == std::string_view::npos) {
      out.terms.emplace_back(Rational(1), PreLieExpr::parse(part));
    } else {
      out.terms.emplace_back(Rational::parse(part.substr(0, sep)), PreLieExpr::parse(part.substr(sep + sep_len)));
    }
  }
  return out;
}

namespace {

FreeElement evaluate_memo(const PreLieExpr& e, std::map<std::string, FreeElement>& memo) {
  const FreeDendriform& alg = letter_algebra();
  if (e.is_letter()) return alg.generator(0);
  const std::string key = e.str();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  FreeElement x = evaluate_memo(e.left(), memo);
  FreeElement y = evaluate_memo(e.right(), memo);
  FreeElement r = alg.succ(x, y) - alg.prec(y, x);
  memo.emplace(key, r);
  return r;
}

}  // namespace

FreeElement evaluate(const PreLieExpr& e) {
  std::map<std::string, FreeElement> memo;
  return evaluate_memo(e, memo);
}

FreeElement evaluate(const PreLieCombination& c) {
  std::map<std::string, FreeElement> memo;
  FreeElement acc;
  for (const auto& [coeff, e] : c.terms) acc = acc + coeff * evaluate_memo(e, memo);
  return acc;
}

bool prelie_equal(const PreLieCombination& x, const PreLieCombination& y) { return evaluate(x) == evaluate(y); }

}  // namespace dendrix
