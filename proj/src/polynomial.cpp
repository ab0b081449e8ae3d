#include "dendrix/polynomial.hpp"

#include <algorithm>

#include "dendrix/errors.hpp"

namespace dendrix {

Polynomial::Polynomial(Rational constant) : c_{std::move(constant)} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, Rational coeff) {
  std::vector<Rational> c(degree + 1);
  c[degree] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * c_[k]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::integral() const {
  if (c_.empty()) return {};
  std::vector<Rational> r(c_.size() + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::truncated(int max_degree) const {
  if (degree() <= max_degree) return *this;
  return Polynomial(std::vector<Rational>(c_.begin(), c_.begin() + max_degree + 1));
}

Polynomial Polynomial::dilate(const Rational& q) const {
  std::vector<Rational> r = c_;
  Rational qk(1);
  for (auto& c : r) {
    c *= qk;
    qk *= q;
  }
  return Polynomial(std::move(r));
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[static_cast<int>(k)] - b[static_cast<int>(k)];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c.is_zero()) return {};
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x *= c;
  return Polynomial(std::move(r));
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    if (k == 1) out += "*x";
    if (k > 1) out += "*x^" + std::to_string(k);
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  // Normalize "a - b" into "a + -b" so terms split on '+'.
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '-' && !s.empty() && s.back() != '+' && s.back() != '^') s += '+';
    s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  Polynomial acc;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t cut = s.find('+', start);
    std::string term = s.substr(start, cut == std::string::npos ? std::string::npos : cut - start);
    if (term.empty()) throw ParseError("malformed polynomial '" + std::string(text) + "'");
    std::size_t xpos = term.find('x');
    Rational coeff(1);
    int deg = 0;
    if (xpos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      std::string head = term.substr(0, xpos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (head.empty() || head == "+")
        coeff = Rational(1);
      else if (head == "-")
        coeff = Rational(-1);
      else
        coeff = Rational::parse(head);
      std::string tail = term.substr(xpos + 1);
      if (tail.empty()) {
        deg = 1;
      } else {
        if (tail[0] != '^' || tail.size() < 2 || tail.find_first_not_of("0123456789", 1) != std::string::npos)
          throw ParseError("malformed exponent in '" + term + "'");
        deg = std::stoi(tail.substr(1));
      }
    }
    acc = acc + Polynomial::monomial(deg, coeff);
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  return acc;
}

Polynomial random_polynomial(SplitMix64& rng, int max_degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(rng.small_rational());
  return Polynomial(std::move(c));
}

Polynomial series_reciprocal(const Polynomial& p, int max_degree) {
  const Rational p0 = p.constant_term();
  if (p0.is_zero()) throw ZeroLeadingCoefficient("power-series reciprocal needs a nonzero constant term");
  std::vector<Rational> r(max_degree + 1);
  r[0] = Rational(1) / p0;
  for (int n = 1; n <= max_degree; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) s += p[k] * r[n - k];
    r[n] = -s / p0;
  }
  return Polynomial(std::move(r));
}

}  // namespace dendrix
