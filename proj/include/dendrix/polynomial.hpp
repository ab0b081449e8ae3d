#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dendrix/random.hpp"
#include "dendrix/rational.hpp"

namespace dendrix {

// Dense univariate polynomial in x, trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(int degree, Rational coeff = Rational(1));
  static Polynomial x() { return monomial(1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  Rational constant_term() const { return (*this)[0]; }

  Polynomial derivative() const;
  // ∫₀ˣ
  Polynomial integral() const;
  Polynomial truncated(int max_degree) const;
  // f(q·x)
  Polynomial dilate(const Rational& q) const;
  Rational evaluate(const Rational& at) const;

  std::string str() const;
  static Polynomial parse(std::string_view text);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial operator-() const { return Rational(-1) * *this; }

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const Polynomial& p) { return p.degree() < 0; }

Polynomial random_polynomial(SplitMix64& rng, int max_degree = 3);

// Power-series reciprocal of p truncated at x-degree max_degree; p(0) must be nonzero.
Polynomial series_reciprocal(const Polynomial& p, int max_degree);

}  // namespace dendrix
