#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "dendrix/free_algebra.hpp"
#include "dendrix/planar_tree.hpp"
#include "dendrix/prelie_expr.hpp"
#include "dendrix/rota_baxter.hpp"
#include "dendrix/series.hpp"

namespace dendrix {

using Json = nlohmann::ordered_json;

// "free", "free:k", "poly-riemann:n=2", "seq:L=8,theta=1", "qsum:q=1/2", "tri:n=3".
struct FreeModel {
  int generators = 1;
  friend bool operator==(const FreeModel&, const FreeModel&) = default;
};
using ModelChoice = std::variant<FreeModel, PolyRiemann, SeqPartialSum, QSummation, TriangularSplit>;

ModelChoice parse_model(std::string_view text);
std::string model_string(const ModelChoice& m);

// Element encodings: free elements and polynomials as text, sequences as arrays
// of rationals, matrices as arrays of rows.
Json encode_element(const FreeDendriform& alg, const FreeElement& x);
Json encode_element(const RBDendriform<PolyRiemann>& alg, const PolyMatrix& x);
Json encode_element(const RBDendriform<SeqPartialSum>& alg, const Sequence& x);
Json encode_element(const RBDendriform<QSummation>& alg, const Polynomial& x);
Json encode_element(const RBDendriform<TriangularSplit>& alg, const RationalMatrix& x);

FreeElement decode_element(const FreeDendriform& alg, const Json& j);
PolyMatrix decode_element(const RBDendriform<PolyRiemann>& alg, const Json& j);
Sequence decode_element(const RBDendriform<SeqPartialSum>& alg, const Json& j);
Polynomial decode_element(const RBDendriform<QSummation>& alg, const Json& j);
RationalMatrix decode_element(const RBDendriform<TriangularSplit>& alg, const Json& j);

// One-line text rendering of a carrier element.
std::string element_text(const FreeDendriform& alg, const FreeElement& x);
template <RotaBaxterModel M>
std::string element_text(const RBDendriform<M>& alg, const typename M::Element& x) {
  const Json j = encode_element(alg, x);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

template <Dendriform A>
Json encode_augmented(const A& alg, const AugmentedOf<A>& x) {
  return Json{{"unit", x.unit.str()}, {"body", encode_element(alg, x.body)}};
}

template <Dendriform A>
AugmentedOf<A> decode_augmented(const A& alg, const Json& j) {
  if (!j.is_object() || !j.contains("unit") || !j.contains("body"))
    throw ParseError("augmented element needs \"unit\" and \"body\"");
  return {Rational::parse(j.at("unit").get<std::string>()), decode_element(alg, j.at("body"))};
}

template <Dendriform A>
std::string augmented_text(const A& alg, const AugmentedOf<A>& x) {
  if (x.unit.is_zero()) return element_text(alg, x.body);
  if (is_zero(x.body)) return x.unit.str();
  return x.unit.str() + " + " + element_text(alg, x.body);
}

template <Dendriform A>
Json encode_series(const Series<A>& s) {
  Json coeffs = Json::array();
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(encode_augmented(s.algebra(), s[k]));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

template <Dendriform A>
Series<A> decode_series(const A& alg, const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("series needs \"order\" and \"coeffs\"");
  const int order = j.at("order").get<int>();
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
    throw ParseError("series needs order+1 coefficients");
  Series<A> s(alg, order);
  for (int k = 0; k <= order; ++k) s[k] = decode_augmented(alg, coeffs[k]);
  return s;
}

Json encode_tree_row(const PlanarTree& t);
Json encode_combination(const PreLieCombination& c);
PreLieCombination decode_combination(const Json& j);

}  // namespace dendrix
