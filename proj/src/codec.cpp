#include "dendrix/codec.hpp"

#include <charconv>
#include <map>

namespace dendrix {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(const std::string& text, const std::string& key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("model parameter " + key + " must be an integer");
  return v;
}

Rational parse_rational_param(const std::string& text, const std::string& key) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError("model parameter " + key + " must be a rational p/q");
  }
}

std::map<std::string, std::string> parse_params(std::string_view text, const std::string& model,
                                                std::initializer_list<const char*> allowed) {
  std::map<std::string, std::string> params;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const auto comma = text.find(',', pos);
    const std::string item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("model parameter '" + item + "' must be key=value");
    const std::string key = trim(item.substr(0, eq));
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw UsageError("unknown parameter '" + key + "' for model " + model);
    params[key] = trim(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return params;
}

const Json& require_array(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) throw CarrierMismatch(std::string("expected ") + what);
  return j;
}

std::string require_string(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string");
  return j.get<std::string>();
}

template <class T, class F>
Json encode_matrix(const Matrix<T>& m, F encode) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T, class F>
Matrix<T> decode_matrix(const Json& j, int n, F decode) {
  require_array(j, n, "a square matrix of the model size");
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i) {
    require_array(j[i], n, "a square matrix of the model size");
    for (int k = 0; k < n; ++k) m(i, k) = decode(require_string(j[i][k]));
  }
  return m;
}

}  // namespace

ModelChoice parse_model(std::string_view text) {
  const std::string spec = trim(text);
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "free") {
    FreeModel m;
    if (!rest.empty()) m.generators = parse_int(rest, "k");
    if (m.generators < 1 || m.generators > 26) throw UsageError("free model needs 1..26 generators");
    return m;
  }
  if (kind == "poly-riemann") {
    auto p = parse_params(rest, kind, {"n"});
    PolyRiemann m;
    if (p.contains("n")) m.n = parse_int(p["n"], "n");
    if (m.n < 1) throw UsageError("poly-riemann needs n >= 1");
    return m;
  }
  if (kind == "seq") {
    auto p = parse_params(rest, kind, {"L", "theta"});
    SeqPartialSum m;
    if (p.contains("L")) m.length = parse_int(p["L"], "L");
    if (p.contains("theta")) m.theta = parse_rational_param(p["theta"], "theta");
    if (m.length < 1) throw UsageError("seq needs L >= 1");
    return m;
  }
  if (kind == "qsum") {
    auto p = parse_params(rest, kind, {"q"});
    QSummation m;
    if (p.contains("q")) m.q = parse_rational_param(p["q"], "q");
    if (m.q == Rational(1) || m.q == Rational(-1)) throw UsageError("qsum needs q != 1 and q != -1");
    return m;
  }
  if (kind == "tri") {
    auto p = parse_params(rest, kind, {"n"});
    TriangularSplit m;
    if (p.contains("n")) m.n = parse_int(p["n"], "n");
    if (m.n < 1) throw UsageError("tri needs n >= 1");
    return m;
  }
  throw UsageError("unknown model '" + spec + "'");
}

std::string model_string(const ModelChoice& m) {
  struct {
    std::string operator()(const FreeModel& f) const { return "free:" + std::to_string(f.generators); }
    std::string operator()(const PolyRiemann& p) const { return "poly-riemann:n=" + std::to_string(p.n); }
    std::string operator()(const SeqPartialSum& s) const {
      return "seq:L=" + std::to_string(s.length) + ",theta=" + s.theta.str();
    }
    std::string operator()(const QSummation& q) const { return "qsum:q=" + q.q.str(); }
    std::string operator()(const TriangularSplit& t) const { return "tri:n=" + std::to_string(t.n); }
  } visitor;
  return std::visit(visitor, m);
}

Json encode_element(const FreeDendriform& alg, const FreeElement& x) { return alg.format(x); }

Json encode_element(const RBDendriform<PolyRiemann>&, const PolyMatrix& x) {
  return encode_matrix(x, [](const Polynomial& p) { return p.str(); });
}

Json encode_element(const RBDendriform<SeqPartialSum>&, const Sequence& x) {
  Json values = Json::array();
  for (const auto& v : x.values) values.push_back(v.str());
  return values;
}

Json encode_element(const RBDendriform<QSummation>&, const Polynomial& x) { return x.str(); }

Json encode_element(const RBDendriform<TriangularSplit>&, const RationalMatrix& x) {
  return encode_matrix(x, [](const Rational& r) { return r.str(); });
}

FreeElement decode_element(const FreeDendriform& alg, const Json& j) { return alg.parse(require_string(j)); }

PolyMatrix decode_element(const RBDendriform<PolyRiemann>& alg, const Json& j) {
  return decode_matrix<Polynomial>(j, alg.model.n, [](const std::string& s) { return Polynomial::parse(s); });
}

Sequence decode_element(const RBDendriform<SeqPartialSum>& alg, const Json& j) {
  require_array(j, alg.model.length, "a sequence of the model length");
  Sequence s;
  for (const auto& v : j) s.values.push_back(Rational::parse(require_string(v)));
  return s;
}

Polynomial decode_element(const RBDendriform<QSummation>&, const Json& j) {
  return Polynomial::parse(require_string(j));
}

RationalMatrix decode_element(const RBDendriform<TriangularSplit>& alg, const Json& j) {
  return decode_matrix<Rational>(j, alg.model.n, [](const std::string& s) { return Rational::parse(s); });
}

std::string element_text(const FreeDendriform& alg, const FreeElement& x) { return alg.format(x); }

Json encode_tree_row(const PlanarTree& t) {
  return Json{{"degree", t.degree()}, {"tree", t.str()}, {"alpha", alpha(t).str()}};
}

Json encode_combination(const PreLieCombination& c) {
  Json terms = Json::array();
  for (const auto& [coeff, expr] : c.terms) terms.push_back(Json{{"coeff", coeff.str()}, {"expr", expr.str()}});
  return terms;
}

PreLieCombination decode_combination(const Json& j) {
  if (!j.is_array()) throw ParseError("pre-Lie combination must be an array of terms");
  PreLieCombination c;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("expr")) throw ParseError("term needs coeff and expr");
    c.terms.emplace_back(Rational::parse(require_string(t.at("coeff"))), PreLieExpr::parse(require_string(t.at("expr"))));
  }
  return c;
}

}  // namespace dendrix
