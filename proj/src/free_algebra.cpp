#include "dendrix/free_algebra.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <unordered_map>

#include "dendrix/errors.hpp"

namespace dendrix {

namespace {

constexpr std::uint32_t kChunkBits = 16;
constexpr std::uint32_t kChunkSize = 1u << kChunkBits;
constexpr std::uint32_t kMaxChunks = 1u << 16;

// Nodes live in fixed-size chunks that never move, so readers holding an id
// obtained from make_tree can dereference it without locking.
class TreeStore {
 public:
  TreeStore() {
    chunks_[0] = std::make_unique<TreeNode[]>(kChunkSize);
    size_ = 1;
  }

  TreeId intern(TreeId left, std::uint32_t label, TreeId right) {
    const std::uint64_t key = (static_cast<std::uint64_t>(left) << 32) ^ right;
    std::lock_guard lock(mutex_);
    auto& bucket = index_[key ^ (static_cast<std::uint64_t>(label) * 0x9e3779b97f4a7c15ULL)];
    for (TreeId id : bucket) {
      const TreeNode& n = at(id);
      if (n.left == left && n.right == right && n.label == label) return id;
    }
    const TreeId id = size_;
    const std::uint32_t chunk = id >> kChunkBits;
    if (chunk >= kMaxChunks) throw std::length_error("tree store exhausted");
    if (!chunks_[chunk]) chunks_[chunk] = std::make_unique<TreeNode[]>(kChunkSize);
    chunks_[chunk][id & (kChunkSize - 1)] = TreeNode{left, right, label, at(left).degree + at(right).degree + 1};
    ++size_;
    bucket.push_back(id);
    return id;
  }

  const TreeNode& at(TreeId id) const { return chunks_[id >> kChunkBits][id & (kChunkSize - 1)]; }

 private:
  std::mutex mutex_;
  std::array<std::unique_ptr<TreeNode[]>, kMaxChunks> chunks_;
  std::uint32_t size_ = 0;
  std::unordered_map<std::uint64_t, std::vector<TreeId>> index_;
};

TreeStore& store() {
  static TreeStore s;
  return s;
}

// Sum of trees with positive integer multiplicities, sorted by id.
using TreeSum = std::vector<std::pair<TreeId, std::uint64_t>>;

struct PairHash {
  std::size_t operator()(std::uint64_t k) const { return std::hash<std::uint64_t>{}(k * 0x9e3779b97f4a7c15ULL); }
};

struct ProductCache {
  std::unordered_map<std::uint64_t, TreeSum, PairHash> prec, succ, star;
};

ProductCache& cache() {
  thread_local ProductCache c;
  return c;
}

std::uint64_t pair_key(TreeId t, TreeId s) { return (static_cast<std::uint64_t>(t) << 32) | s; }

TreeSum normalized(TreeSum v) {
  std::sort(v.begin(), v.end());
  TreeSum out;
  for (auto& [id, k] : v) {
    if (!out.empty() && out.back().first == id)
      out.back().second += k;
    else
      out.emplace_back(id, k);
  }
  return out;
}

const TreeSum& star_trees(TreeId t, TreeId s);

// t ≺ s = t_l ∨ (t_r ★ s); the leaf on the left gives 1 ≺ s = 0.
const TreeSum& prec_trees(TreeId t, TreeId s) {
  auto& memo = cache().prec;
  const auto key = pair_key(t, s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TreeSum out;
  if (t != kLeaf) {
    const TreeNode n = tree_node(t);
    const TreeSum inner = star_trees(n.right, s);
    for (auto [r, k] : inner) out.emplace_back(make_tree(n.left, n.label, r), k);
    out = normalized(std::move(out));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

// t ≻ s = (t ★ s_l) ∨ s_r; the leaf on the right gives t ≻ 1 = 0.
const TreeSum& succ_trees(TreeId t, TreeId s) {
  auto& memo = cache().succ;
  const auto key = pair_key(t, s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TreeSum out;
  if (s != kLeaf) {
    const TreeNode n = tree_node(s);
    const TreeSum inner = star_trees(t, n.left);
    for (auto [r, k] : inner) out.emplace_back(make_tree(r, n.label, n.right), k);
    out = normalized(std::move(out));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

const TreeSum& star_trees(TreeId t, TreeId s) {
  auto& memo = cache().star;
  const auto key = pair_key(t, s);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TreeSum out;
  if (t == kLeaf) {
    out = {{s, 1}};
  } else if (s == kLeaf) {
    out = {{t, 1}};
  } else {
    TreeSum p = prec_trees(t, s);
    const TreeSum& q = succ_trees(t, s);
    p.insert(p.end(), q.begin(), q.end());
    out = normalized(std::move(p));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

template <class TreeProduct>
FreeElement bilinear(const FreeElement& x, const FreeElement& y, TreeProduct product) {
  if (x.size() == 0 || y.size() == 0) return {};
  std::unordered_map<TreeId, mpq_class> acc;
  mpq_class cd;
  for (const auto& [t, c] : x.terms()) {
    for (const auto& [s, d] : y.terms()) {
      const TreeSum& sum = product(t, s);
      if (sum.empty()) continue;
      cd = c.raw() * d.raw();
      for (auto [r, k] : sum) {
        mpq_class& slot = acc[r];
        if (k == 1)
          slot += cd;
        else
          slot += cd * mpq_class(mpz_class(static_cast<unsigned long>(k)));
      }
    }
  }
  std::vector<FreeElement::Term> terms;
  terms.reserve(acc.size());
  for (auto& [id, q] : acc)
    if (sgn(q) != 0) terms.emplace_back(id, Rational(q));
  return FreeElement::from_terms(std::move(terms));
}

void preorder(TreeId id, std::vector<std::uint32_t>& out) {
  if (id == kLeaf) {
    out.push_back(0);
    return;
  }
  const TreeNode& n = tree_node(id);
  out.push_back(n.label + 1);
  preorder(n.left, out);
  preorder(n.right, out);
}

}  // namespace

TreeId make_tree(TreeId left, std::uint32_t label, TreeId right) { return store().intern(left, label, right); }

const TreeNode& tree_node(TreeId id) { return store().at(id); }

bool tree_less(TreeId a, TreeId b) {
  if (a == b) return false;
  const auto da = tree_degree(a), db = tree_degree(b);
  if (da != db) return da < db;
  std::vector<std::uint32_t> pa, pb;
  preorder(a, pa);
  preorder(b, pb);
  return pa < pb;
}

FreeElement FreeElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  FreeElement e;
  for (auto& [id, c] : terms) {
    if (id == kLeaf) throw std::invalid_argument("the unit tree is not a body term");
    if (!e.terms_.empty() && e.terms_.back().first == id)
      e.terms_.back().second += c;
    else
      e.terms_.emplace_back(id, std::move(c));
  }
  std::erase_if(e.terms_, [](const Term& t) { return t.second.is_zero(); });
  return e;
}

FreeElement FreeElement::tree(TreeId id, Rational coeff) { return from_terms({{id, std::move(coeff)}}); }

Rational FreeElement::coefficient(TreeId id) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), id, [](const Term& t, TreeId v) { return t.first < v; });
  return (it != terms_.end() && it->first == id) ? it->second : Rational(0);
}

std::vector<FreeElement::Term> FreeElement::canonical_terms() const {
  auto out = terms_;
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return tree_less(x.first, y.first); });
  return out;
}

std::uint32_t FreeElement::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, tree_degree(t.first));
  return d;
}

bool FreeElement::homogeneous(std::uint32_t degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return tree_degree(t.first) == degree; });
}

namespace {

template <class Op>
FreeElement merge(const FreeElement& x, const FreeElement& y, Op op) {
  std::vector<FreeElement::Term> out;
  out.reserve(x.size() + y.size());
  auto i = x.terms().begin(), ie = x.terms().end();
  auto j = y.terms().begin(), je = y.terms().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == ie || j->first < i->first) {
      out.emplace_back(j->first, op(Rational(0), j->second));
      ++j;
    } else {
      Rational c = op(i->second, j->second);
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return FreeElement::from_terms(std::move(out));
}

}  // namespace

FreeElement operator+(const FreeElement& x, const FreeElement& y) {
  if (y.size() == 0) return x;
  if (x.size() == 0) return y;
  return merge(x, y, [](const Rational& a, const Rational& b) { return a + b; });
}

FreeElement operator-(const FreeElement& x, const FreeElement& y) {
  if (y.size() == 0) return x;
  return merge(x, y, [](const Rational& a, const Rational& b) { return a - b; });
}

FreeElement operator*(const Rational& c, const FreeElement& x) {
  if (c.is_zero()) return {};
  FreeElement r = x;
  auto terms = r.terms();
  for (auto& t : terms) t.second *= c;
  return FreeElement::from_terms(std::move(terms));
}

FreeDendriform::FreeDendriform(std::vector<std::string> generator_names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(generator_names))) {
  if (names_->empty()) throw std::invalid_argument("free dendriform algebra needs at least one generator");
  for (std::size_t i = 0; i < names_->size(); ++i) {
    const std::string& n = (*names_)[i];
    if (n.empty() || n.find_first_of(" ().+·*/") != std::string::npos)
      throw ParseError("invalid generator name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if ((*names_)[j] == n) throw ParseError("duplicate generator name '" + n + "'");
  }
}

FreeDendriform FreeDendriform::on_letters(int count) {
  if (count < 1 || count > 26) throw std::invalid_argument("generator count must be in 1..26");
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return FreeDendriform(std::move(names));
}

std::optional<std::size_t> FreeDendriform::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

FreeElement FreeDendriform::generator(std::size_t i) const {
  if (i >= names_->size()) throw std::out_of_range("generator index");
  return FreeElement::tree(make_tree(kLeaf, static_cast<std::uint32_t>(i), kLeaf));
}

FreeElement FreeDendriform::generator(std::string_view name) const {
  auto i = generator_index(name);
  if (!i) throw ParseError("unknown generator '" + std::string(name) + "'");
  return generator(*i);
}

FreeElement FreeDendriform::prec(const FreeElement& x, const FreeElement& y) const {
  return bilinear(x, y, [](TreeId t, TreeId s) -> const TreeSum& { return prec_trees(t, s); });
}

FreeElement FreeDendriform::succ(const FreeElement& x, const FreeElement& y) const {
  return bilinear(x, y, [](TreeId t, TreeId s) -> const TreeSum& { return succ_trees(t, s); });
}

FreeElement FreeDendriform::star(const FreeElement& x, const FreeElement& y) const {
  return bilinear(x, y, [](TreeId t, TreeId s) -> const TreeSum& { return star_trees(t, s); });
}

std::string FreeDendriform::format_tree(TreeId id) const {
  if (id == kLeaf) return ".";
  const TreeNode& n = tree_node(id);
  return "(" + format_tree(n.left) + " " + generator_name(n.label) + " " + format_tree(n.right) + ")";
}

namespace {

struct TreeParser {
  const FreeDendriform& alg;
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("tree parse error at " + std::to_string(pos) + ": " + why);
  }
  TreeId parse() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '.') {
      ++pos;
      return kLeaf;
    }
    if (s[pos] != '(') fail("expected '(' or '.'");
    ++pos;
    TreeId left = parse();
    skip();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '(' && s[pos] != ')' && s[pos] != '.') ++pos;
    auto label = alg.generator_index(s.substr(start, pos - start));
    if (!label) fail("unknown generator '" + std::string(s.substr(start, pos - start)) + "'");
    TreeId right = parse();
    skip();
    if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
    ++pos;
    return make_tree(left, static_cast<std::uint32_t>(*label), right);
  }
};

constexpr std::string_view kDot = "\xC2\xB7";  // U+00B7 middle dot

}  // namespace

TreeId FreeDendriform::parse_tree(std::string_view text) const {
  TreeParser p{*this, text};
  TreeId id = p.parse();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return id;
}

std::string FreeDendriform::format(const FreeElement& x) const {
  if (x.size() == 0) return "0";
  std::string out;
  for (const auto& [id, c] : x.canonical_terms()) {
    if (!out.empty()) out += " + ";
    out += c.sign() > 0 ? "+" + c.str() : c.str();
    out += kDot;
    out += format_tree(id);
  }
  return out;
}

FreeElement FreeDendriform::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "0") return {};
  std::vector<FreeElement::Term> terms;
  while (!text.empty()) {
    std::size_t cut = text.find(" + ");
    std::string_view term = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view() : text.substr(cut + 3);
    std::size_t sep = term.find(kDot);
    std::size_t sep_len = kDot.size();
    if (sep == std::string_view::npos) {
      sep = term.find('*');
      sep_len = 1;
    }
    if (sep == std::string_view::npos && !term.empty() && term.front() == '(') {
      terms.emplace_back(parse_tree(term), Rational(1));
      continue;
    }
    if (sep == std::string_view::npos) throw ParseError("term without coefficient separator: '" + std::string(term) + "'");
    terms.emplace_back(parse_tree(term.substr(sep + sep_len)), Rational::parse(term.substr(0, sep)));
  }
  for (const auto& t : terms)
    if (t.first == kLeaf) throw ParseError("the unit tree cannot appear in an element body");
  return FreeElement::from_terms(std::move(terms));
}

TreeId random_tree(std::size_t labels, std::uint32_t degree, SplitMix64& rng) {
  if (degree == 0) return kLeaf;
  const auto left_degree = static_cast<std::uint32_t>(rng.uniform(0, degree - 1));
  const auto label = static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(labels) - 1));
  TreeId left = random_tree(labels, left_degree, rng);
  TreeId right = random_tree(labels, degree - 1 - left_degree, rng);
  return make_tree(left, label, right);
}

FreeElement random_element(const FreeDendriform& alg, SplitMix64& rng, int max_terms, int max_degree) {
  const auto terms = rng.uniform(1, max_terms);
  std::vector<FreeElement::Term> out;
  for (std::int64_t i = 0; i < terms; ++i) {
    auto degree = static_cast<std::uint32_t>(rng.uniform(1, max_degree));
    out.emplace_back(random_tree(alg.generator_count(), degree, rng), rng.nonzero_small_rational());
  }
  auto e = FreeElement::from_terms(std::move(out));
  if (is_zero(e)) return alg.generator(0);
  return e;
}

}  // namespace dendrix
