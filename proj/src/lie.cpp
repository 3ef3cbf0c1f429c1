#include "qflag/lie.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include "qflag/errors.hpp"

namespace qflag {

// ---------------------------------------------------------------------------
// Cartan types

CartanType CartanType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.size() < 2)
    fail_input("invalid Cartan type '" + std::string(text) + "' (expected e.g. A2, B3, E6)");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G')
    fail_input("unknown Cartan series '" + std::string(1, text[0]) + "'");
  int rank = 0;
  auto rest = text.substr(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    fail_input("invalid Cartan type '" + std::string(text) + "'");
  CartanType t{static_cast<Series>(c), rank};
  validate(t);
  return t;
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

void validate(const CartanType& t) {
  int n = t.rank;
  bool ok = false;
  switch (t.series) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 3; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok)
    fail_input("invalid Cartan type " + t.name() +
               " (A n>=1, B/C n>=2, D n>=3, E n in {6,7,8}, F n=4, G n=2)");
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::vector<Vec> cartan_matrix_of(const CartanType& t) {
  const int n = t.rank;
  std::vector<Vec> a(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 1-based
  auto edge = [&](int i, int j) { link(i - 1, j - 1); };
  switch (t.series) {
    case Series::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case Series::B:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;  // <alpha_{n-1}, h_n>, alpha_n short
      break;
    case Series::C:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;  // <alpha_n, h_{n-1}>, alpha_n long
      break;
    case Series::D:
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
      edge(n - 2, n);
      break;
    case Series::E:
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      break;
    case Series::F:
      edge(1, 2);
      edge(2, 3);
      edge(3, 4);
      a[2][1] = -2;  // <alpha_2, h_3>
      break;
    case Series::G:
      edge(1, 2);
      a[0][1] = -3;  // <alpha_2, h_1>, alpha_1 short
      break;
  }
  return a;
}

Vec symmetrizer_of(const std::vector<Vec>& a) {
  const int n = static_cast<int>(a.size());
  // d_i a_ij = d_j a_ji; propagate rationals num/den along the Dynkin graph.
  std::vector<long long> num(n, 0), den(n, 1);
  num[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || num[j] != 0) continue;
      num[j] = num[i] * a[i][j];
      den[j] = den[i] * a[j][i];
      if (den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
      long long g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      queue.push_back(j);
    }
  }
  long long l = 1;
  for (int i = 0; i < n; ++i) {
    if (num[i] <= 0) fail_internal("Cartan matrix is not connected or not symmetrisable");
    l = std::lcm(l, den[i]);
  }
  Vec d(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, num[i] * (l / den[i]));
  for (int i = 0; i < n; ++i) d[i] = static_cast<int>(num[i] * (l / den[i]) / g);
  return d;
}

// Leading principal minors of d_i a_ij, by fraction-free elimination.
bool positive_definite(const std::vector<Vec>& a, const Vec& d) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = static_cast<long long>(d[i]) * a[i][j];
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;  // k-th leading minor
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return true;
}

int vec_sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool is_negative(const Vec& root) {
  return std::any_of(root.begin(), root.end(), [](int x) { return x < 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(CartanType type) : type_(type), rank_(type.rank) {
  validate(type_);
  cartan_ = cartan_matrix_of(type_);
  symmetrizer_ = symmetrizer_of(cartan_);
  if (!positive_definite(cartan_, symmetrizer_))
    fail_internal("Cartan matrix of " + type_.name() + " is not of finite type");

  // Close the simple roots under ascending simple reflections, carrying the
  // coroot along: (s_i beta)^vee = s_i(beta^vee).
  std::vector<Vec> roots, coroots;
  std::unordered_map<Vec, std::size_t, VecHash> seen;
  for (int i = 0; i < rank_; ++i) {
    Vec e(rank_, 0);
    e[i] = 1;
    seen.emplace(e, roots.size());
    roots.push_back(e);
    coroots.push_back(e);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      int p = 0;
      for (int j = 0; j < rank_; ++j) p += roots[k][j] * cartan_[i][j];
      if (p >= 0) continue;
      Vec beta = roots[k];
      beta[i] -= p;
      if (seen.count(beta)) continue;
      Vec cobeta = coroots[k];
      int q = 0;
      for (int j = 0; j < rank_; ++j) q += cobeta[j] * cartan_[j][i];
      cobeta[i] -= q;
      seen.emplace(beta, roots.size());
      roots.push_back(std::move(beta));
      coroots.push_back(std::move(cobeta));
    }
  }

  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    int hx = vec_sum(roots[x]), hy = vec_sum(roots[y]);
    if (hx != hy) return hx < hy;
    return roots[x] > roots[y];
  });
  for (std::size_t k : order) {
    roots_.push_back(roots[k]);
    coroots_.push_back(coroots[k]);
    heights_.push_back(vec_sum(roots[k]));
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) root_lookup_.emplace(roots_[k], k);
}

std::shared_ptr<const RootSystem> build_root_system(CartanType type) {
  return std::make_shared<const RootSystem>(type);
}

void RootSystem::check_dim(std::span<const int> v, const char* what) const {
  if (static_cast<int>(v.size()) != rank_)
    fail_input(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
               std::to_string(rank_));
}

std::optional<std::size_t> RootSystem::root_index(std::span<const int> root) const {
  auto it = root_lookup_.find(Vec(root.begin(), root.end()));
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::pairing(std::span<const int> root, std::span<const int> coweight) const {
  check_dim(root, "root vector");
  check_dim(coweight, "coweight vector");
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (coweight[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += root[j] * coweight[i] * cartan_[i][j];
  }
  return s;
}

Vec RootSystem::simple_pairings(std::span<const int> coweight) const {
  check_dim(coweight, "coweight vector");
  Vec p(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) p[j] += coweight[i] * cartan_[i][j];
  return p;
}

Vec RootSystem::reflect_coweight(std::span<const int> root, std::span<const int> coweight) const {
  check_dim(root, "root vector");
  auto idx = root_index(root);
  if (!idx) fail_input("reflect_coweight: vector is not a positive root");
  Vec out(coweight.begin(), coweight.end());
  check_dim(out, "coweight vector");
  reflect_coweight_by(*idx, out);
  return out;
}

void RootSystem::reflect_coweight_by(std::size_t root, Vec& coweight) const {
  int p = pairing(roots_[root], coweight);
  for (int i = 0; i < rank_; ++i) coweight[i] -= p * coroots_[root][i];
}

void RootSystem::simple_reflect_coweight(int i, Vec& coweight) const {
  int p = 0;
  for (int k = 0; k < rank_; ++k) p += coweight[k] * cartan_[k][i];
  coweight[i] -= p;
}

void RootSystem::simple_reflect_root(int i, Vec& root) const {
  int p = 0;
  for (int j = 0; j < rank_; ++j) p += root[j] * cartan_[i][j];
  root[i] -= p;
}

// ---------------------------------------------------------------------------
// Parabolic subsets

ParabolicSubset ParabolicSubset::from_indices(const RootSystem& rs, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] < 0 || indices[k] >= rs.rank())
      fail_input("parabolic node " + std::to_string(indices[k] + 1) + " out of range 1.." +
                 std::to_string(rs.rank()));
    if (k > 0 && indices[k] == indices[k - 1])
      fail_input("parabolic node " + std::to_string(indices[k] + 1) + " listed twice");
  }
  ParabolicSubset J;
  J.indices_ = std::move(indices);
  return J;
}

ParabolicSubset ParabolicSubset::from_nodes(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<int> idx;
  for (int n : nodes) idx.push_back(n - 1);
  return from_indices(rs, std::move(idx));
}

ParabolicSubset ParabolicSubset::parse(const RootSystem& rs, std::string_view text) {
  std::vector<int> nodes;
  std::string item;
  auto flush = [&] {
    if (item.empty()) return;
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      fail_input("invalid parabolic node '" + item + "'");
    nodes.push_back(v);
    item.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) item.push_back(c);
  }
  flush();
  return from_nodes(rs, nodes);
}

Vec ParabolicSubset::nodes() const {
  Vec out;
  for (int i : indices_) out.push_back(i + 1);
  return out;
}

bool ParabolicSubset::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

Vec ParabolicSubset::complement(int rank) const {
  Vec out;
  for (int i = 0; i < rank; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

std::string ParabolicSubset::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices_[k] + 1);
  }
  return s + "]";
}

std::vector<std::size_t> roots_of(const RootSystem& rs, const ParabolicSubset& J) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    const Vec& r = rs.positive_roots()[k];
    bool inside = true;
    for (int i = 0; i < rs.rank() && inside; ++i)
      if (r[i] != 0 && !J.contains(i)) inside = false;
    if (inside) out.push_back(k);
  }
  return out;
}

std::uint64_t weyl_order(const RootSystem& rs, const ParabolicSubset& J) {
  // The number of exponents equal to k is n_k - n_{k+1}, where n_k counts
  // positive roots of height k; |W| = prod (m_i + 1).
  Vec count(rs.max_height() + 2, 0);
  for (std::size_t k : roots_of(rs, J)) ++count[rs.height(k)];
  std::uint64_t order = 1;
  for (std::size_t k = 1; k + 1 < count.size(); ++k)
    for (int m = 0; m < count[k] - count[k + 1]; ++m) order *= k + 1;
  return order;
}

std::uint64_t weyl_order(const RootSystem& rs) {
  Vec all(rs.rank());
  std::iota(all.begin(), all.end(), 0);
  return weyl_order(rs, ParabolicSubset::from_indices(rs, all));
}

// ---------------------------------------------------------------------------
// Weyl group elements

namespace {

void left_reflect_key(const RootSystem& rs, int i, Vec& key) {
  int p = key[i];
  if (p == 0) return;
  for (int j = 0; j < rs.rank(); ++j) key[j] -= p * rs.cartan(i, j);
}

void apply_word_to_key(const RootSystem& rs, std::span<const int> word, Vec& key) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) left_reflect_key(rs, *it, key);
}

void check_letter(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank())
    fail_input("generator s" + std::to_string(i + 1) + " out of range 1.." +
               std::to_string(rs.rank()));
}

}  // namespace

std::string WeylElement::to_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

WeylElement from_key(const RootSystem& rs, Vec key) {
  WeylElement w;
  w.key = key;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && key[i] >= 0) ++i;
    if (i == rs.rank()) break;
    w.word.push_back(i);
    left_reflect_key(rs, i, key);
  }
  return w;
}

WeylElement identity(const RootSystem& rs) { return WeylElement{Vec(rs.rank(), 1), {}}; }

WeylElement simple_reflection(const RootSystem& rs, int i) {
  check_letter(rs, i);
  Vec key(rs.rank(), 1);
  left_reflect_key(rs, i, key);
  return WeylElement{std::move(key), {i}};
}

WeylElement reflection(const RootSystem& rs, std::size_t root) {
  if (root >= rs.num_positive_roots()) fail_input("root index out of range");
  // s_alpha(rho^vee) = rho^vee - ht(alpha) alpha^vee
  Vec key = rs.simple_pairings(rs.coroots()[root]);
  for (int& x : key) x = 1 - rs.height(root) * x;
  return from_key(rs, std::move(key));
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  for (int i : word) check_letter(rs, i);
  Vec key(rs.rank(), 1);
  apply_word_to_key(rs, word, key);
  return from_key(rs, std::move(key));
}

WeylElement parse_word(const RootSystem& rs, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*' && c != '.') s.push_back(c);
  if (s.empty()) fail_input("empty class word (use e for the identity)");
  if (s == "e" || s == "1") return identity(rs);
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 's' && s[pos] != 'S')
      fail_input("invalid class word '" + std::string(text) + "' (expected e.g. s1s2 or e)");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail_input("invalid class word '" + std::string(text) + "'");
    int node = 0;
    std::from_chars(s.data() + start, s.data() + pos, node);
    if (node < 1 || node > rs.rank())
      fail_input("generator s" + std::to_string(node) + " in '" + std::string(text) +
                 "' out of range 1.." + std::to_string(rs.rank()));
    word.push_back(node - 1);
  }
  return from_word(rs, word);
}

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  Vec key = v.key;
  apply_word_to_key(rs, u.word, key);
  return from_key(rs, std::move(key));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  Vec rev(w.word.rbegin(), w.word.rend());
  return from_word(rs, rev);
}

Vec act(const RootSystem& rs, const WeylElement& w, std::span<const int> coweight) {
  Vec out(coweight.begin(), coweight.end());
  if (static_cast<int>(out.size()) != rs.rank()) fail_input("coweight has wrong length");
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) rs.simple_reflect_coweight(*it, out);
  return out;
}

Vec act_on_root(const RootSystem& rs, const WeylElement& w, std::span<const int> root) {
  Vec out(root.begin(), root.end());
  if (static_cast<int>(out.size()) != rs.rank()) fail_input("root has wrong length");
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) rs.simple_reflect_root(*it, out);
  return out;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int n = 0;
  for (const Vec& r : rs.positive_roots())
    if (is_negative(act_on_root(rs, w, r))) ++n;
  return n;
}

bool is_left_descent(const WeylElement& w, int i) { return w.key[i] < 0; }

bool is_right_descent(const RootSystem& rs, const WeylElement& w, int i) {
  Vec e(rs.rank(), 0);
  e[i] = 1;
  return is_negative(act_on_root(rs, w, e));
}

WeylElement min_coset_rep(const RootSystem& rs, WeylElement w, const ParabolicSubset& J) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : J.indices()) {
      if (is_right_descent(rs, w, j)) {
        w = multiply(rs, w, simple_reflection(rs, j));
        moved = true;
      }
    }
  }
  return w;
}

WeylElement longest_element(const RootSystem& rs, const ParabolicSubset& J) {
  WeylElement w = identity(rs);
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : J.indices()) {
      if (!is_right_descent(rs, w, j)) {
        w = multiply(rs, w, simple_reflection(rs, j));
        moved = true;
      }
    }
  }
  return w;
}

namespace {

// Level-by-level generation by left multiplication. W^J is closed under
// removing left descents, so every element is reached from a shorter one.
std::vector<std::vector<WeylElement>> generate_levels(const RootSystem& rs,
                                                      const ParabolicSubset& J) {
  std::vector<std::vector<WeylElement>> levels{{identity(rs)}};
  for (;;) {
    std::unordered_map<Vec, WeylElement, VecHash> next;
    for (const WeylElement& w : levels.back()) {
      for (int i = 0; i < rs.rank(); ++i) {
        if (w.key[i] <= 0) continue;
        Vec key = w.key;
        left_reflect_key(rs, i, key);
        if (next.count(key)) continue;
        WeylElement x = from_key(rs, key);
        bool minimal = true;
        for (int j : J.indices())
          if (is_right_descent(rs, x, j)) { minimal = false; break; }
        if (minimal) next.emplace(std::move(key), std::move(x));
      }
    }
    if (next.empty()) break;
    std::vector<WeylElement> level;
    for (auto& kv : next) level.push_back(std::move(kv.second));
    std::sort(level.begin(), level.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
    levels.push_back(std::move(level));
  }
  return levels;
}

void check_bound(const RootSystem& rs, std::uint64_t bound) {
  std::uint64_t n = weyl_order(rs);
  if (n > bound) {
    std::ostringstream msg;
    msg << "Weyl group of " << rs.type().name() << " has " << n
        << " elements, above the enumeration bound " << bound;
    throw BoundError(msg.str());
  }
}

}  // namespace

std::vector<WeylElement> enumerate_min_reps(const RootSystem& rs, const ParabolicSubset& J,
                                            std::uint64_t bound) {
  check_bound(rs, bound);
  std::vector<WeylElement> out;
  for (auto& level : generate_levels(rs, J))
    for (auto& w : level) out.push_back(std::move(w));
  return out;
}

// ---------------------------------------------------------------------------
// ElementTable

ElementTable::ElementTable(std::shared_ptr<const RootSystem> rs, std::uint64_t bound)
    : rs_(std::move(rs)) {
  check_bound(*rs_, bound);
  for (auto& level : generate_levels(*rs_, ParabolicSubset{})) {
    levels_.emplace_back();
    for (auto& w : level) {
      auto id = static_cast<ElementId>(elements_.size());
      lookup_.emplace(w.key, id);
      levels_.back().push_back(id);
      elements_.push_back(std::move(w));
    }
  }

  const std::size_t npos = rs_->num_positive_roots();
  std::vector<Vec> reflection_keys;
  for (std::size_t a = 0; a < npos; ++a) reflection_keys.push_back(reflection(*rs_, a).key);
  reflect_.resize(elements_.size() * npos);
  longest_left_.resize(elements_.size());
  const WeylElement& w0 = elements_.back();
  for (std::size_t id = 0; id < elements_.size(); ++id) {
    for (std::size_t a = 0; a < npos; ++a) {
      Vec key = reflection_keys[a];
      apply_word_to_key(*rs_, elements_[id].word, key);
      reflect_[id * npos + a] = lookup_.at(key);
    }
    Vec key = elements_[id].key;
    apply_word_to_key(*rs_, w0.word, key);
    longest_left_[id] = lookup_.at(key);
  }
}

ElementId ElementTable::id_of(const WeylElement& w) const {
  auto it = lookup_.find(w.key);
  if (it == lookup_.end()) fail_input("element does not belong to this Weyl group");
  return it->second;
}

std::span<const ElementId> ElementTable::of_length(int k) const {
  if (k < 0 || k >= static_cast<int>(levels_.size())) return {};
  return levels_[k];
}

ElementId ElementTable::multiply(ElementId u, ElementId v) const {
  Vec key = elements_[v].key;
  apply_word_to_key(*rs_, elements_[u].word, key);
  return lookup_.at(key);
}

}  // namespace qflag
