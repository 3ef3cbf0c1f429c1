#ifndef QFLAG_LIE_HPP_
#define QFLAG_LIE_HPP_

// Root systems of finite Cartan type and Weyl group combinatorics.
//
// Conventions used throughout the library:
//  - Nodes are 0-based internally and 1-based in text (words "s1s2", CLI).
//  - cartan(i, j) = <alpha_j, h_i>, Bourbaki labelling.
//  - Roots are integer vectors in simple-root coordinates, coweights are
//    integer vectors in simple-coroot coordinates. All pairings go through
//    the Cartan matrix, so no inner products and no floating point.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qflag {

using Vec = std::vector<int>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series = Series::A;
  int rank = 1;

  // Accepts "A2", "b3", "E6". Throws InputError on unknown or invalid types.
  static CartanType parse(std::string_view text);
  std::string name() const;
  bool operator==(const CartanType&) const = default;
};

// Throws InputError unless (series, rank) names a finite irreducible type.
void validate(const CartanType& type);

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

class RootSystem {
public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<Vec>& cartan_matrix() const { return cartan_; }
  const Vec& symmetrizer() const { return symmetrizer_; }

  // Height-graded, lexicographically decreasing within a height, so the
  // simple roots come first in node order.
  const std::vector<Vec>& positive_roots() const { return roots_; }
  const std::vector<Vec>& coroots() const { return coroots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  int height(std::size_t root) const { return heights_[root]; }
  int max_height() const { return heights_.back(); }
  std::optional<std::size_t> root_index(std::span<const int> root) const;

  // <root, coweight> = sum_{i,j} root_j cw_i cartan(i, j).
  int pairing(std::span<const int> root, std::span<const int> coweight) const;
  // <alpha_j, coweight> for every node j.
  Vec simple_pairings(std::span<const int> coweight) const;

  // s_alpha(lambda) = lambda - <alpha, lambda> alpha^vee for a positive root alpha.
  Vec reflect_coweight(std::span<const int> root, std::span<const int> coweight) const;
  void reflect_coweight_by(std::size_t root, Vec& coweight) const;
  void simple_reflect_coweight(int i, Vec& coweight) const;
  void simple_reflect_root(int i, Vec& root) const;

private:
  void check_dim(std::span<const int> v, const char* what) const;

  CartanType type_;
  int rank_;
  std::vector<Vec> cartan_;
  Vec symmetrizer_;
  std::vector<Vec> roots_;
  std::vector<Vec> coroots_;
  Vec heights_;
  std::unordered_map<Vec, std::size_t, VecHash> root_lookup_;
};

std::shared_ptr<const RootSystem> build_root_system(CartanType type);

// A set of nodes, stored 0-based and sorted. Empty means B, everything means G.
class ParabolicSubset {
public:
  ParabolicSubset() = default;
  // Throws InputError on out-of-range or duplicate nodes.
  static ParabolicSubset from_indices(const RootSystem& rs, std::vector<int> indices);
  // 1-based node numbers, as typed on the command line.
  static ParabolicSubset from_nodes(const RootSystem& rs, const std::vector<int>& nodes);
  // Comma separated 1-based nodes, "" for the Borel.
  static ParabolicSubset parse(const RootSystem& rs, std::string_view text);

  const Vec& indices() const { return indices_; }
  Vec nodes() const;
  bool contains(int i) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  // Nodes not in the subset, i.e. the coordinates of a degree vector.
  Vec complement(int rank) const;
  std::string to_string() const;  // "[1,3]"
  bool operator==(const ParabolicSubset&) const = default;

private:
  Vec indices_;
};

// Indices of the positive roots supported on J (the roots of the Levi).
std::vector<std::size_t> roots_of(const RootSystem& rs, const ParabolicSubset& J);

// |W_J|, from the exponents read off the height distribution of R_J^+.
std::uint64_t weyl_order(const RootSystem& rs, const ParabolicSubset& J);
std::uint64_t weyl_order(const RootSystem& rs);

// A Weyl group element, identified by the image of the dual Weyl vector
// rho^vee (pairing 1 with every simple root), written in fundamental-coweight
// coordinates. That vector has trivial stabiliser, so it determines w.
struct WeylElement {
  Vec key;
  Vec word;  // reduced, 0-based; w = s_{word[0]} s_{word[1]} ...

  int length() const { return static_cast<int>(word.size()); }
  std::string to_string() const;  // "e" or "s1s2s1"
  bool operator==(const WeylElement& o) const { return key == o.key; }
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return VecHash{}(w.key); }
};

WeylElement identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
WeylElement reflection(const RootSystem& rs, std::size_t root);
WeylElement from_key(const RootSystem& rs, Vec key);
// Any word, reduced or not. Throws InputError on out-of-range letters.
WeylElement from_word(const RootSystem& rs, std::span<const int> word);
// "e", "s1s2s1"; letters are 1-based.
WeylElement parse_word(const RootSystem& rs, std::string_view text);

WeylElement multiply(const RootSystem& rs, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
inline int length(const WeylElement& w) { return w.length(); }
inline const Vec& reduced_word(const WeylElement& w) { return w.word; }
Vec act(const RootSystem& rs, const WeylElement& w, std::span<const int> coweight);
Vec act_on_root(const RootSystem& rs, const WeylElement& w, std::span<const int> root);
// Counted directly as #{alpha > 0 : w(alpha) < 0}; independent of the word.
int inversion_count(const RootSystem& rs, const WeylElement& w);

bool is_left_descent(const WeylElement& w, int i);
bool is_right_descent(const RootSystem& rs, const WeylElement& w, int i);

WeylElement min_coset_rep(const RootSystem& rs, WeylElement w, const ParabolicSubset& J);
WeylElement longest_element(const RootSystem& rs, const ParabolicSubset& J);

inline constexpr std::uint64_t kDefaultEnumerationBound = 100000;

// Minimal representatives of W/W_J, ordered by length then word.
// Throws BoundError when |W| exceeds the bound.
std::vector<WeylElement> enumerate_min_reps(const RootSystem& rs, const ParabolicSubset& J,
                                            std::uint64_t bound = kDefaultEnumerationBound);

using ElementId = std::uint32_t;

// All of W, indexed by (length, word). Holds the tables the product engine
// needs: right multiplication by every reflection s_alpha and left
// multiplication by w_o.
class ElementTable {
public:
  ElementTable(std::shared_ptr<const RootSystem> rs,
               std::uint64_t bound = kDefaultEnumerationBound);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& element(ElementId id) const { return elements_[id]; }
  int length(ElementId id) const { return elements_[id].length(); }
  ElementId id_of(const WeylElement& w) const;
  ElementId identity_id() const { return 0; }
  ElementId longest_id() const { return static_cast<ElementId>(elements_.size() - 1); }
  int max_length() const { return length(longest_id()); }
  std::span<const ElementId> of_length(int k) const;

  // w s_alpha
  ElementId times_reflection(ElementId w, std::size_t root) const {
    return reflect_[static_cast<std::size_t>(w) * rs_->num_positive_roots() + root];
  }
  // w_o w
  ElementId longest_times(ElementId w) const { return longest_left_[w]; }
  ElementId multiply(ElementId u, ElementId v) const;

private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<WeylElement> elements_;
  std::unordered_map<Vec, ElementId, VecHash> lookup_;
  std::vector<std::vector<ElementId>> levels_;
  std::vector<ElementId> reflect_;
  std::vector<ElementId> longest_left_;
};

}  // namespace qflag

#endif  // QFLAG_LIE_HPP_
