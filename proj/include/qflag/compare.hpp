#ifndef QFLAG_COMPARE_HPP_
#define QFLAG_COMPARE_HPP_

// Gromov-Witten invariants and quantum products of G/P obtained from G/B.
//
// For cosets u_1..u_n of W/W_J and an effective degree d_P, with d_B the
// lift of d_P, J' its derived parabolic and w_{J'} the longest element of
// W_{J'}:
//
//   <sigma_{u_1}, ..., sigma_{u_n}>_{d_P}
//       = <sigma_{~u_1}, ..., sigma_{~u_{n-1}}, sigma_{~u_n w_{J'}}>_{d_B}
//
// where ~u is the minimal representative of u.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qflag/degree.hpp"
#include "qflag/lie.hpp"
#include "qflag/qclass.hpp"
#include "qflag/qh_engine.hpp"

namespace qflag {

struct ComparisonData {
  CurveClass d_B;             // lift of d_P, as a class on G/B
  ParabolicSubset J_prime;    // derived parabolic
  ElementId w_prime = 0;      // longest element of W_{J'}
  Vec d_Pprime;               // image of d_B in H_2(G/P')

  Vec dB() const { return d_B.lambda; }
};

// One side of a comparison check, reported rather than thrown.
struct CheckEntry {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool passed() const;
  std::size_t failures() const;
  void add(std::string name, bool ok, std::string detail = {});
  void merge(const CheckReport& other);
};

// Which tuples a consistency check visits.
struct SampleSpec {
  std::size_t arity = 3;
  // Visit every tuple when unset, otherwise this many random tuples.
  std::optional<std::size_t> random_count;
  std::uint64_t seed = 0x5eed;
};

class ParabolicQH {
public:
  // Throws InputError when J is the full node set (H_2(G/G) = 0).
  ParabolicQH(std::shared_ptr<QuantumEngine> engine, ParabolicSubset J);

  const ParabolicSubset& parabolic() const { return J_; }
  QuantumEngine& engine() { return *engine_; }
  const ElementTable& elements() const { return engine_->elements(); }
  const RootSystem& roots() const { return engine_->roots(); }
  int num_q() const { return roots().rank() - static_cast<int>(J_.size()); }
  // 1-based nodes labelling the quantum parameters.
  Vec q_nodes() const;

  // Minimal representatives, by length then word.
  const std::vector<ElementId>& basis() const { return basis_; }
  long long dimension() const { return flag_dimension(roots(), J_); }
  long long anticanonical(std::span<const int> d) const {
    return anticanonical_degree(roots(), J_, d);
  }

  // Throws InputError for non-effective or wrongly sized degrees.
  ComparisonData comparison_data(std::span<const int> d_P) const;

  // Pullback index: the minimal representative of w W_J.
  ElementId class_lift(ElementId w) const;
  // Pushforward of sigma_w: [~u] when w = ~u w_J, nothing otherwise.
  std::optional<ElementId> class_pushforward(ElementId w) const;
  // Index of the dual class: the coset of w_o ~u.
  ElementId dual(ElementId u) const { return class_lift(engine_->dual(class_lift(u))); }

  Integer gw_invariant(std::span<const ElementId> cosets, std::span<const int> d_P);
  QClass quantum_product(ElementId u, ElementId v);
  QClass multiply(const QClass& a, ElementId v);

  // Classical intersection number of G/P classes computed by pulling back to
  // G/B: the coefficient of the pulled back point class in the q = 0 product.
  Integer classical_intersection(std::span<const ElementId> cosets, QuantumEngine& classical);

  CheckReport check_comparison_consistency(std::span<const int> d_P, const SampleSpec& sample,
                                           QuantumEngine* classical = nullptr);

private:
  std::shared_ptr<QuantumEngine> engine_;
  ParabolicSubset J_;
  ElementId w_J_ = 0;
  std::vector<ElementId> basis_;
  std::vector<ElementId> lift_of_;
};

// All degree vectors of the given length with entries in [0, max_entry].
std::vector<Vec> degree_box(int length, int max_entry);

}  // namespace qflag

#endif  // QFLAG_COMPARE_HPP_
