#ifndef QFLAG_QH_ENGINE_HPP_
#define QFLAG_QH_ENGINE_HPP_

// Small quantum cohomology of G/B in the Schubert basis.
//
// Seed: the quantum Chevalley formula
//
//   sigma_{s_i} * sigma_w = sum_{l(w s_a) = l(w)+1} <omega_i, a^vee> sigma_{w s_a}
//        + sum_{l(w s_a) = l(w)+1-<2rho, a^vee>} <omega_i, a^vee> q^{a^vee} sigma_{w s_a}.
//
// General products sigma_u * sigma_v are obtained by induction on l(u):
// for every pair (i, w') with l(w') = k-1, associativity gives
//
//   sum_{classical a} <omega_i, a^vee> X_{w' s_a}
//        = sigma_{s_i} * X_{w'} - sum_{quantum a} <omega_i, a^vee> q^{a^vee} X_{w' s_a}
//
// with X_w = sigma_w * sigma_v. The right side only involves X of length
// < k, and the left side has full column rank because H^2 generates H^*
// rationally. The system is solved once per length k, exactly.

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "qflag/lie.hpp"
#include "qflag/qclass.hpp"
#include "qflag/rational_solver.hpp"

namespace qflag {

enum class EngineMode { quantum, classical };

struct EngineOptions {
  // Check every dependent row of each linear system against the computed
  // right-hand sides.
  bool verify_consistency = true;
};

struct ChevalleyTerm {
  ElementId target;  // w s_alpha
  std::size_t root;  // alpha
  bool quantum;
};

// Not thread safe: products are memoised per right factor v. Use one engine
// per thread.
class QuantumEngine {
public:
  explicit QuantumEngine(std::shared_ptr<const ElementTable> table,
                         EngineMode mode = EngineMode::quantum, EngineOptions options = {});

  const ElementTable& elements() const { return *table_; }
  const std::shared_ptr<const ElementTable>& elements_ptr() const { return table_; }
  const RootSystem& roots() const { return table_->roots(); }
  EngineMode mode() const { return mode_; }
  int num_q() const { return roots().rank(); }

  // Terms of the Chevalley formula for w, classical and quantum, all roots
  // with l(w s_a) matching; coefficients are read per node from the coroot.
  const std::vector<ChevalleyTerm>& chevalley_terms(ElementId w);

  // sigma_{s_i} * sigma_w. Throws InputError for i out of range.
  QClass chevalley_multiply(int i, ElementId w);

  // sigma_u * sigma_v (classical product in classical mode).
  const QClass& product(ElementId u, ElementId v);

  QClass multiply(const QClass& a, ElementId v);
  QClass multiply(const QClass& a, const QClass& b);

  // Coefficient of q^d sigma^{u_n} in sigma_{u_1} * ... * sigma_{u_{n-1}},
  // sigma^u = sigma_{w_o u}. Zero off-grading or for non-effective d.
  Integer gw_invariant(std::span<const ElementId> classes, std::span<const int> d);

  // w_o u
  ElementId dual(ElementId u) const { return table_->longest_times(u); }

  std::size_t slices_computed() const { return slices_.size(); }

private:
  struct LevelSystem {
    std::vector<ElementId> row_source;  // w' of row r = pos * rank + i
    std::unordered_map<ElementId, std::size_t> column_of;
    EliminationResult solution;
  };
  struct Slice {
    int filled = -1;
    std::vector<QClass> x;
  };

  const LevelSystem& level_system(int k);
  void fill(Slice& s, ElementId v, int upto);
  QClass chevalley_times(int i, const QClass& a);
  void check_product(const QClass& c, ElementId u, ElementId v) const;

  std::shared_ptr<const ElementTable> table_;
  EngineMode mode_;
  EngineOptions options_;
  std::vector<std::vector<ChevalleyTerm>> chevalley_;
  std::vector<bool> chevalley_ready_;
  std::unordered_map<int, LevelSystem> levels_;
  std::unordered_map<ElementId, Slice> slices_;
};

}  // namespace qflag

#endif  // QFLAG_QH_ENGINE_HPP_
