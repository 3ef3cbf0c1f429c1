#ifndef QFLAG_SESSION_HPP_
#define QFLAG_SESSION_HPP_

#include <map>
#include <memory>

#include "qflag/compare.hpp"
#include "qflag/qh_engine.hpp"

namespace qflag {

// Everything computed for one Cartan type: the root system, the enumerated
// Weyl group, a quantum and a classical engine, and one ParabolicQH per
// parabolic asked for. Caches live as long as the session.
class Session {
public:
  explicit Session(CartanType type, std::uint64_t bound = kDefaultEnumerationBound,
                   EngineOptions options = {})
      : rs_(build_root_system(type)),
        table_(std::make_shared<const ElementTable>(rs_, bound)),
        quantum_(std::make_shared<QuantumEngine>(table_, EngineMode::quantum, options)),
        classical_(std::make_shared<QuantumEngine>(table_, EngineMode::classical, options)) {}

  const RootSystem& roots() const { return *rs_; }
  const ElementTable& table() const { return *table_; }
  QuantumEngine& quantum() { return *quantum_; }
  QuantumEngine& classical() { return *classical_; }

  ParabolicQH& flag(const ParabolicSubset& J) {
    auto it = flags_.find(J.indices());
    if (it == flags_.end())
      it = flags_.emplace(J.indices(), std::make_unique<ParabolicQH>(quantum_, J)).first;
    return *it->second;
  }

  ElementId parse_class(std::string_view word) const {
    return table_->id_of(parse_word(*rs_, word));
  }

private:
  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const ElementTable> table_;
  std::shared_ptr<QuantumEngine> quantum_;
  std::shared_ptr<QuantumEngine> classical_;
  std::map<Vec, std::unique_ptr<ParabolicQH>> flags_;
};

}  // namespace qflag

#endif  // QFLAG_SESSION_HPP_
