#ifndef QFLAG_QCLASS_HPP_
#define QFLAG_QCLASS_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qflag/lie.hpp"

namespace qflag {

using Integer = mpz_class;
using Rational = mpq_class;

// One basis monomial q^degree sigma_schubert. The Schubert index is an id in
// an ElementTable (for G/P classes, the id of the minimal representative).
struct QTerm {
  Vec degree;
  ElementId schubert = 0;
};

// Ordered by total q-degree, then degree vector, then Schubert id. This is
// the deterministic term order of every printed or serialised class.
struct QTermLess {
  bool operator()(const QTerm& a, const QTerm& b) const;
};

inline bool operator==(const QTerm& a, const QTerm& b) {
  return a.schubert == b.schubert && a.degree == b.degree;
}

template <class Coeff>
class BasicQClass {
public:
  using Map = std::map<QTerm, Coeff, QTermLess>;

  BasicQClass() = default;

  static BasicQClass schubert(ElementId w, int num_q) {
    BasicQClass c;
    c.terms_.emplace(QTerm{Vec(num_q, 0), w}, Coeff(1));
    return c;
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const QTerm& t, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this += factor * q^shift * other
  template <class C2>
  void add_scaled(const BasicQClass<C2>& other, const Coeff& factor, std::span<const int> shift) {
    for (const auto& [t, c] : other.terms()) {
      QTerm u = t;
      for (std::size_t i = 0; i < shift.size(); ++i) u.degree[i] += shift[i];
      add(u, Coeff(factor * c));
    }
  }

  BasicQClass& operator+=(const BasicQClass& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  BasicQClass& operator-=(const BasicQClass& o) {
    for (const auto& [t, c] : o.terms_) add(t, Coeff(-c));
    return *this;
  }

  Coeff coefficient(ElementId w, std::span<const int> degree) const {
    auto it = terms_.find(QTerm{Vec(degree.begin(), degree.end()), w});
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Terms of q-degree zero.
  BasicQClass classical_part() const {
    BasicQClass out;
    for (const auto& [t, c] : terms_)
      if (std::all_of(t.degree.begin(), t.degree.end(), [](int x) { return x == 0; }))
        out.terms_.emplace(t, c);
    return out;
  }

  bool operator==(const BasicQClass& o) const { return terms_ == o.terms_; }

private:
  Map terms_;
};

using QClass = BasicQClass<Integer>;
using RationalQClass = BasicQClass<Rational>;

// Throws InternalError on a fractional coefficient.
QClass to_integral(const RationalQClass& c, const char* context);
bool has_negative_coefficient(const QClass& c);

// Text form, e.g. "sigma[s2s1] + q1" or "q1 * sigma[s1] * 2". Exponent
// labels are the 1-based nodes in `q_nodes`; "0" for the zero class.
std::string format_qclass(const QClass& c, const ElementTable& table, std::span<const int> q_nodes);

}  // namespace qflag

#endif  // QFLAG_QCLASS_HPP_
