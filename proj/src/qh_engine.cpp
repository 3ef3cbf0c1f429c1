#include "qflag/qh_engine.hpp"

#include <numeric>
#include <string>

#include "qflag/degree.hpp"
#include "qflag/errors.hpp"

namespace qflag {

QuantumEngine::QuantumEngine(std::shared_ptr<const ElementTable> table, EngineMode mode,
                             EngineOptions options)
    : table_(std::move(table)),
      mode_(mode),
      options_(options),
      chevalley_(table_->size()),
      chevalley_ready_(table_->size(), false) {}

const std::vector<ChevalleyTerm>& QuantumEngine::chevalley_terms(ElementId w) {
  if (chevalley_ready_[w]) return chevalley_[w];
  const RootSystem& rs = roots();
  const int lw = table_->length(w);
  auto& out = chevalley_[w];
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
    ElementId target = table_->times_reflection(w, a);
    int lt = table_->length(target);
    const Vec& co = rs.coroots()[a];
    int co_height = std::accumulate(co.begin(), co.end(), 0);
    if (lt == lw + 1)
      out.push_back({target, a, false});
    else if (lt == lw + 1 - 2 * co_height)
      out.push_back({target, a, true});
  }
  chevalley_ready_[w] = true;
  return out;
}

QClass QuantumEngine::chevalley_multiply(int i, ElementId w) {
  if (i < 0 || i >= num_q()) fail_input("divisor index out of range");
  if (w >= table_->size()) fail_input("Schubert index out of range");
  const RootSystem& rs = roots();
  QClass out;
  Vec zero(num_q(), 0);
  for (const ChevalleyTerm& t : chevalley_terms(w)) {
    int c = rs.coroots()[t.root][i];
    if (c == 0) continue;
    if (!t.quantum)
      out.add(QTerm{zero, t.target}, c);
    else if (mode_ == EngineMode::quantum)
      out.add(QTerm{rs.coroots()[t.root], t.target}, c);
  }
  return out;
}

QClass QuantumEngine::chevalley_times(int i, const QClass& a) {
  QClass out;
  for (const auto& [t, c] : a.terms()) out.add_scaled(chevalley_multiply(i, t.schubert), c, t.degree);
  return out;
}

const QuantumEngine::LevelSystem& QuantumEngine::level_system(int k) {
  if (auto it = levels_.find(k); it != levels_.end()) return it->second;
  const RootSystem& rs = roots();
  const int rank = rs.rank();
  LevelSystem sys;
  auto cols = table_->of_length(k);
  for (std::size_t c = 0; c < cols.size(); ++c) sys.column_of.emplace(cols[c], c);
  std::vector<SparseRow> rows;
  for (ElementId wp : table_->of_length(k - 1)) {
    sys.row_source.push_back(wp);
    for (int i = 0; i < rank; ++i) {
      SparseRow row;
      for (const ChevalleyTerm& t : chevalley_terms(wp)) {
        int c = rs.coroots()[t.root][i];
        if (t.quantum || c == 0) continue;
        row[sys.column_of.at(t.target)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  sys.solution = eliminate(rows, cols.size());
  return levels_.emplace(k, std::move(sys)).first->second;
}

void QuantumEngine::check_product(const QClass& c, ElementId u, ElementId v) const {
  const int total = table_->length(u) + table_->length(v);
  for (const auto& [t, coeff] : c.terms()) {
    if (coeff < 0)
      fail_internal("negative structure constant in sigma_" + table_->element(u).to_string() +
                    " * sigma_" + table_->element(v).to_string());
    int qdeg = std::accumulate(t.degree.begin(), t.degree.end(), 0);
    if (table_->length(t.schubert) + 2 * qdeg != total)
      fail_internal("inhomogeneous term in sigma_" + table_->element(u).to_string() +
                    " * sigma_" + table_->element(v).to_string());
  }
}

void QuantumEngine::fill(Slice& s, ElementId v, int upto) {
  const RootSystem& rs = roots();
  const int rank = rs.rank();
  upto = std::min(upto, table_->max_length());
  if (s.filled < 0) {
    s.x.resize(table_->size());
    s.x[table_->identity_id()] = QClass::schubert(v, num_q());
    s.filled = 0;
  }
  for (int k = s.filled + 1; k <= upto; ++k) {
    if (k == 1) {
      for (ElementId w : table_->of_length(1)) {
        s.x[w] = chevalley_multiply(table_->element(w).word[0], v);
        check_product(s.x[w], w, v);
      }
      s.filled = 1;
      continue;
    }
    const LevelSystem& sys = level_system(k);
    const std::size_t m = sys.row_source.size() * rank;
    std::vector<bool> needed(m, options_.verify_consistency);
    for (const auto& comb : sys.solution.unknowns)
      for (const auto& [r, coef] : comb.terms) needed[r] = true;

    std::vector<QClass> rhs(m);
    for (std::size_t r = 0; r < m; ++r) {
      if (!needed[r]) continue;
      ElementId wp = sys.row_source[r / rank];
      int i = static_cast<int>(r % rank);
      QClass b = chevalley_times(i, s.x[wp]);
      if (mode_ == EngineMode::quantum) {
        for (const ChevalleyTerm& t : chevalley_terms(wp)) {
          int c = rs.coroots()[t.root][i];
          if (!t.quantum || c == 0) continue;
          b.add_scaled(s.x[t.target], Integer(-c), rs.coroots()[t.root]);
        }
      }
      rhs[r] = std::move(b);
    }

    auto cols = table_->of_length(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      RationalQClass acc;
      for (const auto& [r, coef] : sys.solution.unknowns[c].terms) acc.add_scaled(rhs[r], coef, {});
      s.x[cols[c]] = to_integral(acc, "quantum product");
      check_product(s.x[cols[c]], cols[c], v);
    }
    if (options_.verify_consistency) {
      for (const auto& comb : sys.solution.consistency) {
        RationalQClass acc;
        for (const auto& [r, coef] : comb.terms) acc.add_scaled(rhs[r], coef, {});
        if (!acc.empty())
          fail_internal("inconsistent Chevalley system at length " + std::to_string(k) +
                        " for v = " + table_->element(v).to_string());
      }
    }
    s.filled = k;
  }
}

const QClass& QuantumEngine::product(ElementId u, ElementId v) {
  if (u >= table_->size() || v >= table_->size()) fail_input("Schubert index out of range");
  Slice& s = slices_[v];
  if (s.filled < table_->length(u)) fill(s, v, table_->length(u));
  return s.x[u];
}

QClass QuantumEngine::multiply(const QClass& a, ElementId v) {
  QClass out;
  for (const auto& [t, c] : a.terms()) out.add_scaled(product(t.schubert, v), c, t.degree);
  return out;
}

QClass QuantumEngine::multiply(const QClass& a, const QClass& b) {
  QClass out;
  for (const auto& [tb, cb] : b.terms()) out.add_scaled(multiply(a, tb.schubert), cb, tb.degree);
  return out;
}

Integer QuantumEngine::gw_invariant(std::span<const ElementId> classes, std::span<const int> d) {
  if (classes.size() < 3) fail_input("a Gromov-Witten invariant needs at least 3 classes");
  if (static_cast<int>(d.size()) != num_q())
    fail_input("degree has " + std::to_string(d.size()) + " entries, expected " +
               std::to_string(num_q()));
  for (ElementId u : classes)
    if (u >= table_->size()) fail_input("Schubert index out of range");
  if (!is_effective(d)) return 0;
  const long long qdeg = std::accumulate(d.begin(), d.end(), 0LL);
  if (mode_ == EngineMode::classical && qdeg != 0) return 0;
  long long total = 0;
  for (ElementId u : classes) total += table_->length(u);
  if (total != table_->max_length() + 2 * qdeg) return 0;

  QClass acc = QClass::schubert(classes[0], num_q());
  for (std::size_t k = 1; k + 1 < classes.size(); ++k) acc = multiply(acc, classes[k]);
  return acc.coefficient(dual(classes.back()), d);
}

}  // namespace qflag
