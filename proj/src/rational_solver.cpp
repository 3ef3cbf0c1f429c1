#include "qflag/rational_solver.hpp"

#include <limits>
#include <string>

#include "qflag/errors.hpp"

namespace qflag {

namespace {

void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second -= a * v;
    if (it->second == 0) y.erase(it);
  }
}

RowCombination to_combination(const SparseRow& r) {
  RowCombination c;
  c.terms.assign(r.begin(), r.end());
  return c;
}

}  // namespace

EliminationResult eliminate(const std::vector<SparseRow>& rows, std::size_t num_cols) {
  const std::size_t m = rows.size();
  std::vector<SparseRow> a = rows;
  std::vector<SparseRow> t(m);
  for (std::size_t r = 0; r < m; ++r) t[r].emplace(r, 1);

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pivot_of_col(num_cols, none);
  std::vector<bool> is_pivot(m, false);

  for (std::size_t c = 0; c < num_cols; ++c) {
    std::size_t best = none;
    for (std::size_t r = 0; r < m; ++r) {
      if (is_pivot[r] || !a[r].count(c)) continue;
      if (best == none || a[r].size() + t[r].size() < a[best].size() + t[best].size()) best = r;
    }
    if (best == none)
      fail_internal("linear system is rank deficient at unknown " + std::to_string(c));
    is_pivot[best] = true;
    pivot_of_col[c] = best;

    Rational inv = 1 / a[best].at(c);
    for (auto& [k, v] : a[best]) v *= inv;
    for (auto& [k, v] : t[best]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == best) continue;
      auto it = a[r].find(c);
      if (it == a[r].end()) continue;
      Rational f = it->second;
      axpy(a[r], f, a[best]);
      axpy(t[r], f, t[best]);
    }
  }

  EliminationResult out;
  for (std::size_t c = 0; c < num_cols; ++c) out.unknowns.push_back(to_combination(t[pivot_of_col[c]]));
  for (std::size_t r = 0; r < m; ++r) {
    if (is_pivot[r]) continue;
    if (!a[r].empty()) fail_internal("elimination left a non-zero dependent row");
    out.consistency.push_back(to_combination(t[r]));
  }
  return out;
}

}  // namespace qflag
