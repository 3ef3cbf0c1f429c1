#ifndef QFLAG_RATIONAL_SOLVER_HPP_
#define QFLAG_RATIONAL_SOLVER_HPP_

// Exact Gauss-Jordan elimination for overdetermined systems M X = B whose
// right-hand sides are not numbers but module elements (here: classes).
// The elimination only sees M; it records, for every unknown, the row
// combination that produces it, and for every dependent row the combination
// that must vanish on a consistent right-hand side.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "qflag/qclass.hpp"

namespace qflag {

using SparseRow = std::map<std::size_t, Rational>;

struct RowCombination {
  std::vector<std::pair<std::size_t, Rational>> terms;  // (row, coefficient)
};

struct EliminationResult {
  std::vector<RowCombination> unknowns;     // X_c = sum coef * B_row
  std::vector<RowCombination> consistency;  // 0 = sum coef * B_row
};

// Throws InternalError when M has column rank below num_cols.
EliminationResult eliminate(const std::vector<SparseRow>& rows, std::size_t num_cols);

}  // namespace qflag

#endif  // QFLAG_RATIONAL_SOLVER_HPP_
