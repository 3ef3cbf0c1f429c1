#include "qflag/compare.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "qflag/errors.hpp"

namespace qflag {

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.passed; }));
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  entries.push_back({std::move(name), ok, std::move(detail)});
}

void CheckReport::merge(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::vector<Vec> degree_box(int length, int max_entry) {
  std::vector<Vec> out;
  Vec d(length, 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == length) {
      out.push_back(d);
      return;
    }
    for (int x = 0; x <= max_entry; ++x) {
      d[k] = x;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

ParabolicQH::ParabolicQH(std::shared_ptr<QuantumEngine> engine, ParabolicSubset J)
    : engine_(std::move(engine)), J_(std::move(J)) {
  const RootSystem& rs = roots();
  if (static_cast<int>(J_.size()) == rs.rank())
    fail_input("parabolic " + J_.to_string() + " contains every node: G/P is a point and H_2 = 0");
  const ElementTable& table = elements();
  w_J_ = table.id_of(longest_element(rs, J_));
  lift_of_.resize(table.size());
  for (ElementId id = 0; id < table.size(); ++id) {
    lift_of_[id] = table.id_of(min_coset_rep(rs, table.element(id), J_));
    if (lift_of_[id] == id) basis_.push_back(id);
  }
}

Vec ParabolicQH::q_nodes() const {
  Vec nodes;
  for (int i : J_.complement(roots().rank())) nodes.push_back(i + 1);
  return nodes;
}

ComparisonData ParabolicQH::comparison_data(std::span<const int> d_P) const {
  const RootSystem& rs = roots();
  check_degree_length(rs, J_, d_P);
  if (!is_effective(d_P)) fail_input("comparison_data: degree is not effective");
  ComparisonData data;
  data.d_B = lift_degree(rs, J_, d_P);
  if (!is_effective(data.d_B.lambda))
    fail_internal("lift of an effective degree is not effective (J=" + J_.to_string() + ")");
  data.d_B.parabolic = ParabolicSubset{};
  data.J_prime = derived_parabolic(rs, J_, data.d_B.lambda);
  data.w_prime = elements().id_of(longest_element(rs, data.J_prime));
  data.d_Pprime = push_degree(rs, data.J_prime, data.d_B.lambda);
  return data;
}

ElementId ParabolicQH::class_lift(ElementId w) const {
  if (w >= lift_of_.size()) fail_input("Schubert index out of range");
  return lift_of_[w];
}

std::optional<ElementId> ParabolicQH::class_pushforward(ElementId w) const {
  ElementId u = class_lift(w);
  const ElementTable& table = elements();
  if (table.length(w) != table.length(u) + table.length(w_J_)) return std::nullopt;
  return u;
}

Integer ParabolicQH::gw_invariant(std::span<const ElementId> cosets, std::span<const int> d_P) {
  if (cosets.size() < 3) fail_input("a Gromov-Witten invariant needs at least 3 classes");
  check_degree_length(roots(), J_, d_P);
  if (!is_effective(d_P)) return 0;
  std::vector<ElementId> lifted;
  long long total = 0;
  for (ElementId u : cosets) {
    lifted.push_back(class_lift(u));
    total += elements().length(lifted.back());
  }
  if (total != dimension() + anticanonical(d_P)) return 0;
  ComparisonData data = comparison_data(d_P);
  lifted.back() = elements().multiply(lifted.back(), data.w_prime);
  return engine_->gw_invariant(lifted, data.d_B.lambda);
}

QClass ParabolicQH::quantum_product(ElementId u, ElementId v) {
  const ElementTable& table = elements();
  const ElementId ut = class_lift(u), vt = class_lift(v);
  const long long total = table.length(ut) + table.length(vt);
  const int nq = num_q();

  Vec unit_c1(nq);
  for (int k = 0; k < nq; ++k) {
    Vec e(nq, 0);
    e[k] = 1;
    unit_c1[k] = static_cast<int>(anticanonical(e));
    if (unit_c1[k] <= 0) fail_internal("non-positive anticanonical degree on a curve class");
  }

  QClass out;
  const QClass& gb = engine_->product(ut, vt);
  Vec d(nq, 0);
  std::function<void(int, long long)> rec = [&](int k, long long c1) {
    if (k == nq) {
      long long target_len = dimension() + c1 - total;
      if (target_len < 0) return;
      ComparisonData data = comparison_data(d);
      for (ElementId w : basis_) {
        if (table.length(w) != target_len) continue;
        ElementId last = table.multiply(w, data.w_prime);
        Integer c = gb.coefficient(engine_->dual(last), data.d_B.lambda);
        if (c < 0) fail_internal("negative Gromov-Witten invariant");
        out.add(QTerm{d, dual(w)}, c);
      }
      return;
    }
    for (d[k] = 0; c1 + static_cast<long long>(d[k]) * unit_c1[k] <= total; ++d[k])
      rec(k + 1, c1 + static_cast<long long>(d[k]) * unit_c1[k]);
    d[k] = 0;
  };
  rec(0, 0);
  return out;
}

QClass ParabolicQH::multiply(const QClass& a, ElementId v) {
  QClass out;
  for (const auto& [t, c] : a.terms()) out.add_scaled(quantum_product(t.schubert, v), c, t.degree);
  return out;
}

Integer ParabolicQH::classical_intersection(std::span<const ElementId> cosets,
                                           QuantumEngine& classical) {
  if (classical.mode() != EngineMode::classical)
    fail_input("classical_intersection needs a classical engine");
  if (cosets.empty()) return 0;
  const int r = classical.num_q();
  QClass acc = QClass::schubert(class_lift(cosets[0]), r);
  for (std::size_t k = 1; k < cosets.size(); ++k) acc = classical.multiply(acc, class_lift(cosets[k]));
  for (const auto& [t, c] : acc.terms())
    if (class_lift(t.schubert) != t.schubert)
      fail_internal("pulled back product has a term outside the minimal representatives");
  auto point = class_pushforward(elements().longest_id());
  if (!point) fail_internal("point class does not push forward to the point class");
  return acc.coefficient(*point, Vec(r, 0));
}

namespace {

std::string tuple_string(const ElementTable& table, std::span<const ElementId> t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += table.element(t[k]).to_string();
  }
  return s + ")";
}

std::string vec_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + "]";
}

}  // namespace

CheckReport ParabolicQH::check_comparison_consistency(std::span<const int> d_P,
                                                      const SampleSpec& sample,
                                                      QuantumEngine* classical) {
  CheckReport report;
  check_degree_length(roots(), J_, d_P);
  if (!is_effective(d_P)) return report;
  if (sample.arity < 3) fail_input("comparison checks need at least 3 classes");

  const ElementTable& table = elements();
  const Vec dP(d_P.begin(), d_P.end());
  const std::string where = "J=" + J_.to_string() + " d=" + vec_string(dP);
  const bool degree_zero = std::all_of(dP.begin(), dP.end(), [](int x) { return x == 0; });

  std::vector<std::vector<ElementId>> tuples;
  const std::size_t n = basis_.size();
  if (sample.random_count) {
    std::mt19937_64 rng(sample.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < *sample.random_count; ++k) {
      std::vector<ElementId> t;
      for (std::size_t j = 0; j < sample.arity; ++j) t.push_back(basis_[pick(rng)]);
      tuples.push_back(std::move(t));
    }
  } else {
    std::vector<std::size_t> idx(sample.arity, 0);
    for (;;) {
      std::vector<ElementId> t;
      for (std::size_t j : idx) t.push_back(basis_[j]);
      tuples.push_back(std::move(t));
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == n) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }

  // (b) the lift of d_{P'} at level J' is d_B again, with derived parabolic J'.
  ComparisonData data = comparison_data(dP);
  ParabolicQH level(engine_, data.J_prime);
  ComparisonData again = level.comparison_data(data.d_Pprime);
  bool stable = again.d_B.lambda == data.d_B.lambda && again.J_prime == data.J_prime;
  report.add("factorization-lift " + where, stable,
             stable ? "" : "relifted " + vec_string(again.d_B.lambda) + " at J'=" +
                               again.J_prime.to_string());

  std::size_t symmetry_bad = 0, factor_bad = 0, classical_bad = 0, nonzero = 0;
  std::string symmetry_detail, factor_detail, classical_detail;
  for (auto& t : tuples) {
    Integer value = gw_invariant(t, dP);
    if (value != 0) ++nonzero;

    // (a) every slot may be the distinguished one.
    std::vector<ElementId> p = t;
    std::sort(p.begin(), p.end());
    do {
      if (gw_invariant(p, dP) != value) {
        if (symmetry_bad++ == 0)
          symmetry_detail = tuple_string(table, t) + " vs " + tuple_string(table, p);
      }
    } while (std::next_permutation(p.begin(), p.end()));

    // (b) the same invariant computed at level J'.
    if (level.gw_invariant(t, data.d_Pprime) != value) {
      if (factor_bad++ == 0) factor_detail = tuple_string(table, t);
    }

    // (c) degree zero against the pulled back classical product.
    if (degree_zero && classical) {
      if (classical_intersection(t, *classical) != value) {
        if (classical_bad++ == 0) classical_detail = tuple_string(table, t);
      }
    }
  }

  std::ostringstream counts;
  counts << tuples.size() << " tuples, " << nonzero << " non-zero";
  report.add("symmetry " + where, symmetry_bad == 0,
             symmetry_bad ? symmetry_detail : counts.str());
  report.add("factorization " + where, factor_bad == 0, factor_bad ? factor_detail : counts.str());
  if (degree_zero && classical)
    report.add("classical " + where, classical_bad == 0,
               classical_bad ? classical_detail : counts.str());
  return report;
}

}  // namespace qflag
