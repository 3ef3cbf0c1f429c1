#include "qflag/checks.hpp"

#include <array>
#include <functional>
#include <random>

#include "qflag/degree.hpp"
#include "qflag/errors.hpp"

namespace qflag {

namespace {

std::string vec_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + "]";
}

std::string where(const Session& s, const ParabolicSubset& J) {
  return s.roots().type().name() + " J=" + J.to_string();
}

constexpr std::size_t kFullTripleLimit = 600;

}  // namespace

std::vector<Vec> brute_force_lifts(const RootSystem& rs, const ParabolicSubset& J,
                                   std::span<const int> d, int window) {
  check_degree_length(rs, J, d);
  Vec lambda(rs.rank(), 0);
  auto outside = J.complement(rs.rank());
  for (std::size_t k = 0; k < outside.size(); ++k) lambda[outside[k]] = d[k];

  std::vector<Vec> levi_roots;
  for (const Vec& r : rs.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (r[i] != 0 && !J.contains(i)) inside = false;
    if (inside) levi_roots.push_back(r);
  }

  std::vector<Vec> found;
  const Vec& free = J.indices();
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == free.size()) {
      for (const Vec& r : levi_roots) {
        long long p = 0;
        for (int i = 0; i < rs.rank(); ++i)
          for (int j = 0; j < rs.rank(); ++j) p += 1LL * r[j] * lambda[i] * rs.cartan(i, j);
        if (p != 0 && p != -1) return;
      }
      found.push_back(lambda);
      return;
    }
    for (int c = -window; c <= window; ++c) {
      lambda[free[k]] = c;
      rec(k + 1);
    }
    lambda[free[k]] = 0;
  };
  rec(0);
  return found;
}

CheckReport associativity_suite(Session& s, const SuiteOptions& opt) {
  CheckReport report;
  QuantumEngine& q = s.quantum();
  QuantumEngine& cl = s.classical();
  const ElementTable& table = s.table();
  const std::size_t n = table.size();
  const int r = q.num_q();
  const std::string tag = s.roots().type().name();

  std::vector<std::array<ElementId, 3>> triples;
  if (n * n * n <= kFullTripleLimit) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) triples.push_back({a, b, c});
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (std::size_t k = 0; k < opt.random_triples; ++k)
      triples.push_back({pick(rng), pick(rng), pick(rng)});
  }

  std::size_t bad = 0;
  std::string detail;
  for (const auto& [a, b, c] : triples) {
    QClass lhs = q.multiply(q.product(a, b), c);
    QClass rhs = q.multiply(QClass::schubert(a, r), q.product(b, c));
    if (!(lhs == rhs) && bad++ == 0)
      detail = table.element(a).to_string() + "," + table.element(b).to_string() + "," +
               table.element(c).to_string();
  }
  report.add("associativity " + tag, bad == 0,
             bad ? detail : std::to_string(triples.size()) + " triples");

  std::size_t comm_bad = 0, classical_bad = 0, pairing_bad = 0;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const QClass& ab = q.product(a, b);
      if (!(ab == q.product(b, a))) ++comm_bad;
      const QClass& cab = cl.product(a, b);
      if (!(ab.classical_part() == cab)) ++classical_bad;
      Integer top = cab.coefficient(table.longest_id(), Vec(r, 0));
      if (top != (b == table.longest_times(a) ? 1 : 0)) ++pairing_bad;
    }
  }
  const std::string pairs = std::to_string(n * n) + " pairs";
  report.add("commutativity " + tag, comm_bad == 0, pairs);
  report.add("q=0 specialisation " + tag, classical_bad == 0, pairs);
  report.add("classical top pairing " + tag, pairing_bad == 0, pairs);
  return report;
}

CheckReport comparison_suite(Session& s, const SuiteOptions& opt) {
  CheckReport report;
  ParabolicQH& flag = s.flag(opt.parabolic);
  SampleSpec sample;
  std::size_t nb = flag.basis().size();
  if (nb * nb * nb > kFullTripleLimit) {
    sample.random_count = opt.random_triples;
    sample.seed = opt.seed;
  }
  for (const Vec& d : degree_box(flag.num_q(), opt.max_degree))
    report.merge(flag.check_comparison_consistency(d, sample, &s.classical()));
  return report;
}

CheckReport lift_oracle_suite(Session& s, const SuiteOptions& opt) {
  CheckReport report;
  const RootSystem& rs = s.roots();
  const ParabolicSubset& J = opt.parabolic;
  const int nq = rs.rank() - static_cast<int>(J.size());
  for (const Vec& d : degree_box(nq, opt.max_degree)) {
    auto lifts = brute_force_lifts(rs, J, d, opt.lift_window);
    CurveClass lift = lift_degree(rs, J, d);
    bool ok = lifts.size() == 1 && lifts[0] == lift.lambda;
    bool restriction = lift.degree(rs) == d;
    bool effective = is_effective(lift.lambda);
    std::string detail = "lift " + vec_string(lift.lambda) + ", " +
                         std::to_string(lifts.size()) + " brute-force solution(s)";
    report.add("lift-oracle " + where(s, J) + " d=" + vec_string(d),
               ok && restriction && effective, detail);
  }
  return report;
}

CheckReport dimension_suite(Session& s, const SuiteOptions& opt) {
  CheckReport report;
  const RootSystem& rs = s.roots();
  const ParabolicSubset& J = opt.parabolic;
  const int nq = rs.rank() - static_cast<int>(J.size());
  for (const Vec& d : degree_box(nq, opt.max_degree)) {
    CurveClass lift = lift_degree(rs, J, d);
    ParabolicSubset Jp = derived_parabolic(rs, J, lift.lambda);
    Vec dPp = push_degree(rs, Jp, lift.lambda);
    long long hB = hom_dimension(rs, ParabolicSubset{}, lift.lambda);
    long long hPp = hom_dimension(rs, Jp, dPp);
    long long hP = hom_dimension(rs, J, d);
    long long fibre = static_cast<long long>(roots_of(rs, Jp).size());
    bool relift = lift_degree(rs, Jp, dPp).lambda == lift.lambda &&
                  derived_parabolic(rs, Jp, lift.lambda) == Jp;
    bool ok = hB == hPp + fibre && hPp == hP && relift;
    report.add("dimension " + where(s, J) + " d=" + vec_string(d), ok,
               "B:" + std::to_string(hB) + " P':" + std::to_string(hPp) +
                   " P:" + std::to_string(hP) + " dim P'/B:" + std::to_string(fibre));
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"associativity", "comparison", "lift-oracle",
                                              "dimension", "all"};
  return names;
}

CheckReport run_suite(Session& s, const std::string& name, const SuiteOptions& opt) {
  if (name == "associativity") return associativity_suite(s, opt);
  if (name == "comparison") return comparison_suite(s, opt);
  if (name == "lift-oracle") return lift_oracle_suite(s, opt);
  if (name == "dimension") return dimension_suite(s, opt);
  if (name == "all") {
    CheckReport r = associativity_suite(s, opt);
    if (static_cast<int>(opt.parabolic.size()) < s.roots().rank()) {
      r.merge(comparison_suite(s, opt));
      r.merge(lift_oracle_suite(s, opt));
      r.merge(dimension_suite(s, opt));
    }
    return r;
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  fail_input("unknown suite '" + name + "' (known: " + known + ")");
}

}  // namespace qflag
