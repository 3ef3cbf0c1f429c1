#include <algorithm>
#include <functional>
#include <map>

#include "doctest.h"
#include "qflag/compare.hpp"
#include "qflag/errors.hpp"
#include "qflag/session.hpp"

using namespace qflag;

namespace {

ParabolicSubset all_but(const RootSystem& rs, int node) {
  Vec idx;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != node - 1) idx.push_back(i);
  return ParabolicSubset::from_indices(rs, idx);
}

// Basis classes of G/P grouped by length.
std::vector<ElementId> of_length(ParabolicQH& flag, int k) {
  std::vector<ElementId> out;
  for (ElementId u : flag.basis())
    if (flag.elements().length(u) == k) out.push_back(u);
  return out;
}

using Partition = Vec;

// Grassmannian permutation of a partition in a k x (n-k) box, as an id.
ElementId grassmannian_id(const ElementTable& table, int k, int n, const Partition& lambda) {
  Vec p;
  for (int i = 0; i < k; ++i) p.push_back(lambda[k - 1 - i] + i);
  for (int v = 0; v < n; ++v)
    if (std::find(p.begin(), p.begin() + k, v) == p.begin() + k) p.push_back(v);
  Vec word;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(i);
        again = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return table.id_of(from_word(table.roots(), word));
}

std::vector<Partition> partitions_in_box(int k, int width) {
  std::vector<Partition> out;
  Partition lambda(k, 0);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == k) {
      out.push_back(lambda);
      return;
    }
    for (int x = 0; x <= cap; ++x) {
      lambda[i] = x;
      rec(i + 1, x);
    }
  };
  rec(0, width);
  return out;
}

// Quantum Pieri rule for the divisor: add a box in every possible way, plus
// q sigma_{(l_2 - 1, ..., l_k - 1, 0)} when the first row and column are full.
QClass pieri_divisor(const ElementTable& table, int k, int n, const Partition& lambda) {
  QClass out;
  for (int i = 0; i < k; ++i) {
    Partition mu = lambda;
    ++mu[i];
    if (mu[i] > n - k) continue;
    if (i > 0 && mu[i] > mu[i - 1]) continue;
    out.add(QTerm{{0}, grassmannian_id(table, k, n, mu)}, 1);
  }
  if (lambda[0] == n - k && lambda[k - 1] >= 1) {
    Partition mu;
    for (int i = 1; i < k; ++i) mu.push_back(lambda[i] - 1);
    mu.push_back(0);
    out.add(QTerm{{1}, grassmannian_id(table, k, n, mu)}, 1);
  }
  return out;
}

}  // namespace

TEST_CASE("the line through a point and a line in the projective plane") {
  Session s(CartanType::parse("A2"));
  ParabolicQH& p2 = s.flag(ParabolicSubset::parse(s.roots(), "2"));
  std::vector<ElementId> cls{s.parse_class("s1"), s.parse_class("s2s1"), s.parse_class("s2s1")};
  CHECK(p2.gw_invariant(cls, Vec{1}) == 1);
  std::sort(cls.begin(), cls.end());
  do {
    CHECK(p2.gw_invariant(cls, Vec{1}) == 1);
  } while (std::next_permutation(cls.begin(), cls.end()));
  CHECK(p2.gw_invariant(cls, Vec{0}) == 0);
  CHECK(p2.gw_invariant(cls, Vec{-1}) == 0);
  CHECK_THROWS_AS(p2.gw_invariant(std::vector<ElementId>{0, 1}, Vec{1}), InputError);
  CHECK_THROWS_AS(p2.gw_invariant(cls, Vec{1, 0}), InputError);

  ComparisonData data = p2.comparison_data(Vec{1});
  CHECK(data.dB() == Vec{1, 0});
  CHECK(data.J_prime.empty());
  CHECK(data.w_prime == s.table().identity_id());
  CHECK_THROWS_AS(p2.comparison_data(Vec{-1}), InputError);
}

TEST_CASE("quantum cohomology of projective spaces is Z[h,q]/(h^{n+1} - q)") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    Session s(CartanType{Series::A, n});
    ParabolicQH& pn = s.flag(all_but(s.roots(), 1));
    REQUIRE(pn.basis().size() == static_cast<std::size_t>(n + 1));
    std::vector<ElementId> h;  // h^k is the unique class of length k
    for (int k = 0; k <= n; ++k) {
      auto cls = of_length(pn, k);
      REQUIRE(cls.size() == 1);
      h.push_back(cls[0]);
    }
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        QClass expect;
        expect.add(QTerm{{(a + b) / (n + 1)}, h[(a + b) % (n + 1)]}, 1);
        CHECK(pn.quantum_product(h[a], h[b]) == expect);
      }
  }
}

TEST_CASE("quantum Pieri rule on Grassmannians") {
  struct Case {
    int k, n;
  };
  for (Case c : {Case{2, 4}, Case{2, 5}, Case{3, 5}, Case{3, 6}}) {
    CAPTURE(c.k);
    CAPTURE(c.n);
    Session s(CartanType{Series::A, c.n - 1});
    ParabolicQH& gr = s.flag(all_but(s.roots(), c.k));
    auto parts = partitions_in_box(c.k, c.n - c.k);
    REQUIRE(parts.size() == gr.basis().size());
    Partition box(c.k, 0);
    box[0] = 1;
    const ElementId divisor = grassmannian_id(s.table(), c.k, c.n, box);
    CHECK(divisor == s.parse_class("s" + std::to_string(c.k)));
    for (const Partition& lambda : parts) {
      ElementId u = grassmannian_id(s.table(), c.k, c.n, lambda);
      CHECK(gr.class_lift(u) == u);
      CHECK(gr.quantum_product(divisor, u) == pieri_divisor(s.table(), c.k, c.n, lambda));
    }
  }
}

TEST_CASE("comparison consistency sweeps") {
  struct Case {
    const char* type;
    const char* parabolic;
    int max_degree;
  };
  const Case cases[] = {{"A2", "1", 3}, {"A2", "2", 3},  {"B2", "1", 3},   {"B2", "2", 3},
                        {"G2", "1", 2}, {"G2", "2", 2},  {"A3", "1,3", 2}, {"A3", "2", 2},
                        {"B3", "2,3", 2}, {"C3", "1", 1}, {"A3", "", 1}};
  for (const Case& c : cases) {
    Session s(CartanType::parse(c.type));
    ParabolicQH& flag = s.flag(ParabolicSubset::parse(s.roots(), c.parabolic));
    SampleSpec sample;
    if (flag.basis().size() > 8) sample.random_count = 60;
    for (const Vec& d : degree_box(flag.num_q(), c.max_degree)) {
      CheckReport report = flag.check_comparison_consistency(d, sample, &s.classical());
      for (const CheckEntry& e : report.entries) {
        CAPTURE(c.type);
        CAPTURE(e.name);
        CAPTURE(e.detail);
        CHECK(e.passed);
      }
    }
  }
}

TEST_CASE("G/P products are associative, commutative and graded") {
  for (auto [type, parabolic] : {std::pair{"A3", "2"}, std::pair{"B3", "1"}, std::pair{"C3", "3"},
                                 std::pair{"G2", "2"}, std::pair{"A3", "1"}}) {
    Session s(CartanType::parse(type));
    ParabolicQH& flag = s.flag(ParabolicSubset::parse(s.roots(), parabolic));
    const auto& basis = flag.basis();
    const int nq = flag.num_q();
    std::map<std::pair<ElementId, ElementId>, QClass> table;
    for (ElementId u : basis)
      for (ElementId v : basis) table[{u, v}] = flag.quantum_product(u, v);

    Vec unit(nq, 0);
    for (ElementId u : basis)
      for (ElementId v : basis) {
        CAPTURE(type);
        const QClass& x = table[{u, v}];
        CHECK(x == table[{v, u}]);
        CHECK_FALSE(has_negative_coefficient(x));
        for (const auto& [t, c] : x.terms()) {
          CHECK(flag.class_lift(t.schubert) == t.schubert);
          CHECK(flag.elements().length(t.schubert) + flag.anticanonical(t.degree) ==
                flag.elements().length(u) + flag.elements().length(v));
        }
        // q = 0 is the classical product of the pulled back classes.
        QClass classical;
        for (const auto& [t, c] : s.classical().product(u, v).terms()) {
          CHECK(flag.class_lift(t.schubert) == t.schubert);
          classical.add(QTerm{unit, t.schubert}, c);
        }
        CHECK(x.classical_part() == classical);
      }
    for (ElementId a : basis)
      for (ElementId b : basis)
        for (ElementId c : basis) {
          QClass lhs;
          for (const auto& [t, k] : table[{a, b}].terms())
            lhs.add_scaled(table[{t.schubert, c}], k, t.degree);
          QClass rhs;
          for (const auto& [t, k] : table[{b, c}].terms())
            rhs.add_scaled(table[{a, t.schubert}], k, t.degree);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("the Borel through the comparison route is the G/B engine") {
  Session s(CartanType::parse("B2"));
  ParabolicQH& flag = s.flag(ParabolicSubset{});
  CHECK(flag.basis().size() == s.table().size());
  for (ElementId u = 0; u < s.table().size(); ++u)
    for (ElementId v = 0; v < s.table().size(); ++v)
      CHECK(flag.quantum_product(u, v) == s.quantum().product(u, v));
}

TEST_CASE("pullback, pushforward and duality") {
  Session s(CartanType::parse("A2"));
  ParabolicQH& p2 = s.flag(ParabolicSubset::parse(s.roots(), "2"));
  CHECK(p2.class_lift(s.parse_class("s1s2")) == s.parse_class("s1"));
  CHECK(p2.class_lift(s.parse_class("s2")) == s.parse_class("e"));
  CHECK(p2.class_pushforward(s.table().longest_id()) == s.parse_class("s2s1"));
  CHECK(p2.class_pushforward(s.parse_class("s2")) == s.parse_class("e"));
  CHECK_FALSE(p2.class_pushforward(s.parse_class("s1")).has_value());
  CHECK(p2.dual(s.parse_class("e")) == s.parse_class("s2s1"));
  CHECK(p2.dual(s.parse_class("s1")) == s.parse_class("s1"));
  CHECK(p2.dimension() == 2);
  CHECK(p2.q_nodes() == Vec{1});
  CHECK_THROWS_AS(s.flag(ParabolicSubset::parse(s.roots(), "1,2")), InputError);
}

TEST_CASE("degree box") {
  CHECK(degree_box(2, 1) == std::vector<Vec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(degree_box(0, 3) == std::vector<Vec>{{}});
}
