// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons are exact; the only tolerances are wall-clock
// limits, pinned below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "qflag/checks.hpp"
#include "qflag/degree.hpp"
#include "qflag/session.hpp"
#include "qflag/table_io.hpp"

using namespace qflag;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kProjectiveSeconds = 30.0;
constexpr double kPropertySeconds = 120.0;
constexpr int kSweepMaxDegree = 3;
constexpr int kLiftWindow = 6;
constexpr std::size_t kRandomTriples = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void report(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3fs", seconds_since(start));
  std::printf("%s %2d  %s  [%s]%s%s\n", out.ok ? "PASS" : "FAIL", number, title, timing,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

ParabolicSubset all_but(const RootSystem& rs, int node) {
  Vec idx;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != node - 1) idx.push_back(i);
  return ParabolicSubset::from_indices(rs, idx);
}

// The criterion-6 sweep: A2 and B2, each maximal parabolic, degrees 0..3.
struct SweepCase {
  Session* session;
  ParabolicSubset J;
  Vec d;
};

void for_each_sweep_case(const std::function<void(const SweepCase&)>& f) {
  for (const char* type : {"A2", "B2"}) {
    Session s(CartanType::parse(type));
    for (int node = 1; node <= s.roots().rank(); ++node) {
      ParabolicSubset J = all_but(s.roots(), node);
      for (int d = 0; d <= kSweepMaxDegree; ++d) f(SweepCase{&s, J, Vec{d}});
    }
  }
}

std::string where(const SweepCase& c) {
  return c.session->roots().type().name() + " J=" + c.J.to_string() + " d=" + vec_text(c.d);
}

std::vector<std::array<ElementId, 3>> all_triples(const std::vector<ElementId>& basis) {
  std::vector<std::array<ElementId, 3>> out;
  for (ElementId a : basis)
    for (ElementId b : basis)
      for (ElementId c : basis) out.push_back({a, b, c});
  return out;
}

// Nonnegativity and grading of a serialised product table.
void check_table(const Json& doc, Session& s, const ParabolicSubset& J, Outcome& out) {
  const RootSystem& rs = s.roots();
  for (const Json& e : doc["entries"]) {
    const int lu = s.table().length(s.parse_class(e["u"].get<std::string>()));
    const int lv = s.table().length(s.parse_class(e["v"].get<std::string>()));
    for (const Json& t : e["terms"]) {
      const std::string tag = e["u"].get<std::string>() + "*" + e["v"].get<std::string>();
      out.expect(t["c"].is_number_integer() && t["c"].get<long long>() > 0,
                 tag + ": coefficient is not a positive integer");
      Vec q = t["q"].get<Vec>();
      out.expect(is_effective(q), tag + ": negative q exponent");
      const long long deg = J.empty() ? 2LL * [&] {
        long long sum = 0;
        for (int x : q) sum += x;
        return sum;
      }()
                                      : anticanonical_degree(rs, J, q);
      const int lw = s.table().length(s.parse_class(t["w"].get<std::string>()));
      out.expect(lw + deg == lu + lv, tag + ": not homogeneous");
    }
  }
}

}  // namespace

int main() {
  report(1, "projective plane: <[s1],[s2s1],[s2s1]>_1 = 1 via comparison, G/B value 1", [] {
    Outcome out;
    const auto start = Clock::now();
    Session s(CartanType::parse("A2"));
    ParabolicQH& p2 = s.flag(ParabolicSubset::parse(s.roots(), "2"));
    std::vector<ElementId> cls{s.parse_class("s1"), s.parse_class("s2s1"), s.parse_class("s2s1")};
    Integer gp = p2.gw_invariant(cls, Vec{1});
    Integer gb = s.quantum().gw_invariant(cls, Vec{1, 0});
    ComparisonData data = p2.comparison_data(Vec{1});
    const double t = seconds_since(start);
    out.expect(gp == 1, "G/P invariant " + gp.get_str());
    out.expect(gb == 1, "G/B invariant " + gb.get_str());
    out.expect(data.dB() == Vec{1, 0} && data.J_prime.empty() &&
                   data.w_prime == s.table().identity_id(),
               "comparison data d_B=" + vec_text(data.dB()));
    out.expect(t < kExampleSeconds, "took " + std::to_string(t) + "s");
    if (out.ok) out.detail = "d_B=[1,0], P'=B, w_P'=e";
    return out;
  });

  report(2, "projective plane lift table d=0..6: d_2 = floor(d/2), P' = {2} iff d even", [] {
    Outcome out;
    auto rs = build_root_system(CartanType::parse("A2"));
    ParabolicSubset J = ParabolicSubset::parse(*rs, "2");
    std::string row;
    for (int d = 0; d <= 6; ++d) {
      CurveClass lift = lift_degree(*rs, J, Vec{d});
      ParabolicSubset Jp = derived_parabolic(*rs, J, lift.lambda);
      out.expect(lift.lambda == (Vec{d, d / 2}), "d=" + std::to_string(d) + " lift " +
                                                     vec_text(lift.lambda));
      out.expect(Jp.nodes() == (d % 2 == 0 ? Vec{2} : Vec{}),
                 "d=" + std::to_string(d) + " P'=" + Jp.to_string());
      row += (d ? " " : "") + std::to_string(lift.lambda[1]);
    }
    if (out.ok) out.detail = "d_2: " + row;
    return out;
  });

  report(3, "projective plane: generic Levi semistability exactly for even d=0..6", [] {
    Outcome out;
    auto rs = build_root_system(CartanType::parse("A2"));
    ParabolicSubset J = ParabolicSubset::parse(*rs, "2");
    for (int d = 0; d <= 6; ++d)
      out.expect(is_generic_levi_semistable(*rs, J, Vec{d}) == (d % 2 == 0),
                 "d=" + std::to_string(d));
    return out;
  });

  report(4, "QH(P^n): h^(n+1) = q for n = 1..4 through G/B and comparison", [] {
    Outcome out;
    const auto start = Clock::now();
    for (int n = 1; n <= 4; ++n) {
      Session s(CartanType{Series::A, n});
      ParabolicQH& pn = s.flag(all_but(s.roots(), 1));
      const ElementId h = s.parse_class("s1");
      QClass power = QClass::schubert(h, 1);
      for (int k = 2; k <= n + 1; ++k) {
        power = pn.multiply(power, h);
        if (k <= n) {
          // h^k is the class of a codimension k linear subspace.
          out.expect(power.size() == 1 && power.terms().begin()->first.degree == Vec{0} &&
                         s.table().length(power.terms().begin()->first.schubert) == k &&
                         power.terms().begin()->second == 1,
                     "P^" + std::to_string(n) + ": h^" + std::to_string(k));
        }
      }
      QClass q;
      q.add(QTerm{{1}, s.table().identity_id()}, 1);
      out.expect(power == q, "P^" + std::to_string(n) + ": h^(n+1) = " +
                                 format_qclass(power, s.table(), pn.q_nodes()));
    }
    const double t = seconds_since(start);
    out.expect(t < kProjectiveSeconds, "took " + std::to_string(t) + "s");
    return out;
  });

  report(5, "associativity and commutativity: A2, B2 all triples, A3 200 random triples", [] {
    Outcome out;
    const auto start = Clock::now();
    std::string counts;
    for (const char* type : {"A2", "B2", "A3"}) {
      Session s(CartanType::parse(type));
      SuiteOptions opt;
      opt.random_triples = kRandomTriples;
      CheckReport r = associativity_suite(s, opt);
      for (const CheckEntry& e : r.entries) {
        out.expect(e.passed, e.name + " " + e.detail);
        if (e.name.rfind("associativity", 0) == 0)
          counts += (counts.empty() ? "" : ", ") + e.name.substr(14) + " " + e.detail;
      }
    }
    const double t = seconds_since(start);
    out.expect(t < kPropertySeconds, "took " + std::to_string(t) + "s");
    if (out.ok) out.detail = counts;
    return out;
  });

  report(6, "G/P invariants symmetric under all 6 permutations (A2, B2 maximal, d<=3)", [] {
    Outcome out;
    std::size_t triples = 0, nonzero = 0;
    for_each_sweep_case([&](const SweepCase& c) {
      ParabolicQH& flag = c.session->flag(c.J);
      for (auto t : all_triples(flag.basis())) {
        const Integer value = flag.gw_invariant(t, c.d);
        ++triples;
        if (value != 0) ++nonzero;
        std::sort(t.begin(), t.end());
        do {
          out.expect(flag.gw_invariant(t, c.d) == value, where(c));
        } while (std::next_permutation(t.begin(), t.end()));
      }
    });
    if (out.ok)
      out.detail = std::to_string(triples) + " triples, " + std::to_string(nonzero) + " non-zero";
    return out;
  });

  report(7, "degree 0: comparison route equals the pulled back classical intersection", [] {
    Outcome out;
    std::size_t triples = 0;
    for_each_sweep_case([&](const SweepCase& c) {
      if (c.d != Vec{0}) return;
      ParabolicQH& flag = c.session->flag(c.J);
      for (auto t : all_triples(flag.basis())) {
        ++triples;
        out.expect(flag.gw_invariant(t, c.d) ==
                       flag.classical_intersection(t, c.session->classical()),
                   where(c));
      }
    });
    if (out.ok) out.detail = std::to_string(triples) + " triples";
    return out;
  });

  report(8, "brute-force lift search in [-6,6] finds exactly the computed lift", [] {
    Outcome out;
    std::size_t cases = 0;
    for_each_sweep_case([&](const SweepCase& c) {
      const RootSystem& rs = c.session->roots();
      auto found = brute_force_lifts(rs, c.J, c.d, kLiftWindow);
      CurveClass lift = lift_degree(rs, c.J, c.d);
      ++cases;
      out.expect(found.size() == 1, where(c) + ": " + std::to_string(found.size()) + " solutions");
      if (found.size() == 1) out.expect(found[0] == lift.lambda, where(c));
    });
    if (out.ok) out.detail = std::to_string(cases) + " cases";
    return out;
  });

  report(9, "Hom dimensions: B = P' + dim P'/B, P' = P; P^2 closed form for d<=4", [] {
    Outcome out;
    std::size_t cases = 0;
    for_each_sweep_case([&](const SweepCase& c) {
      const RootSystem& rs = c.session->roots();
      Vec lambda = lift_degree(rs, c.J, c.d).lambda;
      ParabolicSubset Jp = derived_parabolic(rs, c.J, lambda);
      Vec dPp = push_degree(rs, Jp, lambda);
      const long long hB = hom_dimension(rs, ParabolicSubset{}, lambda);
      const long long hPp = hom_dimension(rs, Jp, dPp);
      const long long hP = hom_dimension(rs, c.J, c.d);
      const long long fibre = static_cast<long long>(roots_of(rs, Jp).size());
      ++cases;
      out.expect(hB == hPp + fibre, where(c) + ": B vs P'");
      out.expect(hPp == hP, where(c) + ": P' vs P");
    });
    auto a2 = build_root_system(CartanType::parse("A2"));
    ParabolicSubset J = ParabolicSubset::parse(*a2, "2");
    const int n = 2;
    for (int d = 0; d <= 4; ++d) {
      const long long h = hom_dimension(*a2, J, Vec{d});
      out.expect(h == 2 + 3 * d && h == (n + 1) * (d + 1) - 1, "P^2 d=" + std::to_string(d));
    }
    if (out.ok) out.detail = std::to_string(cases) + " cases";
    return out;
  });

  report(10, "A2 Borel and P^2 tables: nonnegative, homogeneous, cache round trip exact", [] {
    Outcome out;
    const auto dir = std::filesystem::temp_directory_path() / "qflag-acceptance-cache";
    std::filesystem::remove_all(dir);
    std::string sizes;
    for (const char* parabolic : {"", "2"}) {
      Session s(CartanType::parse("A2"));
      ParabolicSubset J = ParabolicSubset::parse(s.roots(), parabolic);
      Json doc = build_product_table(s, J);
      check_table(doc, s, J, out);
      const std::string text = doc.dump(2) + "\n";
      const auto path = dir / cache_file_name(s.roots().type(), J);
      write_atomic(path, text);

      Session fresh(CartanType::parse("A2"));
      std::string warning;
      auto loaded = load_cache(path, fresh, J, &warning);
      out.expect(loaded.has_value(), "reload failed: " + warning);
      if (loaded) out.expect(loaded->dump(2) + "\n" == text, "reloaded table differs");
      const std::string recomputed = build_product_table(fresh, J).dump(2) + "\n";
      out.expect(recomputed == text, "recomputed table differs");
      sizes += (sizes.empty() ? "" : ", ") + std::to_string(doc["entries"].size()) + " entries";
    }
    std::filesystem::remove_all(dir);
    if (out.ok) out.detail = sizes;
    return out;
  });

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
