#include "qflag/degree.hpp"

#include <algorithm>
#include <limits>

#include "qflag/errors.hpp"

namespace qflag {

Vec CurveClass::degree(const RootSystem& rs) const {
  Vec d;
  for (int i : parabolic.complement(rs.rank())) d.push_back(lambda[i]);
  return d;
}

std::vector<ParabolicSubset> components(const RootSystem& rs, const ParabolicSubset& J) {
  std::vector<ParabolicSubset> out;
  std::vector<bool> done(rs.rank(), false);
  for (int start : J.indices()) {
    if (done[start]) continue;
    std::vector<int> comp{start};
    done[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j : J.indices())
        if (!done[j] && rs.cartan(comp[k], j) != 0) {
          done[j] = true;
          comp.push_back(j);
        }
    out.push_back(ParabolicSubset::from_indices(rs, comp));
  }
  return out;
}

std::size_t highest_root(const RootSystem& rs, const ParabolicSubset& component) {
  auto roots = roots_of(rs, component);
  if (roots.empty()) fail_input("highest_root: empty component");
  // Roots are height-sorted, so the last one supported on the component is
  // the unique root of maximal height there.
  return roots.back();
}

AlcoveSpec AlcoveSpec::build(const RootSystem& rs, const ParabolicSubset& J) {
  AlcoveSpec spec;
  spec.parabolic = J;
  spec.linear_walls = J.indices();
  for (const auto& comp : components(rs, J)) spec.affine_walls.push_back({highest_root(rs, comp)});
  return spec;
}

bool AlcoveSpec::contains(const RootSystem& rs, std::span<const int> lambda) const {
  Vec p = rs.simple_pairings(lambda);
  for (int j : linear_walls)
    if (p[j] > 0) return false;
  for (const auto& wall : affine_walls)
    if (rs.pairing(rs.positive_roots()[wall.root], lambda) < -1) return false;
  return true;
}

bool in_lift_window(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> lambda) {
  for (std::size_t a : roots_of(rs, J)) {
    int p = rs.pairing(rs.positive_roots()[a], lambda);
    if (p != 0 && p != -1) return false;
  }
  return true;
}

void check_degree_length(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d) {
  std::size_t want = static_cast<std::size_t>(rs.rank()) - J.size();
  if (d.size() != want)
    fail_input("degree has " + std::to_string(d.size()) + " entries, expected " +
               std::to_string(want) + " (one per node outside the parabolic)");
}

Vec naive_lift(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d) {
  check_degree_length(rs, J, d);
  Vec lambda(rs.rank(), 0);
  auto outside = J.complement(rs.rank());
  for (std::size_t k = 0; k < outside.size(); ++k) lambda[outside[k]] = d[k];
  return lambda;
}

std::uint64_t lift_step_ceiling(const RootSystem& rs, const ParabolicSubset& J,
                                std::span<const int> d) {
  using u128 = unsigned __int128;
  u128 total = 0;
  for (int x : d) total += static_cast<u128>(x < 0 ? -static_cast<long long>(x) : x);
  // |<alpha, h_i>| <= 3 ht(alpha), so this over-counts the affine
  // hyperplanes separating the starting point from the alcove.
  u128 bound = static_cast<u128>(weyl_order(rs, J)) * (1 + total * 3u * rs.max_height());
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  return bound > cap ? cap : static_cast<std::uint64_t>(bound);
}

CurveClass lift_degree(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d,
                         std::uint64_t* steps_taken) {
  CurveClass out{naive_lift(rs, J, d), J};
  if (steps_taken) *steps_taken = 0;
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) return out;

  const AlcoveSpec alcove = AlcoveSpec::build(rs, J);
  const std::uint64_t ceiling = lift_step_ceiling(rs, J, d);
  Vec& lambda = out.lambda;
  std::uint64_t steps = 0;
  for (;; ++steps) {
    if (steps > ceiling)
      fail_internal("alcove walk exceeded " + std::to_string(ceiling) + " steps");
    Vec p = rs.simple_pairings(lambda);
    auto linear = std::find_if(alcove.linear_walls.begin(), alcove.linear_walls.end(),
                               [&](int j) { return p[j] > 0; });
    if (linear != alcove.linear_walls.end()) {
      lambda[*linear] -= p[*linear];
      continue;
    }
    bool moved = false;
    for (const auto& wall : alcove.affine_walls) {
      int t = rs.pairing(rs.positive_roots()[wall.root], lambda);
      if (t < -1) {
        const Vec& co = rs.coroots()[wall.root];
        for (int i = 0; i < rs.rank(); ++i) lambda[i] -= (t + 1) * co[i];
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  if (steps_taken) *steps_taken = steps;
  if (!in_lift_window(rs, J, lambda))
    fail_internal("alcove walk ended outside the lift window for J=" + J.to_string());
  return out;
}

ParabolicSubset derived_parabolic(const RootSystem& rs, const ParabolicSubset& J,
                                  std::span<const int> lambda) {
  if (!AlcoveSpec::build(rs, J).contains(rs, lambda))
    fail_input("derived_parabolic: coweight is not a lifted class for J=" + J.to_string());
  Vec p = rs.simple_pairings(lambda);
  std::vector<int> kept;
  for (int j : J.indices())
    if (p[j] == 0) kept.push_back(j);
  return ParabolicSubset::from_indices(rs, kept);
}

Vec push_degree(const RootSystem& rs, const ParabolicSubset& J_prime, std::span<const int> lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank()) fail_input("coweight has wrong length");
  Vec d;
  for (int i : J_prime.complement(rs.rank())) d.push_back(lambda[i]);
  return d;
}

bool is_effective(std::span<const int> d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

long long flag_dimension(const RootSystem& rs, const ParabolicSubset& J) {
  return static_cast<long long>(rs.num_positive_roots() - roots_of(rs, J).size());
}

namespace {

long long outside_pairing_sum(const RootSystem& rs, const ParabolicSubset& J,
                              std::span<const int> lambda) {
  auto inside = roots_of(rs, J);
  long long s = 0;
  for (std::size_t a = 0; a < rs.num_positive_roots(); ++a)
    if (!std::binary_search(inside.begin(), inside.end(), a))
      s += rs.pairing(rs.positive_roots()[a], lambda);
  return s;
}

void require_effective(std::span<const int> d, const char* who) {
  if (!is_effective(d)) fail_input(std::string(who) + ": degree is not effective");
}

}  // namespace

long long anticanonical_degree(const RootSystem& rs, const ParabolicSubset& J,
                               std::span<const int> d) {
  return outside_pairing_sum(rs, J, naive_lift(rs, J, d));
}

long long hom_dimension(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d) {
  require_effective(d, "hom_dimension");
  CurveClass lift = lift_degree(rs, J, d);
  return flag_dimension(rs, J) + outside_pairing_sum(rs, J, lift.lambda);
}

bool is_generic_levi_semistable(const RootSystem& rs, const ParabolicSubset& J,
                                std::span<const int> d) {
  require_effective(d, "is_generic_levi_semistable");
  CurveClass lift = lift_degree(rs, J, d);
  return derived_parabolic(rs, J, lift.lambda) == J;
}

}  // namespace qflag
