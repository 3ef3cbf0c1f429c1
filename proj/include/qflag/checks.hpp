#ifndef QFLAG_CHECKS_HPP_
#define QFLAG_CHECKS_HPP_

// Self-check suites, shared by `qflag check` and the acceptance binary.

#include <string>
#include <vector>

#include "qflag/compare.hpp"
#include "qflag/session.hpp"

namespace qflag {

struct SuiteOptions {
  ParabolicSubset parabolic;
  int max_degree = 2;
  // Used instead of the full sweep when the group is too large for it.
  std::size_t random_triples = 200;
  std::uint64_t seed = 0x5eed;
  int lift_window = 6;
};

// Brute-force lifts: every lambda with lambda_i = d_i outside J and
// lambda_j in [-window, window] on J whose pairings with all of R_J^+ lie in
// {-1, 0}. Written against the root list only, not the alcove walk.
std::vector<Vec> brute_force_lifts(const RootSystem& rs, const ParabolicSubset& J,
                                   std::span<const int> d, int window);

// Associativity on all triples (or random ones above 600 triples),
// commutativity on all pairs, q = 0 against the classical engine, classical
// top pairing.
CheckReport associativity_suite(Session& s, const SuiteOptions& opt);
// Comparison consistency for every effective degree with entries <= max_degree.
CheckReport comparison_suite(Session& s, const SuiteOptions& opt);
CheckReport lift_oracle_suite(Session& s, const SuiteOptions& opt);
// Dimension identities for Hom spaces across B, P', P.
CheckReport dimension_suite(Session& s, const SuiteOptions& opt);

const std::vector<std::string>& suite_names();
// Throws InputError on an unknown name. "all" runs every suite.
CheckReport run_suite(Session& s, const std::string& name, const SuiteOptions& opt);

}  // namespace qflag

#endif  // QFLAG_CHECKS_HPP_
