// qflag: quantum cohomology of flag varieties G/P in the Schubert basis.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qflag/checks.hpp"
#include "qflag/errors.hpp"
#include "qflag/session.hpp"
#include "qflag/table_io.hpp"

using namespace qflag;

namespace {

constexpr const char* kLabelling = R"(Nodes use the Bourbaki labelling:
  A_n  1 - 2 - ... - n
  B_n  1 - ... - (n-1) => n        (n short)
  C_n  1 - ... - (n-1) <= n        (n long)
  D_n  1 - ... - (n-2) - (n-1), (n-2) - n
  E_n  1 - 3 - 4 - ... - n, 2 - 4
  F_4  1 - 2 => 3 - 4
  G_2  1 <= 2                      (1 short)
Classes are words such as "e" or "s1s2s1"; --parabolic "" means the Borel (G/B).
Exit codes: 0 ok, 1 internal error or failed check, 2 invalid input,
3 size bound exceeded.)";

struct Common {
  std::string type;
  std::string parabolic;
  bool json = false;
  std::uint64_t max_order = kDefaultEnumerationBound;
  std::string cache;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--type,-t", c.type, "Cartan type, e.g. A2, B3, G2")->required();
  cmd->add_option("--parabolic,-p", c.parabolic,
                  "Comma list of 1-based nodes in the parabolic; empty for the Borel");
  cmd->add_flag("--json", c.json, "Machine-readable output");
  cmd->add_option("--max-order", c.max_order, "Refuse Weyl groups larger than this")
      ->capture_default_str();
}

Vec parse_int_list(const std::string& text, const char* what) {
  Vec out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail_input(std::string("bad ") + what + " entry '" + item + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) fail_input(std::string("bad ") + what + " entry '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::vector<std::string> split_classes(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

// Parses a class and echoes the normalised word when it differs from the input.
ElementId read_class(Session& s, const ParabolicSubset& J, const std::string& text) {
  ElementId id = s.parse_class(text);
  if (!J.empty()) id = s.flag(J).class_lift(id);
  const std::string word = s.table().element(id).to_string();
  if (word != text) std::cerr << "note: class " << text << " read as " << word << "\n";
  return id;
}

Vec q_nodes(Session& s, const ParabolicSubset& J) {
  if (!J.empty()) return s.flag(J).q_nodes();
  Vec nodes;
  for (int i = 1; i <= s.roots().rank(); ++i) nodes.push_back(i);
  return nodes;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_lift(const Common& c, const std::string& degree_text) {
  Session s(CartanType::parse(c.type), c.max_order);
  ParabolicSubset J = ParabolicSubset::parse(s.roots(), c.parabolic);
  Vec d = parse_int_list(degree_text, "degree");
  if (J.empty()) fail_input("lift needs a non-empty parabolic");
  ComparisonData data = s.flag(J).comparison_data(d);
  const std::string w_prime = s.table().element(data.w_prime).to_string();
  Vec pairings = s.roots().simple_pairings(data.d_B.lambda);
  if (c.json) {
    Json j;
    j["type"] = s.roots().type().name();
    j["parabolic"] = J.nodes();
    j["dP"] = d;
    j["dB"] = data.d_B.lambda;
    j["pairings"] = pairings;
    j["Pprime"] = data.J_prime.nodes();
    j["wPrime"] = w_prime;
    j["dPprime"] = data.d_Pprime;
    print_json(j);
  } else {
    std::cout << "d_P      " << vec_text(d) << "\n"
              << "d_B      " << vec_text(data.d_B.lambda) << "\n"
              << "pairings " << vec_text(pairings) << "\n"
              << "P'       " << vec_text(data.J_prime.nodes()) << "\n"
              << "w_P'     " << w_prime << "\n"
              << "d_P'     " << vec_text(data.d_Pprime) << "\n";
  }
  return 0;
}

int cmd_gw(const Common& c, const std::string& classes_text, const std::string& degree_text) {
  Session s(CartanType::parse(c.type), c.max_order);
  ParabolicSubset J = ParabolicSubset::parse(s.roots(), c.parabolic);
  std::vector<ElementId> ids;
  for (const std::string& w : split_classes(classes_text)) ids.push_back(read_class(s, J, w));
  if (ids.size() < 3) fail_input("gw needs at least 3 classes");
  Vec d = parse_int_list(degree_text, "degree");
  check_degree_length(s.roots(), J, d);

  const bool effective = is_effective(d);
  Integer value = 0;
  Vec dB = d;
  std::string route = "direct";
  if (J.empty()) {
    value = s.quantum().gw_invariant(ids, d);
  } else {
    ParabolicQH& flag = s.flag(J);
    route = "comparison";
    value = flag.gw_invariant(ids, d);
    if (effective) dB = flag.comparison_data(d).d_B.lambda;
  }
  if (c.json) {
    Json j;
    j["invariant"] = value.fits_slong_p() ? Json(value.get_si()) : Json(value.get_str());
    j["dB"] = effective ? Json(dB) : Json(nullptr);
    j["route"] = route;
    if (!effective) j["note"] = "non-effective";
    print_json(j);
  } else {
    std::cout << value.get_str() << "\n";
    if (!effective) std::cerr << "note: degree " << vec_text(d) << " is non-effective\n";
  }
  return 0;
}

int cmd_mul(const Common& c, const std::string& u_text, const std::string& v_text) {
  Session s(CartanType::parse(c.type), c.max_order);
  ParabolicSubset J = ParabolicSubset::parse(s.roots(), c.parabolic);
  ElementId u = read_class(s, J, u_text);
  ElementId v = read_class(s, J, v_text);
  QClass product = J.empty() ? s.quantum().product(u, v) : s.flag(J).quantum_product(u, v);
  const std::string text = format_qclass(product, s.table(), q_nodes(s, J));
  if (c.json) {
    Json j;
    j["u"] = s.table().element(u).to_string();
    j["v"] = s.table().element(v).to_string();
    j["terms"] = qclass_to_json(product, s.table());
    j["text"] = text;
    print_json(j);
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

void print_table_text(const Json& doc, Session& s, const ParabolicSubset& J) {
  const int num_q = s.roots().rank() - static_cast<int>(J.size());
  const Vec nodes = q_nodes(s, J);
  for (const Json& e : doc["entries"]) {
    QClass c = qclass_from_json(e["terms"], s, num_q);
    std::cout << e["u"].get<std::string>() << " * " << e["v"].get<std::string>() << " = "
              << format_qclass(c, s.table(), nodes) << "\n";
  }
}

int cmd_table(const Common& c, bool verify, bool no_cache) {
  Session s(CartanType::parse(c.type), c.max_order);
  ParabolicSubset J = ParabolicSubset::parse(s.roots(), c.parabolic);
  const auto path = cache_path(s.roots().type(), J, c.cache);

  std::optional<Json> cached;
  if (!no_cache) {
    std::string warning;
    cached = load_cache(path, s, J, &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  }

  Json doc;
  if (cached && !verify) {
    std::cerr << "note: cache hit " << path.string() << "\n";
    doc = std::move(*cached);
  } else {
    doc = build_product_table(s, J);
    if (cached) {
      if (cached->dump() != doc.dump())
        fail_internal("cached table " + path.string() + " disagrees with recomputation");
      std::cerr << "note: cache hit " << path.string() << ", verified\n";
    } else if (!no_cache) {
      write_atomic(path, doc.dump(2) + "\n");
      std::cerr << "note: wrote " << path.string() << "\n";
    }
  }

  if (c.json)
    print_json(doc);
  else
    print_table_text(doc, s, J);
  return 0;
}

int cmd_check(const Common& c, const std::string& suite, int max_degree) {
  Session s(CartanType::parse(c.type), c.max_order);
  SuiteOptions opt;
  opt.parabolic = ParabolicSubset::parse(s.roots(), c.parabolic);
  opt.max_degree = max_degree;
  if (max_degree < 0) fail_input("--max-degree must be non-negative");
  if (suite != "associativity" && suite != "all" && opt.parabolic.empty())
    fail_input("suite '" + suite + "' needs a non-empty --parabolic");
  CheckReport report = run_suite(s, suite, opt);
  if (c.json) {
    Json j;
    j["suite"] = suite;
    j["passed"] = report.passed();
    Json entries = Json::array();
    for (const CheckEntry& e : report.entries)
      entries.push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
    j["checks"] = std::move(entries);
    print_json(j);
  } else {
    for (const CheckEntry& e : report.entries) {
      std::cout << (e.passed ? "PASS " : "FAIL ") << e.name;
      if (!e.detail.empty()) std::cout << "  (" << e.detail << ")";
      std::cout << "\n";
    }
    std::cout << report.entries.size() - report.failures() << "/" << report.entries.size()
              << " checks passed\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small quantum cohomology of flag varieties G/P in the Schubert basis"};
  app.footer(kLabelling);
  app.require_subcommand(1);

  Common common;
  std::string degree = "", classes, u, v, suite = "all";
  int max_degree = 2;
  bool verify = false, no_cache = false;

  auto* lift = app.add_subcommand("lift", "Lift a G/P degree to G/B and report P' and w_P'");
  add_common(lift, common);
  lift->add_option("--degree,-d", degree, "Comma list, one entry per node outside the parabolic")
      ->required();

  auto* gw = app.add_subcommand("gw", "Gromov-Witten invariant of three or more classes");
  add_common(gw, common);
  gw->add_option("--classes,-c", classes, "Comma list of classes, e.g. s1,s2s1,s2s1")->required();
  gw->add_option("--degree,-d", degree, "Comma list, one entry per node outside the parabolic")
      ->required();

  auto* mul = app.add_subcommand("mul", "Quantum product of two Schubert classes");
  add_common(mul, common);
  mul->add_option("--u", u, "First class")->required();
  mul->add_option("--v", v, "Second class")->required();

  auto* table = app.add_subcommand("table", "All products of basis classes, cached on disk");
  add_common(table, common);
  table->add_option("--cache", common.cache,
                    "Cache file (default $QFLAG_CACHE_DIR or ./qflag-cache, one file per "
                    "type and parabolic)");
  table->add_flag("--verify", verify, "Recompute and compare against an existing cache");
  table->add_flag("--no-cache", no_cache, "Neither read nor write the cache");

  auto* check = app.add_subcommand("check", "Run a self-check suite");
  add_common(check, common);
  check->add_option("--suite,-s", suite, "associativity, comparison, lift-oracle, dimension, all")
      ->capture_default_str();
  check->add_option("--max-degree", max_degree, "Largest degree entry swept")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*lift) return cmd_lift(common, degree);
    if (*gw) return cmd_gw(common, classes, degree);
    if (*mul) return cmd_mul(common, u, v);
    if (*table) return cmd_table(common, verify, no_cache);
    if (*check) return cmd_check(common, suite, max_degree);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
