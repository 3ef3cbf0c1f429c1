#include "qflag/table_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "qflag/errors.hpp"

namespace qflag {

namespace {

long long to_json_int(const Integer& c) {
  if (!c.fits_slong_p()) fail_internal("structure constant " + c.get_str() + " exceeds 64 bits");
  return c.get_si();
}

}  // namespace

Json qclass_to_json(const QClass& c, const ElementTable& table) {
  Json terms = Json::array();
  for (const auto& [t, v] : c.terms()) {
    Json term;
    term["w"] = table.element(t.schubert).to_string();
    term["q"] = t.degree;
    term["c"] = to_json_int(v);
    terms.push_back(std::move(term));
  }
  return terms;
}

QClass qclass_from_json(const Json& j, const Session& s, int num_q) {
  if (!j.is_array()) fail_input("class terms must be an array");
  QClass out;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("w") || !term.contains("q") || !term.contains("c") ||
        !term["w"].is_string() || !term["q"].is_array() || !term["c"].is_number_integer())
      fail_input("malformed class term");
    Vec q = term["q"].get<Vec>();
    if (static_cast<int>(q.size()) != num_q) fail_input("class term has wrong q length");
    out.add(QTerm{std::move(q), s.parse_class(term["w"].get<std::string>())},
            Integer(static_cast<long>(term["c"].get<long long>())));
  }
  return out;
}

Json build_product_table(Session& s, const ParabolicSubset& J) {
  const ElementTable& table = s.table();
  Json doc;
  doc["version"] = kCacheFormatVersion;
  doc["type"] = s.roots().type().name();
  doc["parabolic"] = J.nodes();
  Json entries = Json::array();

  auto emit = [&](ElementId u, ElementId v, const QClass& c) {
    Json e;
    e["u"] = table.element(u).to_string();
    e["v"] = table.element(v).to_string();
    e["terms"] = qclass_to_json(c, table);
    entries.push_back(std::move(e));
  };

  if (J.empty()) {
    for (ElementId u = 0; u < table.size(); ++u)
      for (ElementId v = 0; v < table.size(); ++v) emit(u, v, s.quantum().product(u, v));
  } else {
    ParabolicQH& flag = s.flag(J);
    for (ElementId u : flag.basis())
      for (ElementId v : flag.basis()) emit(u, v, flag.quantum_product(u, v));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

std::string cache_file_name(const CartanType& type, const ParabolicSubset& J) {
  std::string name = type.name() + "_";
  if (J.empty()) return name + "B.json";
  name += "P";
  Vec nodes = J.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) name += "-";
    name += std::to_string(nodes[k]);
  }
  return name + ".json";
}

std::filesystem::path cache_path(const CartanType& type, const ParabolicSubset& J,
                                 const std::string& override_path) {
  if (!override_path.empty()) return override_path;
  std::filesystem::path dir = "qflag-cache";
  if (const char* env = std::getenv("QFLAG_CACHE_DIR"); env && *env) dir = env;
  return dir / cache_file_name(type, J);
}

std::optional<Json> load_cache(const std::filesystem::path& path, const Session& s,
                               const ParabolicSubset& J, std::string* warning) {
  auto warn = [&](const std::string& why) -> std::optional<Json> {
    if (warning) *warning = "ignoring cache " + path.string() + ": " + why;
    return std::nullopt;
  };
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  std::ifstream in(path);
  if (!in) return warn("cannot open file");
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return warn("not valid JSON");
  if (!doc.contains("version") || doc["version"] != kCacheFormatVersion)
    return warn("format version mismatch");
  if (!doc.contains("type") || doc["type"] != s.roots().type().name())
    return warn("Cartan type mismatch");
  if (!doc.contains("parabolic") || doc["parabolic"] != Json(J.nodes()))
    return warn("parabolic mismatch");
  if (!doc.contains("entries") || !doc["entries"].is_array()) return warn("missing entries");

  std::size_t basis = 0;
  for (ElementId id = 0; id < s.table().size(); ++id)
    if (min_coset_rep(s.roots(), s.table().element(id), J) == s.table().element(id)) ++basis;
  if (doc["entries"].size() != basis * basis) return warn("wrong number of entries");

  const int num_q = s.roots().rank() - static_cast<int>(J.size());
  try {
    for (const Json& e : doc["entries"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("terms"))
        return warn("malformed entry");
      s.parse_class(e["u"].get<std::string>());
      s.parse_class(e["v"].get<std::string>());
      qclass_from_json(e["terms"], s, num_q);
    }
  } catch (const std::exception& ex) {
    return warn(ex.what());
  }
  return doc;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qflag
