#ifndef QFLAG_TABLE_IO_HPP_
#define QFLAG_TABLE_IO_HPP_

// JSON forms of classes and product tables, and the on-disk table cache:
//
//   {"version":1, "type":"A2", "parabolic":[2],
//    "entries":[{"u":"s1","v":"s1","terms":[{"w":"s2s1","q":[0],"c":1}, ...]}, ...]}
//
// Keys keep insertion order, so dump(parse(x)) == x for anything we write.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "qflag/session.hpp"

namespace qflag {

using Json = nlohmann::ordered_json;

inline constexpr int kCacheFormatVersion = 1;

Json qclass_to_json(const QClass& c, const ElementTable& table);
// Throws InputError on malformed input.
QClass qclass_from_json(const Json& j, const Session& s, int num_q);

// sigma_u * sigma_v for every ordered pair of basis classes. An empty
// parabolic uses the G/B engine directly, otherwise the comparison route.
Json build_product_table(Session& s, const ParabolicSubset& J);

// Default file name "A2_P2.json", "B3_P1-3.json", "A2_B.json".
std::string cache_file_name(const CartanType& type, const ParabolicSubset& J);
// --cache override, then $QFLAG_CACHE_DIR, then ./qflag-cache.
std::filesystem::path cache_path(const CartanType& type, const ParabolicSubset& J,
                                 const std::string& override_path = {});

// Loads and validates a cached table. Missing files return nullopt silently;
// unreadable, corrupted or mismatched ones return nullopt with a warning.
std::optional<Json> load_cache(const std::filesystem::path& path, const Session& s,
                               const ParabolicSubset& J, std::string* warning);

// Write to a temporary file in the same directory, then rename over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qflag

#endif  // QFLAG_TABLE_IO_HPP_
