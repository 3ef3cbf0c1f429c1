#include "qflag/qclass.hpp"

#include <numeric>

#include "qflag/errors.hpp"

namespace qflag {

bool QTermLess::operator()(const QTerm& a, const QTerm& b) const {
  int sa = std::accumulate(a.degree.begin(), a.degree.end(), 0);
  int sb = std::accumulate(b.degree.begin(), b.degree.end(), 0);
  if (sa != sb) return sa < sb;
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.schubert < b.schubert;
}

QClass to_integral(const RationalQClass& c, const char* context) {
  QClass out;
  for (const auto& [t, v] : c.terms()) {
    if (v.get_den() != 1)
      fail_internal(std::string(context) + ": fractional structure constant " + v.get_str());
    out.add(t, v.get_num());
  }
  return out;
}

bool has_negative_coefficient(const QClass& c) {
  for (const auto& [t, v] : c.terms())
    if (v < 0) return true;
  return false;
}

std::string format_qclass(const QClass& c, const ElementTable& table, std::span<const int> q_nodes) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [t, v] : c.terms()) {
    std::string qpart;
    for (std::size_t i = 0; i < t.degree.size(); ++i) {
      if (t.degree[i] == 0) continue;
      if (!qpart.empty()) qpart += " ";
      qpart += "q" + std::to_string(q_nodes[i]);
      if (t.degree[i] != 1) qpart += "^" + std::to_string(t.degree[i]);
    }
    std::string term = qpart;
    if (t.schubert != table.identity_id() || qpart.empty()) {
      if (!term.empty()) term += " * ";
      term += "sigma[" + table.element(t.schubert).to_string() + "]";
    }
    if (v != 1) term += " * " + v.get_str();
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace qflag
