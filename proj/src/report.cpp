#include "hforge/report.hpp"

#include <sstream>

namespace hforge {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    out << "\n  [" << v.axiom << "] " << v.detail;
    if (!v.witness.empty()) {
      out << " witness=(";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out << ",";
        out << v.witness[i];
      }
      out << ")";
    }
  }
  return out.str();
}

}  // namespace hforge
