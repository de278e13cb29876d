#include "tame/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace tame {

std::string render_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << rep.law << " over " << rep.field->to_string() << " (precision "
     << rep.precision_used << ")\n";
  std::size_t idw = 5;
  for (const auto& e : rep.entries) idw = std::max(idw, e.id.size());
  os << std::left << std::setw(static_cast<int>(idw) + 2) << "place"
     << std::setw(16) << "symbol" << "norm\n";
  for (const auto& e : rep.entries)
    os << std::left << std::setw(static_cast<int>(idw) + 2) << e.id
       << std::setw(16) << e.symbol.to_string() << e.norm.to_string() << "\n";
  os << "product " << rep.product.to_string() << "  "
     << (rep.passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_json(const VerificationReport& rep) {
  nlohmann::json j;
  j["schema"] = 1;
  j["law"] = rep.law;
  j["field"] = rep.field->to_string();
  j["precision"] = rep.precision_used;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : rep.entries)
    j["entries"].push_back({{"place", e.id},
                            {"symbol", e.symbol.to_string()},
                            {"norm", e.norm.to_string()}});
  j["product"] = rep.product.to_string();
  j["passed"] = rep.passed;
  return j.dump(2);
}

}  // namespace tame
