#include "posinv/report.hpp"

#include <iomanip>
#include <sstream>

namespace posinv {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kNotApplicable:
      return "not_applicable";
  }
  return "?";
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.check == name) return &c;
  return nullptr;
}

Json to_json(const CheckResult& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["witnesses"] = r.witnesses;
  if (!r.details.empty()) j["details"] = r.details;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["timings"] = {{"seconds", r.seconds}};
  j["precision_used"] = r.precision_used;
  return j;
}

Json to_json(const Report& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) arr.push_back(to_json(c));
  return Json{{"ok", r.ok()}, {"checks", arr}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << std::left << std::setw(34) << c.check << ' ' << std::setw(14) << to_string(c.status) << ' '
        << std::fixed << std::setprecision(3) << c.seconds << "s";
    if (c.precision_used) out << "  prec=" << c.precision_used;
    out << '\n';
    for (const auto& [k, v] : c.details.items()) out << "    " << k << ": " << v.dump() << '\n';
    for (const auto& n : c.notes) out << "    note: " << n << '\n';
    for (const auto& w : c.witnesses) out << "    witness: " << w.dump() << '\n';
  }
  out << (r.ok() ? "OK" : "FAILED") << '\n';
  return out.str();
}

}  // namespace posinv
