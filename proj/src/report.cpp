#include "slmn/report.hpp"

namespace slmn {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report-only";
  }
  return "?";
}

Json CheckReport::to_json() const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = status_name(status);
  j["witness"] = witness.is_null() ? Json() : witness;
  j["ms"] = ms;
  return j;
}

std::string CheckReport::sort_key() const { return check + "|" + params.dump(); }

}  // namespace slmn
