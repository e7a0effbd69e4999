#pragma once

#include <json.hpp>
#include <string>

namespace slmn {

using Json = nlohmann::json;

enum class Status { pass, fail, report_only };

std::string status_name(Status s);

struct CheckReport {
  std::string check;
  Json params = Json::object();
  Status status = Status::pass;
  Json witness;  // null unless there is something to point at
  double ms = 0.0;

  Json to_json() const;
  // Stable key for --sorted output (check name + canonical params dump).
  std::string sort_key() const;
};

}  // namespace slmn
