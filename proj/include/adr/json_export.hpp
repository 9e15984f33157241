#pragma once

#include "adr/contracts.hpp"
#include "adr/dsl.hpp"
#include "adr/recovery.hpp"

#include <json.hpp>

namespace adr::json {

// Field names are part of the machine interface; see schema/*.json.
nlohmann::json formula(const Formula &f);
nlohmann::json graph(const Graph &g);
nlohmann::json production(const Production &p);
nlohmann::json document(const dsl::Document &doc);
nlohmann::json verdict(const Verdict &v);
nlohmann::json plan(const Plan &p);

} // namespace adr::json
