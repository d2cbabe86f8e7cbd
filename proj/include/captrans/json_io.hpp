#pragma once

#include <string>

#include "captrans/cost.hpp"
#include "captrans/setfun.hpp"
#include "captrans/transport.hpp"

namespace captrans {

// Number formatting used in every file this library writes: 12 significant
// digits, trailing zeros trimmed, so identical data gives identical bytes.
std::string format_number(double v);

// Subset keys: a run of digits is a bitmask; anything else is element labels
// joined by '+'. The empty set is written as "0".
Subset parse_subset_key(const std::string& key, const Universe& u);
std::string subset_key(Subset s, const Universe& u);

// Measure files: {"n": int, "labels": [...]?, "values": {key: real}} with
// every nonempty subset present; the empty set may be listed (value 0).
Capacity measure_from_json_text(const std::string& text);
Capacity measure_from_file(const std::string& path);
std::string measure_to_json_text(const Capacity& mu);

std::string setvector_to_json_text(const SetVector& v);

// Plan files carry method, objective, both universes and the nonzero masses;
// empty-set masses travel in lack_mu / lack_nu blocks (maxplus only).
std::string plan_to_json_text(const TransportPlan& plan);
TransportPlan plan_from_json_text(const std::string& text);

// Cost files: {"x": {...}, "y": {...}, "entries": [{"from", "to", "cost"}]};
// pairs not listed cost 0.
CostMatrix cost_from_json_text(const std::string& text);
CostMatrix cost_from_file(const std::string& path);
std::string cost_to_json_text(const CostMatrix& c);

std::string read_text_file(const std::string& path);

}  // namespace captrans
