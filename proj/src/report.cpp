#include "iim/report.hpp"

namespace iim {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["theorem_id"] = theorem_id;
    j["seed_graph"] = seed_graph;
    j["level"] = level;
    j["parameters"] = parameters;
    j["checked"] = checked;
    j["skipped"] = skipped;
    j["passed"] = passed();
    j["bound"] = bound;
    j["max_observed"] = max_observed ? nlohmann::json(*max_observed) : nlohmann::json();
    j["min_observed"] = min_observed ? nlohmann::json(*min_observed) : nlohmann::json();
    j["witness_sequences"] = witness_sequences;
    j["violations"] = violations;
    j["wall_seconds"] = wall_seconds;
    return j;
}

}  // namespace iim
