#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace iim {

/// Machine-readable outcome of one theorem check. `passed` is derived from
/// the violation list, never set independently.
struct VerificationReport {
    std::string theorem_id;
    std::string seed_graph;
    int level = 0;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    double bound = 0.0;
    std::optional<double> max_observed;
    std::optional<double> min_observed;
    std::vector<std::string> witness_sequences;  // choice sequences of extremal/violating cases
    std::vector<std::string> violations;
    double wall_seconds = 0.0;

    bool passed() const { return violations.empty(); }

    nlohmann::json to_json() const;
    std::string to_string() const { return to_json().dump(2); }
};

}  // namespace iim
