#pragma once

#include <string>
#include <vector>

#include "balcov/io.hpp"

namespace balcov {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string message) {
        ok = false;
        violations.push_back(std::move(message));
    }
};

// Rechecks an artifact document against the instance it was produced from.
// Every claim is recomputed; recorded traces, gaps, and margins must match
// exactly. Returns the list of violated equalities/inequalities by name.
// Malformed documents raise parse errors; a well-formed artifact that fails
// its bound comes back as ok=false.
VerifyReport verify_artifact(const Instance& inst, const std::string& artifact_json);

std::string verify_report_to_json(const VerifyReport& report);

}  // namespace balcov
