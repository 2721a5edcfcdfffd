#pragma once
// Recomputes every numeric claim of the classification argument and
// compares it with the value stated in the source.

#include "qchow/classifier.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qchow {

enum class CheckStatus { Agree, ConclusionAgrees, Disagree };

std::string_view to_string(CheckStatus s);

struct PaperCheck {
    std::string claim_id;
    std::string location;
    std::string paper_value;
    std::string recomputed_value;
    CheckStatus status = CheckStatus::Agree;
    // Required for ConclusionAgrees: which conclusion (sign, integrality,
    // positivity, ...) survives. Free-form note otherwise.
    std::string conclusion;
};

// formula_mode selects which chi checks are replayed (printed, hrr or both);
// precision drives the certified transcendental checks. Other fields of the
// config are ignored.
std::vector<PaperCheck> verify_paper(const RunConfig& config);

bool has_disagreement(const std::vector<PaperCheck>& checks);

}  // namespace qchow
