#pragma once
// Deterministic serialization of classification records and replay checks.

#include "qchow/classifier.hpp"
#include "qchow/replay.hpp"

#include <string>
#include <vector>

namespace qchow {

struct Report {
    std::string document;
    std::vector<std::string> warnings;
};

// JSON records carry exactly {n, c1, c2, branch, outcome, verdicts, citations};
// each verdict is {filter_id, status, reason, witnesses}. An empty record
// list is allowed and produces a warning.
Report emit_report(const std::vector<ClassificationRecord>& records, OutputFormat format);

// Throws ContractError for an empty check list.
Report emit_report(const std::vector<PaperCheck>& checks, OutputFormat format);

}  // namespace qchow
