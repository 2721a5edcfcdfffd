#pragma once
// Case analysis over normalized rank-2 Chern data on Q^n, n >= 5.
//
// For each (n, c1, c2) with c1 in {-1, 0} the driver picks a branch on the
// sign of the discriminant c1^2 - 4c2 and applies the exclusion filters in a
// fixed order, recording every verdict and the results it relies on.

#include "qchow/filters.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qchow {

enum class OutputFormat { Json, Csv, Markdown };

std::string_view to_string(OutputFormat f);
// Throws ContractError for unknown names.
OutputFormat parse_output_format(std::string_view name);
RrDecision parse_rr_decision(std::string_view name);

struct RunConfig {
    int n_min = 5;
    int n_max = 11;
    // c2 is enumerated over [-c2_max, c2_max].
    int c2_max = 10;
    OutputFormat format = OutputFormat::Json;
    int precision = kDefaultPrecisionDigits;
    RrDecision formula_mode = RrDecision::Both;
    // Worker threads for candidate evaluation; 1 runs serially.
    unsigned jobs = 1;
};

// Throws ContractError unless n_min >= 5, n_max >= n_min, c2_max >= 3,
// precision >= 10 and jobs >= 1.
void validate(const RunConfig& config);

enum class Branch { DiscriminantNonneg, DiscriminantNeg };
enum class Outcome { Split, Cayley, Excluded, NonexistentDimension };

std::string_view to_string(Branch b);
std::string_view to_string(Outcome o);

// Identifiers of the results a record leans on.
namespace citations {
inline constexpr std::string_view kBogomolov = "Prop 2.3";
inline constexpr std::string_view kSplittingCriterion = "Prop 2.8";
inline constexpr std::string_view kSinBound = "Prop 2.9";
inline constexpr std::string_view kGlobalGeneration = "Prop 3.1";
inline constexpr std::string_view kSegre = "Lemma segre";
inline constexpr std::string_view kChiQ5 = "Lemma 5RR";
inline constexpr std::string_view kNefTwist = "Lemma nef-twist";
inline constexpr std::string_view kUnstableSplits = "Prop 4.1";
inline constexpr std::string_view kNoBundlesHighDim = "Prop 4.2";
inline constexpr std::string_view kMiddleRange = "Prop 4.3";
inline constexpr std::string_view kCayley = "Def 4.3";
inline constexpr std::string_view kGgChernBound = "APW94 Prop 1.4(A)(3)";
inline constexpr std::string_view kNefAlpha = "APW94 Prop 1.4";
inline constexpr std::string_view kCayleyClassification = "O90 Main Theorem(i)";
inline constexpr std::string_view kCayleyNoExtension = "O90 Thm 3.2";
}  // namespace citations

struct ClassificationRecord {
    int n = 0;
    int c1 = 0;
    long c2 = 0;
    Branch branch = Branch::DiscriminantNonneg;
    std::vector<FilterVerdict> verdicts;
    Outcome outcome = Outcome::Excluded;
    std::vector<std::string> citations;
};

// Runs the full filter sequence for one normalized candidate (c1 in {0,-1}, n >= 5).
ClassificationRecord classify_candidate(int n, int c1, long c2, const RunConfig& config);

// All records for the configured range, ordered lexicographically by (n, c1, c2).
std::vector<ClassificationRecord> classify(const RunConfig& config);

// Records whose outcome is neither Split nor Excluded nor NonexistentDimension.
std::vector<ClassificationRecord> survivors(const std::vector<ClassificationRecord>& records);

}  // namespace qchow
