#include "qchow/classifier.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qchow {

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json:
            return "json";
        case OutputFormat::Csv:
            return "csv";
        case OutputFormat::Markdown:
            return "markdown";
    }
    return "?";
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "markdown" || name == "md") return OutputFormat::Markdown;
    throw ContractError("unknown output format '" + std::string(name) + "'");
}

RrDecision parse_rr_decision(std::string_view name) {
    if (name == "printed") return RrDecision::Printed;
    if (name == "hrr") return RrDecision::Hrr;
    if (name == "both") return RrDecision::Both;
    throw ContractError("unknown formula mode '" + std::string(name) + "'");
}

void validate(const RunConfig& config) {
    if (config.n_min < 5) throw ContractError("n_min must be at least 5");
    if (config.n_max < config.n_min) throw ContractError("n_max must be at least n_min");
    if (config.c2_max < 3) throw ContractError("c2_max must be at least 3");
    if (config.precision < 10) throw ContractError("precision must be at least 10 decimal digits");
    if (config.jobs < 1) throw ContractError("jobs must be at least 1");
}

std::string_view to_string(Branch b) {
    return b == Branch::DiscriminantNonneg ? "discriminant_nonneg" : "discriminant_neg";
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Split:
            return "Split";
        case Outcome::Cayley:
            return "Cayley";
        case Outcome::Excluded:
            return "Excluded";
        case Outcome::NonexistentDimension:
            return "NonexistentDimension";
    }
    return "?";
}

namespace {

class RecordBuilder {
public:
    RecordBuilder(int n, int c1, long c2) {
        record_.n = n;
        record_.c1 = c1;
        record_.c2 = c2;
    }

    const FilterVerdict& add(FilterVerdict v) {
        record_.verdicts.push_back(std::move(v));
        return record_.verdicts.back();
    }

    void cite(std::string_view id) {
        auto& c = record_.citations;
        if (std::find(c.begin(), c.end(), id) == c.end()) c.emplace_back(id);
    }

    ClassificationRecord finish(Branch branch, Outcome outcome) {
        record_.branch = branch;
        record_.outcome = outcome;
        return std::move(record_);
    }

private:
    ClassificationRecord record_;
};

// c1^2 >= 4c2: E is unstable, F = E(n-1) is globally generated, and the
// splitting criterion applies to F.
ClassificationRecord classify_unstable(RecordBuilder& rb, int n, const ChernData& d) {
    rb.add(bogomolov_verdict(d));
    rb.cite(citations::kBogomolov);
    rb.cite(citations::kGlobalGeneration);
    const FilterVerdict& split = rb.add(splitting_criterion(n, twist(d, Rational(n - 1))));
    rb.cite(citations::kSplittingCriterion);
    rb.cite(citations::kUnstableSplits);
    if (split.status != VerdictStatus::SplitForced)
        throw std::logic_error("splitting criterion failed on the discriminant_nonneg branch at n = " +
                               std::to_string(n));
    return rb.finish(Branch::DiscriminantNonneg, Outcome::Split);
}

ClassificationRecord classify_high_dimension(RecordBuilder& rb, int n, const ChernData& d, const RunConfig& config) {
    rb.add(bogomolov_verdict(d));
    rb.cite(citations::kGlobalGeneration);
    rb.add(gg_c2_upper(n, d));
    rb.cite(citations::kGgChernBound);
    const FilterVerdict& sin = rb.add(sin_incompatibility(n, config.precision));
    rb.cite(citations::kSinBound);
    rb.cite(citations::kNoBundlesHighDim);
    if (sin.status != VerdictStatus::Excluded)
        throw std::logic_error("sin bound could not be certified at n = " + std::to_string(n));
    return rb.finish(Branch::DiscriminantNeg, Outcome::NonexistentDimension);
}

// Last case of the middle range: (c1, c2) = (-1, 1).
ClassificationRecord cayley_endgame(RecordBuilder& rb, int n, const ChernData& d) {
    // Unstable sub-branch: F = E(n-1) meets the splitting criterion, but a
    // split bundle has c1^2 >= 4c2, which the branch excludes.
    rb.add(splitting_criterion(n, twist(d, Rational(n - 1))));
    rb.cite(citations::kSplittingCriterion);

    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kCayleyEndgame);
    v.witnesses = {{"c1_restricted_Q5", to_string(d.c1)},
                   {"c2_restricted_Q5", to_string(d.c2)},
                   {"unstable_subbranch", "excluded (split incompatible with c1^2 < 4c2); inference gap flagged"}};
    v.premises = {"stable E restricts to a stable bundle on Q^5 with (c1, c2) = (-1, 1), i.e. a Cayley bundle",
                  "no Cayley bundle extends to Q^6"};
    rb.cite(citations::kCayley);
    rb.cite(citations::kCayleyClassification);
    if (n == 5) {
        v.status = VerdictStatus::Pass;
        v.reason = "if stable, E is the Cayley bundle on Q^5";
        rb.add(std::move(v));
        return rb.finish(Branch::DiscriminantNeg, Outcome::Cayley);
    }
    v.status = VerdictStatus::Excluded;
    v.reason = "E|Q^5 would be a Cayley bundle, which does not extend to Q^6";
    rb.add(std::move(v));
    rb.cite(citations::kCayleyNoExtension);
    return rb.finish(Branch::DiscriminantNeg, Outcome::Excluded);
}

ClassificationRecord classify_middle_range(RecordBuilder& rb, int n, const ChernData& d, const RunConfig& config) {
    rb.add(bogomolov_verdict(d));
    rb.cite(citations::kMiddleRange);
    rb.cite(citations::kNefTwist);

    rb.cite(citations::kNefAlpha);
    if (rb.add(nef_alpha_filter(n, d)).status == VerdictStatus::Excluded)
        return rb.finish(Branch::DiscriminantNeg, Outcome::Excluded);

    if (n == 6) {
        rb.cite(citations::kSegre);
        if (rb.add(segre_nef_obstruction(n, d)).status == VerdictStatus::Excluded)
            return rb.finish(Branch::DiscriminantNeg, Outcome::Excluded);
    }

    rb.cite(citations::kChiQ5);
    if (rb.add(rr_integrality(d, config.formula_mode)).status == VerdictStatus::Excluded)
        return rb.finish(Branch::DiscriminantNeg, Outcome::Excluded);

    if (d == make_chern(-1, 1)) return cayley_endgame(rb, n, d);
    throw std::logic_error("candidate (" + std::to_string(n) + ", " + to_string(d.c1) + ", " + to_string(d.c2) +
                           ") survived every filter");
}

}  // namespace

ClassificationRecord classify_candidate(int n, int c1, long c2, const RunConfig& config) {
    if (n < 5) throw ContractError("classification starts at n = 5");
    if (c1 != 0 && c1 != -1) throw ContractError("candidates must be normalized (c1 in {0, -1})");
    const ChernData d = make_chern(c1, c2);
    RecordBuilder rb(n, c1, c2);
    if (bogomolov_status(d) == BogomolovStatus::StableImpossible) return classify_unstable(rb, n, d);
    if (n >= 12) return classify_high_dimension(rb, n, d, config);
    return classify_middle_range(rb, n, d, config);
}

std::vector<ClassificationRecord> classify(const RunConfig& config) {
    validate(config);
    std::vector<std::tuple<int, int, long>> candidates;
    for (int n = config.n_min; n <= config.n_max; ++n)
        for (int c1 : {-1, 0})
            for (long c2 = -config.c2_max; c2 <= config.c2_max; ++c2) candidates.emplace_back(n, c1, c2);

    std::vector<ClassificationRecord> records(candidates.size());
    const auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& [n, c1, c2] = candidates[i];
            records[i] = classify_candidate(n, c1, c2, config);
        }
    };

    const std::size_t workers = std::min<std::size_t>(config.jobs, std::max<std::size_t>(candidates.size(), 1));
    if (workers <= 1) {
        run_range(0, candidates.size());
        return records;
    }
    // Each worker owns a disjoint slice of the pre-sized result vector, so the
    // output order is the enumeration order regardless of scheduling.
    std::vector<std::future<void>> pending;
    const std::size_t chunk = (candidates.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk)
        pending.push_back(std::async(std::launch::async, run_range, begin, std::min(begin + chunk, candidates.size())));
    for (auto& f : pending) f.get();
    return records;
}

std::vector<ClassificationRecord> survivors(const std::vector<ClassificationRecord>& records) {
    std::vector<ClassificationRecord> out;
    for (const auto& r : records)
        if (r.outcome == Outcome::Cayley) out.push_back(r);
    return out;
}

}  // namespace qchow
