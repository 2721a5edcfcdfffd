#include "doctest.h"

#include "qchow/classifier.hpp"
#include "qchow/replay.hpp"
#include "qchow/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>

using namespace qchow;

namespace {

const ClassificationRecord& find(const std::vector<ClassificationRecord>& rs, int n, int c1, long c2) {
    const auto it = std::find_if(rs.begin(), rs.end(),
                                 [&](const ClassificationRecord& r) { return r.n == n && r.c1 == c1 && r.c2 == c2; });
    REQUIRE(it != rs.end());
    return *it;
}

const PaperCheck& check_named(const std::vector<PaperCheck>& cs, const std::string& id) {
    const auto it = std::find_if(cs.begin(), cs.end(), [&](const PaperCheck& c) { return c.claim_id == id; });
    REQUIRE(it != cs.end());
    return *it;
}

bool has_verdict(const ClassificationRecord& r, VerdictStatus s) {
    return std::any_of(r.verdicts.begin(), r.verdicts.end(), [&](const FilterVerdict& v) { return v.status == s; });
}

}  // namespace

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(validate(c));
    c.n_min = 4;
    CHECK_THROWS_AS(validate(c), ContractError);
    c = RunConfig{};
    c.c2_max = 2;
    CHECK_THROWS_AS(classify(c), ContractError);
    c = RunConfig{};
    c.n_max = 4;
    CHECK_THROWS_AS(validate(c), ContractError);
    CHECK_THROWS_AS(parse_output_format("xml"), ContractError);
    CHECK_THROWS_AS(parse_rr_decision("guess"), ContractError);
    CHECK_THROWS_AS(classify_candidate(5, 1, 0, RunConfig{}), ContractError);
}

TEST_CASE("default classification") {
    const auto records = classify(RunConfig{});
    CHECK(records.size() == 7 * 2 * 21);

    const auto left = survivors(records);
    REQUIRE(left.size() == 1);
    CHECK(left[0].n == 5);
    CHECK(left[0].c1 == -1);
    CHECK(left[0].c2 == 1);
    CHECK(left[0].outcome == Outcome::Cayley);

    const auto& q6 = find(records, 6, 0, 3);
    CHECK(q6.outcome == Outcome::Excluded);
    CHECK(q6.verdicts.back().filter_id == filter_ids::kSegreNef);
    CHECK(q6.verdicts.back().witnesses.at("s6") == "-3456");

    CHECK(find(records, 7, -1, 1).outcome == Outcome::Excluded);
    CHECK(find(records, 5, 0, 1).verdicts.back().filter_id == filter_ids::kRrIntegrality);
    CHECK(find(records, 5, 0, 3).verdicts.back().filter_id == filter_ids::kNefAlphaBound);
    CHECK(find(records, 9, 0, -4).outcome == Outcome::Split);
}

TEST_CASE("record invariants") {
    RunConfig c;
    c.n_max = 14;
    const auto records = classify(c);
    const std::set<std::string> excluding = {"Prop 2.3", "Prop 2.8", "Prop 2.9", "Lemma segre",
                                             "Lemma 5RR", "Prop 4.2", "Prop 4.3"};
    for (const auto& r : records) {
        CAPTURE(r.n);
        CAPTURE(r.c1);
        CAPTURE(r.c2);
        if (r.outcome == Outcome::Cayley) CHECK((r.n == 5 && r.c1 == -1 && r.c2 == 1));
        if (r.outcome == Outcome::Excluded || r.outcome == Outcome::NonexistentDimension) {
            CHECK(has_verdict(r, VerdictStatus::Excluded));
            CHECK(std::any_of(r.citations.begin(), r.citations.end(),
                              [&](const std::string& s) { return excluding.count(s) > 0; }));
        }
        if (r.outcome == Outcome::Split)
            CHECK((has_verdict(r, VerdictStatus::SplitForced) || r.branch == Branch::DiscriminantNonneg));
        CHECK((r.branch == Branch::DiscriminantNonneg) == (r.c1 * r.c1 >= 4 * r.c2));
        for (const auto& v : r.verdicts)
            if (v.status == VerdictStatus::Excluded || v.status == VerdictStatus::SplitForced)
                CHECK_FALSE(v.witnesses.empty());
        if (r.n >= 12 && r.branch == Branch::DiscriminantNeg) {
            CHECK(r.outcome == Outcome::NonexistentDimension);
            CHECK(r.verdicts.back().filter_id == filter_ids::kSinIncompatibility);
        }
    }
    CHECK(std::is_sorted(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tie(a.n, a.c1, a.c2) < std::tie(b.n, b.c1, b.c2);
    }));
}

TEST_CASE("parallel run matches serial run") {
    RunConfig c;
    c.n_max = 13;
    const auto serial = emit_report(classify(c), OutputFormat::Json).document;
    c.jobs = 4;
    const auto parallel = emit_report(classify(c), OutputFormat::Json).document;
    CHECK(serial == parallel);
}

TEST_CASE("printed formula mode loses the Cayley datum") {
    RunConfig c;
    c.formula_mode = RrDecision::Printed;
    const auto records = classify(c);
    CHECK(survivors(records).empty());
    CHECK(find(records, 5, -1, 1).verdicts.back().witnesses.at("chi_printed") == "31/24");
}

TEST_CASE("json report schema and determinism") {
    const auto records = classify(RunConfig{});
    const auto a = emit_report(records, OutputFormat::Json);
    const auto b = emit_report(classify(RunConfig{}), OutputFormat::Json);
    CHECK(a.document == b.document);
    CHECK(a.warnings.empty());

    const auto doc = nlohmann::ordered_json::parse(a.document);
    REQUIRE(doc.is_array());
    const auto& first = doc.front();
    std::vector<std::string> keys;
    for (const auto& [k, _] : first.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"n", "c1", "c2", "branch", "outcome", "verdicts", "citations"});
    std::vector<std::string> vkeys;
    for (const auto& [k, _] : first["verdicts"].front().items()) vkeys.push_back(k);
    CHECK(vkeys == std::vector<std::string>{"filter_id", "status", "reason", "witnesses"});
}

TEST_CASE("markdown and csv reports") {
    const auto records = classify(RunConfig{});
    const auto md = emit_report(records, OutputFormat::Markdown).document;
    CHECK(md.find("## Q^5") != std::string::npos);
    CHECK(md.find("## Q^11") != std::string::npos);
    std::size_t cayley_rows = 0;
    for (std::size_t pos = md.find("| Cayley |"); pos != std::string::npos; pos = md.find("| Cayley |", pos + 1))
        ++cayley_rows;
    CHECK(cayley_rows == 1);

    const auto csv = emit_report(records, OutputFormat::Csv).document;
    CHECK(csv.rfind("n,c1,c2,branch,outcome,filter_id,status,reason,witnesses,citations\n", 0) == 0);
    CHECK(csv.find("s6=-3456") != std::string::npos);
}

TEST_CASE("empty inputs to the report") {
    const auto r = emit_report(std::vector<ClassificationRecord>{}, OutputFormat::Json);
    CHECK(r.document == "[]\n");
    CHECK(r.warnings.size() == 1);
    CHECK_THROWS_AS(emit_report(std::vector<PaperCheck>{}, OutputFormat::Json), ContractError);
}

TEST_CASE("replay of published values") {
    const auto checks = verify_paper(RunConfig{});
    CHECK_FALSE(has_disagreement(checks));

    for (const auto& c : checks)
        if (c.status == CheckStatus::ConclusionAgrees) CHECK_FALSE(c.conclusion.empty());

    const auto& s6a = check_named(checks, "q6.s6_(0,3)_twist_3");
    CHECK(s6a.status == CheckStatus::ConclusionAgrees);
    CHECK(s6a.recomputed_value == "-3456");
    CHECK(s6a.conclusion.rfind("sign", 0) == 0);
    const auto& s6b = check_named(checks, "q6.s6_(-1,3)_twist_7/2");
    CHECK(s6b.status == CheckStatus::ConclusionAgrees);
    CHECK(s6b.recomputed_value == "-82223/32");

    CHECK(check_named(checks, "chi(0,2).printed").status == CheckStatus::Agree);
    const auto& hrr = check_named(checks, "chi(0,2).hrr");
    CHECK(hrr.status == CheckStatus::ConclusionAgrees);
    CHECK(hrr.recomputed_value == "-11/2");
    CHECK(hrr.conclusion.rfind("integrality", 0) == 0);

    CHECK(check_named(checks, "sin.f(1/11)").status == CheckStatus::Agree);
    CHECK(check_named(checks, "sin.f_monotonicity").status == CheckStatus::ConclusionAgrees);
    CHECK(check_named(checks, "twist.c2_of_E(n-1)").status == CheckStatus::Agree);
    CHECK(check_named(checks, "unstable.chain_endpoint").status == CheckStatus::Agree);
    CHECK(check_named(checks, "main.survivors_5_to_11").status == CheckStatus::Agree);
    for (int i = 1; i <= 5; ++i)
        CHECK(check_named(checks, "segre.s" + std::to_string(i) + "_identity").status == CheckStatus::Agree);
    for (int n = 5; n <= 11; ++n)
        for (int c1 : {-1, 0})
            CHECK(check_named(checks, "claim44.bound_n" + std::to_string(n) + "_c1_" + std::to_string(c1)).status ==
                  CheckStatus::Agree);

    RunConfig printed_only;
    printed_only.formula_mode = RrDecision::Printed;
    const auto pc = verify_paper(printed_only);
    CHECK(std::none_of(pc.begin(), pc.end(), [](const PaperCheck& c) { return c.claim_id == "chi(0,2).hrr"; }));
}
