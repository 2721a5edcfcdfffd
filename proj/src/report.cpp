#include "qchow/report.hpp"

#include "json.hpp"

#include <map>
#include <sstream>

namespace qchow {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += '\\';
        out += ch;
    }
    return out;
}

std::string join_witnesses(const std::map<std::string, std::string>& w, const char* sep) {
    std::string out;
    for (const auto& [k, v] : w) {
        if (!out.empty()) out += sep;
        out += k + "=" + v;
    }
    return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

ordered_json record_json(const ClassificationRecord& r) {
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : r.verdicts) {
        ordered_json w = ordered_json::object();
        for (const auto& [k, val] : v.witnesses) w[k] = val;
        verdicts.push_back({{"filter_id", v.filter_id},
                            {"status", std::string(to_string(v.status))},
                            {"reason", v.reason},
                            {"witnesses", std::move(w)}});
    }
    return ordered_json{{"n", r.n},
                        {"c1", r.c1},
                        {"c2", r.c2},
                        {"branch", std::string(to_string(r.branch))},
                        {"outcome", std::string(to_string(r.outcome))},
                        {"verdicts", std::move(verdicts)},
                        {"citations", r.citations}};
}

// The verdict that settled the outcome: the last Excluded/SplitForced one,
// or the last verdict overall.
const FilterVerdict* deciding_verdict(const ClassificationRecord& r) {
    for (auto it = r.verdicts.rbegin(); it != r.verdicts.rend(); ++it)
        if (it->status == VerdictStatus::Excluded || it->status == VerdictStatus::SplitForced) return &*it;
    return r.verdicts.empty() ? nullptr : &r.verdicts.back();
}

std::string records_markdown(const std::vector<ClassificationRecord>& records) {
    std::ostringstream os;
    int current_n = -1;
    for (const auto& r : records) {
        if (r.n != current_n) {
            if (current_n != -1) os << "\n";
            current_n = r.n;
            os << "## Q^" << r.n << "\n\n"
               << "| c1 | c2 | branch | outcome | deciding filter | witnesses |\n"
               << "|---:|---:|---|---|---|---|\n";
        }
        const FilterVerdict* v = deciding_verdict(r);
        os << "| " << r.c1 << " | " << r.c2 << " | " << to_string(r.branch) << " | " << to_string(r.outcome) << " | "
           << (v ? v->filter_id : "") << " | " << md_cell(v ? join_witnesses(v->witnesses, ", ") : "") << " |\n";
    }
    return os.str();
}

std::string records_csv(const std::vector<ClassificationRecord>& records) {
    std::ostringstream os;
    os << "n,c1,c2,branch,outcome,filter_id,status,reason,witnesses,citations\n";
    for (const auto& r : records)
        for (const auto& v : r.verdicts)
            os << r.n << ',' << r.c1 << ',' << r.c2 << ',' << to_string(r.branch) << ',' << to_string(r.outcome) << ','
               << csv_field(v.filter_id) << ',' << to_string(v.status) << ',' << csv_field(v.reason) << ','
               << csv_field(join_witnesses(v.witnesses, ";")) << ',' << csv_field(join(r.citations, ";")) << '\n';
    return os.str();
}

}  // namespace

Report emit_report(const std::vector<ClassificationRecord>& records, OutputFormat format) {
    Report out;
    if (records.empty()) out.warnings.emplace_back("classification produced no records");
    switch (format) {
        case OutputFormat::Json: {
            ordered_json doc = ordered_json::array();
            for (const auto& r : records) doc.push_back(record_json(r));
            out.document = doc.dump(2) + "\n";
            break;
        }
        case OutputFormat::Csv:
            out.document = records_csv(records);
            break;
        case OutputFormat::Markdown:
            out.document = records_markdown(records);
            break;
    }
    return out;
}

Report emit_report(const std::vector<PaperCheck>& checks, OutputFormat format) {
    if (checks.empty()) throw ContractError("verify-paper produced no checks");
    Report out;
    switch (format) {
        case OutputFormat::Json: {
            ordered_json doc = ordered_json::array();
            for (const auto& c : checks)
                doc.push_back({{"claim_id", c.claim_id},
                               {"location", c.location},
                               {"paper_value", c.paper_value},
                               {"recomputed_value", c.recomputed_value},
                               {"status", std::string(to_string(c.status))},
                               {"conclusion", c.conclusion}});
            out.document = doc.dump(2) + "\n";
            break;
        }
        case OutputFormat::Csv: {
            std::ostringstream os;
            os << "claim_id,location,paper_value,recomputed_value,status,conclusion\n";
            for (const auto& c : checks)
                os << csv_field(c.claim_id) << ',' << csv_field(c.location) << ',' << csv_field(c.paper_value) << ','
                   << csv_field(c.recomputed_value) << ',' << to_string(c.status) << ',' << csv_field(c.conclusion)
                   << '\n';
            out.document = os.str();
            break;
        }
        case OutputFormat::Markdown: {
            std::ostringstream os;
            os << "| claim | location | stated | recomputed | status | conclusion |\n"
               << "|---|---|---|---|---|---|\n";
            for (const auto& c : checks)
                os << "| " << md_cell(c.claim_id) << " | " << md_cell(c.location) << " | " << md_cell(c.paper_value)
                   << " | " << md_cell(c.recomputed_value) << " | " << to_string(c.status) << " | "
                   << md_cell(c.conclusion) << " |\n";
            out.document = os.str();
            break;
        }
    }
    return out;
}

}  // namespace qchow
