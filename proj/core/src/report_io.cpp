#include "polyrep/report_io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace polyrep {

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    using nlohmann::ordered_json;
    ordered_json doc = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json item;
        item["identity_name"] = identity_name(r.identity);
        ordered_json params = ordered_json::object();
        for (const auto& [key, value] : r.parameters) {
            params[key] = value;
        }
        item["parameters"] = std::move(params);
        item["lhs"] = r.lhs;
        item["rhs"] = r.rhs;
        item["passed"] = r.passed;
        if (!r.witnesses.empty()) {
            ordered_json witnesses = ordered_json::object();
            for (const auto& [key, value] : r.witnesses) {
                witnesses[key] = value;
            }
            item["witnesses"] = std::move(witnesses);
        }
        if (r.skipped_reason) {
            item["skipped_reason"] = *r.skipped_reason;
        }
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "identity_name,parameters,lhs,rhs,passed,note\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [key, value] : r.parameters) {
            if (!params.empty()) {
                params += ';';
            }
            params += key + "=" + std::to_string(value);
        }
        os << identity_name(r.identity) << ',' << params << ',' << r.lhs << ',' << r.rhs << ','
           << (r.passed ? "true" : "false") << ',' << csv_field(r.skipped_reason.value_or("")) << '\n';
    }
    return os.str();
}

std::string reports_to_summary(const std::vector<VerificationReport>& reports) {
    std::map<IdentityKind, std::vector<VerificationReport>> grouped;
    for (const auto& r : reports) {
        grouped[r.identity].push_back(r);
    }
    std::ostringstream os;
    for (const auto& [kind, group] : grouped) {
        const SuiteSummary s = summarize(group);
        os << identity_name(kind) << ": " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
           << " skipped\n";
        for (const auto& r : group) {
            if (!r.skipped() && !r.passed) {
                os << "  FAIL";
                for (const auto& [key, value] : r.parameters) {
                    os << ' ' << key << '=' << value;
                }
                os << ": lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
            }
        }
    }
    const SuiteSummary total = summarize(reports);
    os << "total: " << total.passed << " passed, " << total.failed << " failed, " << total.skipped
       << " skipped\n";
    return os.str();
}

} // namespace polyrep
