#include "polyrep/crosscheck.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace polyrep {

BFileParseError::BFileParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) {
            break;
        }
        const auto end = line.find_first_of(" \t", start);
        fields.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        pos = end == std::string_view::npos ? line.size() : end;
    }
    return fields;
}

} // namespace

BFileSequence parse_bfile(std::string_view text, std::string sequence_id) {
    BFileSequence seq;
    seq.sequence_id = std::move(sequence_id);
    static const std::regex id_pattern("A[0-9]{6}");

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto newline = text.find('\n', pos);
        const auto raw = text.substr(pos, newline == std::string_view::npos ? std::string_view::npos : newline - pos);
        pos = newline == std::string_view::npos ? text.size() : newline + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::string comment(line.substr(1));
            if (seq.sequence_id.empty()) {
                std::smatch m;
                if (std::regex_search(comment, m, id_pattern)) {
                    seq.sequence_id = m.str();
                }
            }
            seq.comments.push_back(std::move(comment));
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            throw BFileParseError(line_no, "expected 'index value', got '" + std::string(line) + "'");
        }
        std::int64_t index = 0;
        const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), index);
        if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
            throw BFileParseError(line_no, "bad index '" + std::string(fields[0]) + "'");
        }
        ExactInteger value;
        try {
            value = ExactInteger::parse(fields[1]);
        } catch (const std::invalid_argument&) {
            throw BFileParseError(line_no, "bad value '" + std::string(fields[1]) + "'");
        }
        if (!seq.entries.empty() && index <= seq.entries.back().index) {
            throw BFileParseError(line_no, "index " + std::to_string(index) + " is not increasing");
        }
        seq.entries.push_back({index, std::move(value)});
    }
    return seq;
}

BFileSequence load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open fixture " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_bfile(buffer.str());
}

std::string to_bfile(const BFileSequence& sequence) {
    std::ostringstream os;
    for (const auto& c : sequence.comments) {
        os << '#' << c << '\n';
    }
    for (const auto& e : sequence.entries) {
        os << e.index << ' ' << e.value << '\n';
    }
    return os.str();
}

std::vector<std::int64_t> polygonal_values_up_to(const PolygonalSpec& spec, std::int64_t limit) {
    std::vector<std::int64_t> values;
    if (limit < 0) {
        return values;
    }
    const IndexRange range = index_range(spec, limit);
    for (std::int64_t n = range.lo; n <= range.hi; ++n) {
        const auto v = polygonal_number(spec, n);
        if (v <= limit) {
            values.push_back(v);
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

namespace {

VerificationReport crosscheck_report(IdentityKind kind, const PolygonalSpec& spec, std::int64_t limit,
                                     std::size_t compared) {
    VerificationReport r;
    r.identity = kind;
    r.parameters = {{"s", spec.sides()}, {"limit", limit}};
    r.witnesses.emplace_back("compared_terms", std::to_string(compared));
    return r;
}

} // namespace

VerificationReport crosscheck_sequence(CrosscheckKind kind, const PolygonalSpec& spec,
                                       const BFileSequence& fixture, std::int64_t limit) {
    if (limit < 0) {
        throw DomainError("crosscheck: limit must be nonnegative");
    }
    if (fixture.entries.empty()) {
        throw DomainError("crosscheck: fixture " + fixture.sequence_id + " has no entries");
    }

    if (kind == CrosscheckKind::polygonal_values) {
        const auto computed = polygonal_values_up_to(spec, limit);
        const auto& entries = fixture.entries;
        // The fixture covers the range once it reaches a value above the limit
        // or holds at least as many terms as were generated.
        const bool covers = entries.size() >= computed.size() || entries.back().value > ExactInteger(limit);
        if (!covers) {
            throw DomainError("crosscheck: fixture " + fixture.sequence_id + " ends before limit " +
                              std::to_string(limit));
        }
        auto r = crosscheck_report(IdentityKind::crosscheck_polygonal, spec, limit, computed.size());
        r.passed = true;
        for (std::size_t i = 0; i < computed.size(); ++i) {
            const ExactInteger expected(computed[i]);
            if (i >= entries.size() || entries[i].value != expected) {
                r.passed = false;
                const std::int64_t at = i < entries.size() ? entries[i].index : static_cast<std::int64_t>(i);
                r.parameters.emplace_back("mismatch_index", at);
                r.lhs = expected.to_string();
                r.rhs = i < entries.size() ? entries[i].value.to_string() : "";
                return r;
            }
        }
        // A fixture value <= limit that was not generated is a mismatch too.
        if (entries.size() > computed.size() && entries[computed.size()].value <= ExactInteger(limit)) {
            r.passed = false;
            r.parameters.emplace_back("mismatch_index", entries[computed.size()].index);
            r.lhs = "";
            r.rhs = entries[computed.size()].value.to_string();
            return r;
        }
        r.lhs = r.rhs = computed.empty() ? "" : std::to_string(computed.back());
        return r;
    }

    // theta_coeffs
    const auto& entries = fixture.entries;
    if (entries.front().index > 0 || entries.back().index < limit) {
        throw DomainError("crosscheck: fixture " + fixture.sequence_id + " does not cover indices 0.." +
                          std::to_string(limit));
    }
    const TruncatedSeries theta = theta_series(spec, static_cast<std::size_t>(limit));
    auto r = crosscheck_report(IdentityKind::crosscheck_theta, spec, limit, 0);
    r.passed = true;
    std::size_t compared = 0;
    for (const auto& e : entries) {
        if (e.index < 0 || e.index > limit) {
            continue;
        }
        ++compared;
        const ExactRational computed = theta[static_cast<std::size_t>(e.index)];
        if (computed != ExactRational(e.value)) {
            r.passed = false;
            r.parameters.emplace_back("mismatch_index", e.index);
            r.lhs = computed.to_string();
            r.rhs = e.value.to_string();
            break;
        }
        r.lhs = r.rhs = computed.to_string();
    }
    if (r.passed && compared != static_cast<std::size_t>(limit) + 1) {
        throw DomainError("crosscheck: fixture " + fixture.sequence_id + " has gaps in indices 0.." +
                          std::to_string(limit));
    }
    r.witnesses = {{"compared_terms", std::to_string(compared)}};
    return r;
}

} // namespace polyrep
