#ifndef POLYREP_CROSSCHECK_HPP
#define POLYREP_CROSSCHECK_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyrep/exactnum.hpp"
#include "polyrep/polygonal.hpp"
#include "polyrep/verify.hpp"

namespace polyrep {

/// Malformed b-file content, with the 1-based line where parsing stopped.
class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct BFileEntry {
    std::int64_t index;
    ExactInteger value;
    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// An OEIS b-file: '#' comment lines followed by "index value" data lines.
struct BFileSequence {
    std::string sequence_id;
    std::vector<std::string> comments; // without the leading '#'
    std::vector<BFileEntry> entries;   // strictly increasing indices
};

/// The sequence id is taken from the first "A" followed by six digits in a
/// comment line when `sequence_id` is empty.
BFileSequence parse_bfile(std::string_view text, std::string sequence_id = {});
BFileSequence load_bfile(const std::filesystem::path& path);

/// Comments first, then one "index value" line per entry.
std::string to_bfile(const BFileSequence& sequence);

enum class CrosscheckKind {
    polygonal_values, // sorted distinct {F_s(n) : n in Z} <= limit vs the fixture's values in order
    theta_coeffs,     // theta_series coefficients 0..limit vs fixture entries at those indices
};

/// Compares generated data against a fixture over the overlap of ranges.
/// Throws DomainError when the fixture does not cover the compared range.
/// A failing report names the first mismatching index in parameter "mismatch_index".
VerificationReport crosscheck_sequence(CrosscheckKind kind, const PolygonalSpec& spec,
                                       const BFileSequence& fixture, std::int64_t limit);

/// Sorted distinct generalized polygonal values <= limit.
std::vector<std::int64_t> polygonal_values_up_to(const PolygonalSpec& spec, std::int64_t limit);

} // namespace polyrep

#endif // POLYREP_CROSSCHECK_HPP
