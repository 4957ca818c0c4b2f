#pragma once

#include "hexlap/bignum.hpp"
#include "hexlap/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hexlap {

enum class RecordStatus {
    Match,
    // Disagreement listed in the known-discrepancy manifest; both values are
    // carried in the record.
    FlaggedDiscrepancy,
    // Disagreement nobody has explained. Any of these fails validation.
    Mismatch,
};

std::string_view status_name(RecordStatus s);

struct ValidationRecord {
    std::string id;
    std::string graph;
    unsigned k = 1;
    unsigned n = 0;
    std::string quantity;
    std::string method;
    std::string value;
    std::string reference;
    std::string reference_source;
    RecordStatus status = RecordStatus::Match;
    std::string note;
};

struct ValidationReport {
    std::string mode;
    std::vector<ValidationRecord> records; // sorted by id

    std::size_t count(RecordStatus s) const;
    bool ok() const { return count(RecordStatus::Mismatch) == 0; }
};

/// A number as printed in a published table: digits * 10^exponent, with the
/// unit of the last printed digit being 10^exponent.
struct PrintedValue {
    std::string text;
    BigInt digits;
    int exponent = 0;
};

/// Parses "42.44", "3056", "6.71512031151729e32" and "11171809693029x10^4".
/// `significant` caps the number of significant digits taken as printed, so a
/// trailing zero past that count counts as padding.
PrintedValue parse_printed(std::string_view text, int significant = 15);

/// True iff |value - printed| <= ulps * unit of the last printed digit.
bool matches_printed(const Rational& value, const PrintedValue& printed, double ulps = 0.5);

// Seeds that reproduce the published Kemeny/Kirchhoff tables for the
// 6-cycle: they print as 0.89 and 10.67.
Rational table_seed_kemeny();
Rational table_seed_kirchhoff();

/// Recomputes the published Kemeny, Kirchhoff and spanning-tree tables for
/// the 6-cycle (k = 1, 2) with the closed forms and compares at printed
/// precision. Known discrepancies are flagged, not failed.
ValidationReport validate_tables();

/// Iterative spectrum vs dense oracle, closed-form tau vs Matrix-Tree, and
/// spectral vs closed-form Kemeny on the small reference instances.
ValidationReport validate_oracle();

Graph named_graph(std::string_view id); // "K2", "P3", "C5", "C6", "K4", ...

std::string validation_to_json(const ValidationReport& r);
std::string validation_to_text(const ValidationReport& r);

} // namespace hexlap
