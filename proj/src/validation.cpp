#include "hexlap/validation.hpp"

#include "hexlap/error.hpp"
#include "hexlap/hex_transform.hpp"
#include "hexlap/invariants.hpp"
#include "hexlap/iterative_spectrum.hpp"
#include "hexlap/report.hpp"
#include "hexlap/spectral_oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace hexlap {

using json = nlohmann::ordered_json;

std::string_view status_name(RecordStatus s) {
    switch (s) {
    case RecordStatus::Match: return "match";
    case RecordStatus::FlaggedDiscrepancy: return "flagged-discrepancy";
    case RecordStatus::Mismatch: return "mismatch";
    }
    return "unknown";
}

std::size_t ValidationReport::count(RecordStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const ValidationRecord& r) { return r.status == s; }));
}

// ---------------------------------------------------------------------------
// Printed numbers

PrintedValue parse_printed(std::string_view text, int significant) {
    PrintedValue out;
    out.text = std::string(text);

    std::string_view mantissa = text;
    int exponent = 0;
    for (std::string_view marker : {std::string_view("x10^"), std::string_view("e")}) {
        const auto pos = text.find(marker);
        if (pos != std::string_view::npos) {
            mantissa = text.substr(0, pos);
            exponent = std::stoi(std::string(text.substr(pos + marker.size())));
            break;
        }
    }

    std::string digits;
    int frac_digits = 0;
    bool after_dot = false;
    for (char c : mantissa) {
        if (c == '.') {
            after_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (after_dot) ++frac_digits;
        } else {
            throw InputError(InputError::Kind::Malformed, "not a printed number: " + std::string(text));
        }
    }
    if (digits.empty()) throw InputError(InputError::Kind::Malformed, "not a printed number: " + std::string(text));
    exponent -= frac_digits;

    const auto first = digits.find_first_not_of('0');
    const std::size_t sig = first == std::string::npos ? 0 : digits.size() - first;
    std::size_t excess = sig > static_cast<std::size_t>(significant) ? sig - significant : 0;
    while (excess > 0 && digits.size() > 1 && digits.back() == '0') {
        digits.pop_back();
        ++exponent;
        --excess;
    }
    // A leading zero would make the string parse as octal.
    const auto lead = digits.find_first_not_of('0');
    out.digits = lead == std::string::npos ? BigInt(0) : BigInt(digits.substr(lead));
    out.exponent = exponent;
    return out;
}

namespace {

Rational pow10(int e) {
    const Rational ten_e = pow_rat(10, static_cast<unsigned>(std::abs(e)));
    return e >= 0 ? ten_e : 1 / ten_e;
}

} // namespace

bool matches_printed(const Rational& value, const PrintedValue& printed, double ulps) {
    const Rational unit = pow10(printed.exponent);
    const Rational target = Rational(printed.digits) * unit;
    Rational diff = value - target;
    if (diff < 0) diff = -diff;
    return diff <= Rational(ulps) * unit;
}

Rational table_seed_kemeny() { return Rational(8) / 9; }

// Kf' = 2 E K with E(C6) = 6.
Rational table_seed_kirchhoff() { return 12 * table_seed_kemeny(); }

Graph named_graph(std::string_view id) {
    if (id.size() < 2) throw InputError(InputError::Kind::BadParameter, "unknown graph id");
    const std::size_t m = std::stoul(std::string(id.substr(1)));
    switch (id[0]) {
    case 'C': return generate(GraphKind::Cycle, m);
    case 'P': return generate(GraphKind::Path, m);
    case 'K': return generate(GraphKind::Complete, m);
    default: throw InputError(InputError::Kind::BadParameter, "unknown graph id " + std::string(id));
    }
}

namespace {

std::string rational_str(const Rational& r) { return format_double(to_double(r)); }

std::string sci(const BigInt& v) {
    const std::string d = v.str();
    if (d.size() <= 16) return d;
    return d.substr(0, 1) + "." + d.substr(1, 14) + "e" + std::to_string(d.size() - 1);
}

void sort_records(ValidationReport& r) {
    std::sort(r.records.begin(), r.records.end(),
              [](const ValidationRecord& a, const ValidationRecord& b) { return a.id < b.id; });
}

std::string level_id(unsigned k, unsigned n) { return "k" + std::to_string(k) + "/n" + std::to_string(n); }

// Entries of the published tables that disagree with the formulas they were
// computed from, with the reason.
const std::map<std::string, std::string>& known_discrepancies() {
    static const std::map<std::string, std::string> manifest = {
        {"table1/C6/k1/n0/kirchhoff/oracle",
         "printed base value 10.67 is not Kf'(C6); the normalized Laplacian spectrum of C6 gives 2*6*35/6 = 70"},
        {"table1/C6/k2/n0/kirchhoff/oracle",
         "printed base value 10.67 is not Kf'(C6); the normalized Laplacian spectrum of C6 gives 2*6*35/6 = 70"},
        {"table2/C6/k1/n0/kemeny/oracle",
         "printed base value 0.89 is not K(C6); the normalized Laplacian spectrum {0,1/2,1/2,3/2,3/2,2} gives 35/6"},
        {"table2/C6/k2/n0/kemeny/oracle",
         "printed base value 0.89 is not K(C6); the normalized Laplacian spectrum {0,1/2,1/2,3/2,3/2,2} gives 35/6"},
        {"table3/C6/k1/n1/tau/closed-form",
         "printed 241943 contradicts the closed form 5^1*6^5*6 = 233280, which the Matrix-Tree count of the "
         "constructed graph confirms"},
        {"table3/C6/k2/n1/tau/closed-form",
         "printed 8426691368 contradicts the closed form 7^5*5^7*6 = 7878281250, which the Matrix-Tree count of "
         "the constructed graph confirms"},
        {"table3/C6/k1/n2/tau/closed-form",
         "printed 6.71512031151729e32 differs from the exact 5^8*6^35 = 6.715120311517276e32 in the last printed "
         "digit; the two agree to 13 significant digits"},
        {"table3/C6/k2/n2/tau/closed-form",
         "printed 8.04003508846179e109 differs from the exact 7^58*5^86*6 = 8.040035088461682e109 in the last two "
         "printed digits; the two agree to 13 significant digits"},
    };
    return manifest;
}

// `flaggable` bounds how far a listed entry may drift before it counts as an
// ordinary mismatch again.
void settle(ValidationRecord& rec, bool agrees, bool flaggable = true) {
    if (agrees) {
        rec.status = RecordStatus::Match;
        return;
    }
    const auto& manifest = known_discrepancies();
    const auto it = manifest.find(rec.id);
    if (it != manifest.end() && flaggable) {
        rec.status = RecordStatus::FlaggedDiscrepancy;
        rec.note = it->second;
    } else {
        rec.status = RecordStatus::Mismatch;
    }
}

struct TableRow {
    unsigned k;
    unsigned n;
    const char* printed;
};

// Kemeny's constant of H^k_n(C6) as published.
constexpr TableRow kKemenyTable[] = {
    {1, 0, "0.89"},       {1, 1, "42.44"},       {1, 2, "458.22"},       {1, 3, "3785.11"},
    {1, 4, "27907.56"},   {1, 5, "193447.78"},   {1, 6, "1290716.89"},   {1, 7, "8394470.44"},
    {1, 8, "53617686.22"},
    {2, 0, "0.89"},       {2, 1, "87.92"},       {2, 2, "1622.01"},      {2, 3, "23028.76"},
    {2, 4, "294109.21"},  {2, 5, "3555757.33"},  {2, 6, "41632025.66"},  {2, 7, "477742069.94"},
    {2, 8, "5410653999.62"},
};

// Multiplicative degree-Kirchhoff index of H^k_n(C6) as published.
constexpr TableRow kKirchhoffTable[] = {
    {1, 0, "10.67"},           {1, 1, "3056"},
    {1, 2, "197952"},          {1, 3, "9811008"},
    {1, 4, "434018304"},       {1, 5, "18050999040"},
    {1, 6, "722636246016"},    {1, 7, "28198973740032"},
    {1, 8, "1080685483941890"},
    {2, 0, "10.67"},           {2, 1, "11605.33"},
    {2, 2, "2355164.95"},      {2, 3, "367815398.31"},
    {2, 4, "51672635965.05"},  {2, 5, "6871899281276.09"},
    {2, 6, "885044076026391"}, {2, 7, "11171809693029x10^4"},
    {2, 8, "139178608420502x10^5"},
};

// Spanning-tree counts of H^k_n(C6) as published.
constexpr TableRow kTauTable[] = {
    {1, 0, "6"}, {1, 1, "241943"},     {1, 2, "6.71512031151729e32"},
    {2, 0, "6"}, {2, 1, "8426691368"}, {2, 2, "8.04003508846179e109"},
};

ValidationRecord table_record(const char* table, const char* quantity, const char* method, unsigned k, unsigned n) {
    ValidationRecord rec;
    rec.id = std::string(table) + "/C6/" + level_id(k, n) + "/" + quantity + "/" + method;
    rec.graph = "C6";
    rec.k = k;
    rec.n = n;
    rec.quantity = quantity;
    rec.method = method;
    rec.reference_source = std::string("published ") + (std::string(table) == "table1"   ? "Table 1"
                                                         : std::string(table) == "table2" ? "Table 2"
                                                                                          : "Table 3");
    return rec;
}

} // namespace

ValidationReport validate_tables() {
    ValidationReport report;
    report.mode = "tables";

    const Graph c6 = generate(GraphKind::Cycle, 6);
    const BigInt n0 = c6.num_vertices();
    const BigInt e0 = c6.num_edges();
    const double oracle_k0 = kemeny_from_spectrum(spectrum_oracle(c6));
    const BigInt tau0 = spanning_trees_matrix_tree(c6);

    for (const auto& row : kKemenyTable) {
        const PrintedValue printed = parse_printed(row.printed);
        ValidationRecord rec = table_record("table2", "kemeny", "closed-form", row.k, row.n);
        const Rational v = kemeny_closed_k_exact(table_seed_kemeny(), n0, e0, row.k, row.n);
        rec.value = rational_str(v);
        rec.reference = printed.text;
        rec.note = "seeded with K0 = 8/9 (prints as 0.89)";
        settle(rec, matches_printed(v, printed));
        report.records.push_back(std::move(rec));

        if (row.n == 0) {
            ValidationRecord base = table_record("table2", "kemeny", "oracle", row.k, 0);
            base.value = format_double(oracle_k0);
            base.reference = printed.text;
            settle(base, matches_printed(Rational(oracle_k0), printed));
            report.records.push_back(std::move(base));
        }
    }

    for (const auto& row : kKirchhoffTable) {
        const PrintedValue printed = parse_printed(row.printed);
        ValidationRecord rec = table_record("table1", "kirchhoff", "closed-form", row.k, row.n);
        const Rational v = kirchhoff_closed_k_exact(table_seed_kirchhoff(), n0, e0, row.k, row.n);
        rec.value = rational_str(v);
        rec.reference = printed.text;
        rec.note = "seeded with Kf'0 = 32/3 (prints as 10.67)";
        // The largest k=1 entry is printed to 15 significant digits with its
        // own rounding; allow one unit in the last printed place.
        const double ulps = (row.k == 1 && row.n == 8) ? 1.0 : 0.5;
        settle(rec, matches_printed(v, printed, ulps));
        report.records.push_back(std::move(rec));

        if (row.n == 0) {
            ValidationRecord base = table_record("table1", "kirchhoff", "oracle", row.k, 0);
            const double kf = kirchhoff_from_kemeny(e0, oracle_k0);
            base.value = format_double(kf);
            base.reference = printed.text;
            settle(base, matches_printed(Rational(kf), printed));
            report.records.push_back(std::move(base));
        }
    }

    for (const auto& row : kTauTable) {
        const PrintedValue printed = parse_printed(row.printed);
        const BigExponentProduct tau = tau_closed_k(tau0, n0, e0, row.k, row.n);
        const BigInt exact = tau.value();

        ValidationRecord rec = table_record("table3", "tau", "closed-form", row.k, row.n);
        rec.value = exact.str();
        rec.reference = printed.text;
        // Scientific entries carry rounding noise past the 13th digit.
        const Rational target = Rational(printed.digits) * pow10(printed.exponent);
        const bool near = exact > 0 && abs(Rational(exact) - target) <= Rational(1, 10'000'000'000'000) * exact;
        const bool scientific = printed.exponent > 0;
        settle(rec, matches_printed(Rational(exact), printed), !scientific || near);
        if (rec.note.empty()) rec.note = tau.to_string();
        report.records.push_back(std::move(rec));

        // The Matrix-Tree theorem arbitrates wherever the graph is small.
        if (row.n <= 1) {
            ValidationRecord arb = table_record("table3", "tau", "oracle", row.k, row.n);
            arb.reference_source = "closed form";
            const BigInt counted = spanning_trees_matrix_tree(hexagonal_iter(c6, {row.k, row.n}));
            arb.value = counted.str();
            arb.reference = exact.str();
            arb.note = "Matrix-Tree count of the constructed graph";
            settle(arb, counted == exact);
            report.records.push_back(std::move(arb));
        }
    }

    sort_records(report);
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Instance {
    const char* graph;
    unsigned k;
    unsigned n;
};

constexpr Instance kSpectrumInstances[] = {
    {"K2", 1, 1}, {"K2", 1, 2}, {"K2", 2, 1}, {"K2", 3, 1}, {"K2", 2, 2},
    {"P3", 1, 1}, {"P3", 1, 2}, {"P3", 2, 1}, {"P3", 3, 1}, {"P3", 2, 2},
    {"C5", 1, 1}, {"C5", 1, 2}, {"C5", 2, 1}, {"C5", 3, 1},
    {"C6", 1, 1}, {"C6", 1, 2}, {"C6", 2, 1}, {"C6", 3, 1},
    {"K4", 1, 1}, {"K4", 1, 2}, {"K4", 2, 1}, {"K4", 3, 1},
};

constexpr Instance kInvariantInstances[] = {
    {"C6", 1, 1}, {"C6", 1, 2}, {"C6", 2, 1}, {"P3", 1, 1},
    {"P3", 1, 2}, {"P3", 2, 1}, {"K4", 1, 1}, {"C5", 1, 1},
};

constexpr double kSpectrumTolerance = 1e-7;
constexpr double kRelativeTolerance = 1e-6;
constexpr double kLog10Tolerance = 1e-6;

ValidationRecord oracle_record(const Instance& in, const char* quantity, const char* method) {
    ValidationRecord rec;
    rec.id = std::string("oracle/") + in.graph + "/" + level_id(in.k, in.n) + "/" + quantity + "/" + method;
    rec.graph = in.graph;
    rec.k = in.k;
    rec.n = in.n;
    rec.quantity = quantity;
    rec.method = method;
    return rec;
}

bool close_relative(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

} // namespace

ValidationReport validate_oracle() {
    ValidationReport report;
    report.mode = "oracle";

    for (const auto& in : kSpectrumInstances) {
        const Graph g = named_graph(in.graph);
        const TransformParams p{in.k, in.n};
        const Spectrum iterative = spectrum_n(g, p);
        const Spectrum oracle = spectrum_oracle(hexagonal_iter(g, p));
        const MatchReport m = compare_spectra(iterative, oracle, kSpectrumTolerance);

        ValidationRecord rec = oracle_record(in, "spectrum", "iterative");
        rec.value = "max |diff| " + format_double(m.max_discrepancy) + ", dim " + std::to_string(iterative.total_dim);
        rec.reference = "dense eigensolver, dim " + std::to_string(oracle.total_dim);
        rec.reference_source = "oracle";
        rec.note = "multiplicity mismatches: " + std::to_string(m.multiplicity_mismatches);
        settle(rec, m.pass && m.multiplicity_mismatches == 0);
        report.records.push_back(std::move(rec));
    }

    for (const auto& in : kInvariantInstances) {
        const Graph g = named_graph(in.graph);
        const TransformParams p{in.k, in.n};
        const BigInt n0 = g.num_vertices();
        const BigInt e0 = g.num_edges();
        const Graph h = hexagonal_iter(g, p);

        const double k0 = kemeny_from_spectrum(spectrum_oracle(g));
        const double k_closed = kemeny_closed_k(k0, n0, e0, in.k, in.n);
        const Spectrum s = spectrum_n(g, p);
        const double k_spectral = kemeny_from_spectrum(s);
        const double k_oracle = kemeny_from_spectrum(spectrum_oracle(h));

        ValidationRecord ks = oracle_record(in, "kemeny", "spectrum");
        ks.value = format_double(k_spectral);
        ks.reference = format_double(k_closed);
        ks.reference_source = "closed form seeded with the oracle K(G)";
        settle(ks, close_relative(k_spectral, k_closed, kRelativeTolerance));
        report.records.push_back(std::move(ks));

        ValidationRecord ko = oracle_record(in, "kemeny", "oracle");
        ko.value = format_double(k_oracle);
        ko.reference = format_double(k_closed);
        ko.reference_source = "closed form seeded with the oracle K(G)";
        settle(ko, close_relative(k_oracle, k_closed, kRelativeTolerance));
        report.records.push_back(std::move(ko));

        const double kf_closed = kirchhoff_closed_k(kirchhoff_from_kemeny(e0, k0), n0, e0, in.k, in.n);
        const double kf_spectral = kirchhoff_from_kemeny(h.num_edges(), k_spectral);
        ValidationRecord kf = oracle_record(in, "kirchhoff", "spectrum");
        kf.value = format_double(kf_spectral);
        kf.reference = format_double(kf_closed);
        kf.reference_source = "closed form seeded with the oracle Kf'(G)";
        settle(kf, close_relative(kf_spectral, kf_closed, kRelativeTolerance));
        report.records.push_back(std::move(kf));

        const BigInt counted = spanning_trees_matrix_tree(h);
        const BigExponentProduct closed = tau_closed_k(spanning_trees_matrix_tree(g), n0, e0, in.k, in.n);
        const BigInt closed_value = closed.value();

        ValidationRecord te = oracle_record(in, "tau", "closed-form");
        te.value = closed_value.str();
        te.reference = counted.str();
        te.reference_source = "Matrix-Tree theorem on the constructed graph";
        te.note = closed.to_string();
        settle(te, closed_value == counted);
        report.records.push_back(std::move(te));

        const double log_spectral = tau_log10_from_spectrum(s, degree_product_log10_iterated(g, p));
        ValidationRecord tl = oracle_record(in, "tau-log10", "spectrum");
        tl.value = format_double(log_spectral);
        tl.reference = format_double(log10_big(counted));
        tl.reference_source = "Matrix-Tree theorem on the constructed graph";
        tl.note = "approx " + sci(counted);
        settle(tl, std::abs(log_spectral - log10_big(counted)) <= kLog10Tolerance);
        report.records.push_back(std::move(tl));
    }

    sort_records(report);
    return report;
}

// ---------------------------------------------------------------------------

std::string validation_to_json(const ValidationReport& r) {
    json records = json::array();
    for (const auto& rec : r.records) {
        json j;
        j["id"] = rec.id;
        j["graph"] = rec.graph;
        j["k"] = rec.k;
        j["n"] = rec.n;
        j["quantity"] = rec.quantity;
        j["method"] = rec.method;
        j["value"] = rec.value;
        j["reference"] = rec.reference;
        j["reference_source"] = rec.reference_source;
        j["status"] = std::string(status_name(rec.status));
        j["note"] = rec.note;
        records.push_back(std::move(j));
    }
    json out;
    out["mode"] = r.mode;
    out["records"] = std::move(records);
    out["summary"] = {
        {"total", r.records.size()},
        {"match", r.count(RecordStatus::Match)},
        {"flagged-discrepancy", r.count(RecordStatus::FlaggedDiscrepancy)},
        {"mismatch", r.count(RecordStatus::Mismatch)},
    };
    return out.dump(2) + "\n";
}

std::string validation_to_text(const ValidationReport& r) {
    std::ostringstream os;
    for (const auto& rec : r.records) {
        os << status_name(rec.status) << "  " << rec.id << "  value=" << rec.value << "  reference=" << rec.reference;
        if (rec.status != RecordStatus::Match && !rec.note.empty()) os << "  (" << rec.note << ")";
        os << '\n';
    }
    os << "summary: " << r.records.size() << " records, " << r.count(RecordStatus::Match) << " match, "
       << r.count(RecordStatus::FlaggedDiscrepancy) << " flagged, " << r.count(RecordStatus::Mismatch)
       << " mismatch\n";
    return os.str();
}

} // namespace hexlap
