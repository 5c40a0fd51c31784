/// @file audit.hpp
/// @brief Identity catalog, direct-computation oracle, exact comparison and
///        verdict reporting.
///
/// Every catalog entry pairs a left-hand side built by direct computation
/// (explicit operator application or explicit weighted summation of Hahn
/// polynomials) with a right-hand side built from the printed closed form
/// (Pochhammer and basic-hypergeometric compositions). The verdict is
/// CONFIRMED only when every coefficient up to the truncation order matches
/// exactly; a mismatch is REFUTED together with the first offending
/// coefficient; a vanishing Pochhammer denominator while constructing a side
/// is UNDEFINED; policy-skipped entries are SKIPPED.
#pragma once

#include "qaudit/qops.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qaudit {

/// Integer parameter assignment for one verification run. Entries use the
/// slots they declare; unused slots stay empty.
struct Params {
    std::optional<int> n;
    std::optional<int> k;

    std::string to_string() const;
    friend bool operator==(const Params& a, const Params& b) { return a.n == b.n && a.k == b.k; }
    friend bool operator<(const Params& a, const Params& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.k < b.k;
    }
};

enum class Status { CONFIRMED, REFUTED, UNDEFINED, SKIPPED };

std::string to_string(Status s);
std::optional<Status> status_from_string(const std::string& s);

struct Witness {
    MultiIndex index;
    std::string index_text; // monomial form, e.g. "a*x^2"
    std::string lhs_coeff;
    std::string rhs_coeff;
};

struct Verdict {
    Status status = Status::SKIPPED;
    std::optional<Witness> witness;
    std::string note;
    /// Numeric redundancy: CONFIRMED coefficients re-checked by exact
    /// rational evaluation at a fixed q value.
    bool q_check_passed = false;
};

struct EntryResult {
    std::string id;
    Params params;
    int order = 0;
    Verdict verdict;
    std::optional<Verdict> corrected;
    double elapsed_ms = 0.0;
};

/// One catalog entry: builders are pure functions (params, order) -> series.
struct IdentitySpec {
    using Builder = std::function<MultiSeries(const Params&, int)>;
    using GridFn = std::function<std::vector<Params>(const std::vector<int>& n_values,
                                                     const std::vector<int>& k_values)>;

    std::string id;
    std::string description;
    std::string anchor; // verbatim quote locating the source statement
    std::vector<std::string> var_names;
    GridFn grid;
    Builder lhs;
    Builder rhs;
    std::optional<Builder> corrected_rhs;
    std::string note;  // static annotation merged into every verdict
    bool skip = false; // policy-skipped entries
};

/// The fixed catalog: I1-I6, T1-T13, C1-C3 (22 entries).
const std::vector<IdentitySpec>& catalog();

/// Entry lookup; throws std::invalid_argument for unknown ids.
const IdentitySpec& catalog_entry(const std::string& id);

/// Natural id order: C1 < C2 < ... < I1 < ... < T2 < T10 (prefix, then number).
bool id_less(const std::string& a, const std::string& b);

struct RunConfig {
    int order = 8;
    std::vector<std::string> ids;            // empty = whole catalog
    std::vector<int> n_values = {1, 2, 3};
    std::vector<int> k_values = {1, 2, 3};
    Rational q_check = Rational(1, 3);
};

struct ReportSummary {
    int total = 0;
    int confirmed = 0;
    int refuted = 0;
    int undefined = 0;
    int skipped = 0;
};

struct VerificationReport {
    RunConfig config;
    std::string timestamp; // ISO-8601 UTC
    std::vector<EntryResult> entries;
    ReportSummary summary() const;
};

/// Verifies one entry at one parameter assignment.
/// Throws std::invalid_argument for order < 2.
EntryResult verify(const IdentitySpec& spec, const Params& params, int order,
                   const Rational& q_check);

/// Runs every configured entry over its grid; the report is sorted by
/// (id, params) and is deterministic across runs.
VerificationReport verify_all(const RunConfig& config);

} // namespace qaudit
