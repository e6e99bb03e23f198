#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibsum/expr.hpp"
#include "fibsum/rat.hpp"
#include "fibsum/sequence.hpp"

namespace fibsum {

// One verified summation identity, stored as data.
//
// `lhs` and `rhs` are expression strings in the grammar of expr.hpp.  `vars`
// maps each free symbol to the inclusive integer range it is tested over by
// default.  `constraint` is an expression over the same symbols; a grid point
// is in-domain exactly when the constraint evaluates to a nonzero value (the
// constant "1" means unconditional).  `seeds` pins specific sequence letters
// (only G, H, K may be pinned); letters left unpinned range over
// standard_seeds() during verification, while F and L always denote the
// Fibonacci and Lucas sequences.  `id` is of the form SECTION.ORDINAL and
// orders the catalog; `note` is free-form documentation.
struct IdentityRecord {
    std::string id;
    std::string lhs;
    std::string rhs;
    std::map<std::string, std::pair<long long, long long>> vars;
    std::string constraint = "1";
    std::map<char, Seed> seeds;
    std::string note;

    bool operator==(const IdentityRecord&) const = default;
};

// Serialization.  The JSON form is a top-level array of objects with exactly
// the keys {constraint, id, lhs, note, rhs, seeds, vars}; expression fields
// are canonicalized (parsed and re-printed) on save, so saving a catalog that
// was just loaded reproduces the file byte for byte.
//
// catalog_from_json / load_catalog validate every record and throw
// SchemaError naming the offending record and field: malformed structure,
// expression text that does not parse, a free symbol missing from `vars`, a
// declared variable that never occurs, a duplicate or malformed id, or a
// pinned letter outside {G, H, K}.  load_catalog throws IoError when the file
// cannot be read; save_catalog throws IoError when it cannot be written.
std::string catalog_to_json(const std::vector<IdentityRecord>& records);
std::vector<IdentityRecord> catalog_from_json(const std::string& text);
void save_catalog(const std::vector<IdentityRecord>& records, const std::string& path);
std::vector<IdentityRecord> load_catalog(const std::string& path);

// Verification report for one record.  `checked` counts in-domain grid points
// confirmed equal, `skipped` counts points excluded by the constraint.  When
// a point fails, `passed` is false and `first_failure` describes the
// lexicographically smallest failing point (variables in name order, then
// pinned-letter seed assignments) together with both values.
struct RecordReport {
    std::string id;
    long long checked = 0;
    long long skipped = 0;
    bool passed = true;
    std::string first_failure;
};

struct VerifyReport {
    std::vector<RecordReport> records;  // ordered by record id

    bool all_passed() const;
    long long total_checked() const;
};

// Verifies LHS == RHS by brute-force evaluation at every in-domain grid
// point.  With gridScale >= 0 every variable named "n" ranges over
// [0, 2*gridScale + 4] and every other variable over [-gridScale, gridScale];
// with gridScale < 0 each record's own declared ranges are used.  Unpinned
// sequence letters among G, H, K range independently over standard_seeds().
// Records are processed in parallel (see parallel.hpp); the report is
// deterministic.
VerifyReport catalog_verify(const std::vector<IdentityRecord>& catalog, int gridScale);

// Looks up a record by id.  Throws UnknownRecord when absent.
const IdentityRecord& find_record(const std::vector<IdentityRecord>& catalog,
                                  const std::string& id);

// Evaluates the closed form (RHS) of a binomial-coefficient record, i.e. one
// whose id lies in section 13 or 14; any other id throws UnknownRecord.
// `params` supplies the variable bindings; seeds pinned by the record
// override those in `params`.
Rat binom_sum_closed(const IdentityRecord& record, const EvalContext& params);

}  // namespace fibsum
