#pragma once

#include "zpk/formulas.hpp"
#include "zpk/ring.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zpk {

/// Default cap on ring order for the isomorphism backtracking search.
inline constexpr int kDefaultIsoCap = 16;

struct CatalogEntry {
    std::string name;
    RingExpr expr;
    long long order = 0;
    bool expected_local = false;
    std::optional<bool> expected_zsq;
};

/// The curated catalog filtered by order: the named small rings (every local
/// ring of order <= 9 reachable with these constructors) plus all pairwise
/// direct products that fit. Sorted by (order, name). Curated, not
/// enumerated: classification checks are relative to this list.
std::vector<CatalogEntry> builtin_catalog(long long max_order);

/// One entry per line: a whitespace-free name, whitespace, then a ring
/// expression. '#' starts a comment. Expected flags are computed on load.
std::vector<CatalogEntry> load_catalog(std::istream& in, long long cap = kDefaultMaterializeCap);

/// True iff a bijection preserving both tables exists. Fixes 0 -> 0 and
/// 1 -> 1, then backtracks over images of additive generators, pruning by
/// additive order, annihilator size, and nilpotency index. Cheap invariant
/// fingerprints reject most non-isomorphic pairs without searching.
bool iso_check(const TableRing& r1, const TableRing& r2, int cap = kDefaultIsoCap);

struct BoundEntry {
    std::string id; // "t1.lower", "t4.explicit", "bk", ...
    bool is_lower = false;
    Rational bound;
    bool holds = false;
    bool attained = false;
};

struct EqualityCondition {
    std::string name;
    bool structural = false; // computed structural flag
    bool attained = false;   // observed bound equality
    bool ok = false;
};

struct VerificationReport {
    std::string ring;
    int k = 2;
    Rational zp;
    bool field = false, local = false, zsq_zero = false, all_ann_prime = false;
    std::vector<BoundEntry> bounds;
    std::vector<EqualityCondition> conditions;
    std::vector<std::string> notes;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Evaluates every applicable bound for the ring at this k, checks the
/// sandwich ordering and every sharpness condition. Failures are report
/// content, not errors.
VerificationReport verify_bounds(const TableRing& r, int k);

struct ClassificationReport {
    int k = 2;
    Rational threshold; // bk(2, 3, k)
    std::vector<std::string> members; // one representative per iso class
    size_t count = 0;
    size_t expected_count = 0;
    std::vector<std::string> expected;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Local catalog rings with zp_k >= bk(2,3,k), deduplicated up to
/// isomorphism, compared against the expected membership for this k; also
/// checks the gap above bk(3,1,k) (k <= 3) / bk(2,2,k) (k >= 4) and the
/// attainment of those two values.
ClassificationReport verify_classification(int k, const std::vector<CatalogEntry>& catalog,
                                           int iso_cap = kDefaultIsoCap,
                                           long long cap = kDefaultMaterializeCap);

struct PrimeConstraintReport {
    int k = 2;
    Rational threshold; // (2^k - k - 1)/2^k
    std::vector<long long> allowed_primes;
    std::vector<long long> computed_primes;
    std::vector<std::string> qualifying; // catalog rings above the threshold
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Every local catalog ring above the threshold must have its prime in the
/// allowed set for this k; the defining inequality ((p-1)/p)^k <= (k+1)/2^k
/// must pick out exactly that set of primes.
PrimeConstraintReport verify_prime_constraint(int k, const std::vector<CatalogEntry>& catalog,
                                              long long cap = kDefaultMaterializeCap);

struct GlobalMaxReport {
    int k = 2;
    Rational bound; // bk(2, 1, k) = (2^k - 1)/2^k
    Rational observed_max;
    std::vector<std::string> attainers;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// zp_k <= (2^k - 1)/2^k over the whole catalog, attained exactly by rings
/// isomorphic to Z_2.
GlobalMaxReport verify_global_max(int k, const std::vector<CatalogEntry>& catalog,
                                  long long cap = kDefaultMaterializeCap,
                                  int iso_cap = kDefaultIsoCap);

struct M2Report {
    std::vector<std::string> checked;
    std::vector<std::string> skipped; // order beyond the iso cap
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// For local catalog rings of order p^a with maximal ideal of size p^{a-1}:
/// the maximal ideal squares to zero iff the ring is isomorphic to the
/// idealization of (Z_p)^{a-1} in Z_p or of (Z_p)^{a-2} in Z_{p^2}.
M2Report verify_m2_classification(const std::vector<CatalogEntry>& catalog,
                                  int iso_cap = kDefaultIsoCap,
                                  long long cap = kDefaultMaterializeCap);

struct EntryCheck {
    std::string name;
    std::vector<std::string> violations;
    bool pass() const { return violations.empty(); }
};

/// Structural self-checks for one entry: ring axioms, curated flags vs
/// computed flags, and the idealization zero-divisor prediction.
EntryCheck check_entry(const CatalogEntry& entry, long long cap = kDefaultMaterializeCap);

/// The reference forms whose zp_k attains bk(p, alpha, k): the idealization
/// of (Z_p)^{alpha-1} in Z_p and, for alpha >= 2, of (Z_p)^{alpha-2} in
/// Z_{p^2}.
std::vector<RingExpr> sharp_local_forms(long long p, int alpha);

struct RegressionRow {
    std::string ring;
    int k;
    Rational expected;
};

/// The fixed table of known-good zp_k values the `table` command reproduces.
std::vector<RegressionRow> regression_table();

} // namespace zpk
