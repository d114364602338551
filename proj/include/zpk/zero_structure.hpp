#pragma once

#include "zpk/formulas.hpp"
#include "zpk/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zpk {

/// Z(R) = {x : xy = 0 for some y != 0}, sorted; contains 0.
std::vector<int> zero_divisors(const TableRing& r);

/// Ann(x) = {y : xy = 0}, sorted.
std::vector<int> annihilator(const TableRing& r, int x);

bool is_field(const TableRing& r);

/// Z(R) additively closed; equivalent to R having a unique maximal ideal
/// for a finite commutative ring with identity.
bool is_local(const TableRing& r);

/// Z(R) when local; throws DomainError on a non-local ring.
std::vector<int> maximal_ideal(const TableRing& r);

/// True iff xy = 0 for all x, y in Z(R).
bool zsquare_is_zero(const TableRing& r);

/// True iff Ann(x) is a prime ideal, checked over all of R^2.
/// Requires x to be a nonzero zero divisor (DomainError otherwise).
bool ann_is_prime(const TableRing& r, int x);

struct IdealizationZeroSet {
    std::vector<int> predicted; // (Z(base) u Z(module)) x module, as R-indices
    bool matches;               // equals the direct zero-divisor scan
};

/// Predicts Z(R) of an idealization from its construction and compares with
/// the direct scan. DomainError when r was not built as an idealization.
IdealizationZeroSet idealization_zero_set(const TableRing& r);

struct ZeroStructureReport {
    std::string ring;
    std::vector<int> zset;
    std::map<int, int> ann_sizes;               // x != 0 in Z(R) -> |Ann(x)|
    bool field = false;
    bool local = false;
    std::optional<std::vector<int>> maximal;    // present iff local
    bool zsq_zero = false;
    std::map<int, bool> prime_ann;              // x != 0 in Z(R) -> Ann(x) prime
};

ZeroStructureReport analyze(const TableRing& r);

/// Assembles the statistics every bound is a function of; |Ann_{k-1}(R)|
/// comes from the counting engine.
ZeroProfile zero_profile(const TableRing& r, int k);

} // namespace zpk
