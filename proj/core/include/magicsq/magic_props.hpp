#pragma once

#include <cstdint>
#include <optional>

#include "magicsq/int_square.hpp"

namespace magicsq {

/// Structural verdicts for one square. summation_index is present iff the
/// square is at least semi-magic; regular_constant iff it is regular.
struct PropertyReport {
    int order = 0;
    std::optional<std::int64_t> summation_index;
    bool is_semi_magic = false;
    bool is_magic = false;
    bool is_natural = false;
    bool is_regular = false;
    bool is_pandiagonal = false;
    std::optional<std::int64_t> regular_constant;
};

/// mu_n = n(n^2-1)/2, the summation index of a natural order-n square.
std::int64_t magic_sum(int n);

/// Row/column sums (semi-magic) and both main diagonals (magic).
/// Only the semi-magic/magic fields and summation_index are filled.
PropertyReport check_magic(const IntSquare& m);

/// True iff the entries are exactly {0, 1, ..., n^2-1}.
bool check_natural(const IntSquare& m);

struct RegularReport {
    bool is_regular = false;
    std::optional<std::int64_t> constant; // 2*mu/n when regular
};

/// M + R M R = (2 mu / n) E, entrywise. Returns false (not an error) for
/// non-magic input so predicates compose into one report.
RegularReport check_regular(const IntSquare& m);

/// Magic plus all broken diagonals in both wrap directions summing to mu:
/// for every offset k, sum_i M(i,(i+k) mod n) = mu and sum_i M(i,(k-i) mod n) = mu.
bool check_pandiagonal(const IntSquare& m);

/// True iff the multiset of entry pairs (A(i,j), B(i,j)) has no duplicates.
bool check_orthogonal_pair(const IntSquare& a, const IntSquare& b);

struct CommuteReport {
    bool commutes = false;
    /// Present when AB = c * E; c = mu_m * mu_n for compound pairs.
    std::optional<std::int64_t> product_scalar;
};

/// Exact commutation check; also detects a scalar-times-ones product.
CommuteReport check_commute(const IntSquare& a, const IntSquare& b);

/// Full report: all predicates composed.
PropertyReport check_properties(const IntSquare& m);

} // namespace magicsq
