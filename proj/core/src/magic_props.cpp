#include "magicsq/magic_props.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace magicsq {

std::int64_t magic_sum(int n) {
    if (n < 1) throw PreconditionError("magic_sum: n must be >= 1");
    const std::int64_t nn = n;
    // n(n^2-1) is always even: n and n^2-1 have opposite parity.
    return checked_mul(nn, checked_sub(checked_mul(nn, nn), 1)) / 2;
}

PropertyReport check_magic(const IntSquare& m) {
    const int n = m.order();
    PropertyReport report;
    report.order = n;

    std::int64_t common = 0;
    for (int j = 0; j < n; ++j) common = checked_add(common, m(0, j));

    bool semi = true;
    for (int i = 0; i < n && semi; ++i) {
        std::int64_t row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
            row = checked_add(row, m(i, j));
            col = checked_add(col, m(j, i));
        }
        semi = (row == common) && (col == common);
    }
    report.is_semi_magic = semi;
    if (!semi) return report;

    report.summation_index = common;
    std::int64_t diag = 0, cross = 0;
    for (int i = 0; i < n; ++i) {
        diag = checked_add(diag, m(i, i));
        cross = checked_add(cross, m(i, n - 1 - i));
    }
    report.is_magic = (diag == common) && (cross == common);
    return report;
}

bool check_natural(const IntSquare& m) {
    const std::int64_t count = static_cast<std::int64_t>(m.order()) * m.order();
    std::vector<std::int64_t> sorted(m.entries().begin(), m.entries().end());
    std::sort(sorted.begin(), sorted.end());
    for (std::int64_t i = 0; i < count; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

RegularReport check_regular(const IntSquare& m) {
    const auto magic = check_magic(m);
    if (!magic.is_magic) return {};

    const int n = m.order();
    const std::int64_t mu = *magic.summation_index;
    // Compare n*(M + RMR) with 2*mu*E to stay in exact integers even when
    // 2*mu/n is fractional (in which case regularity cannot hold).
    const std::int64_t target = checked_mul(2, mu);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::int64_t pair = checked_add(m(i, j), m(n - 1 - i, n - 1 - j));
            if (checked_mul(pair, n) != target) return {};
        }
    return {true, target / n};
}

bool check_pandiagonal(const IntSquare& m) {
    const auto magic = check_magic(m);
    if (!magic.is_magic) return false;

    const int n = m.order();
    const std::int64_t mu = *magic.summation_index;
    for (int k = 0; k < n; ++k) {
        std::int64_t down = 0, up = 0;
        for (int i = 0; i < n; ++i) {
            down = checked_add(down, m(i, (i + k) % n));
            up = checked_add(up, m(i, ((k - i) % n + n) % n));
        }
        if (down != mu || up != mu) return false;
    }
    return true;
}

bool check_orthogonal_pair(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw ShapeError("check_orthogonal_pair: order mismatch");
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!seen.emplace(a(i, j), b(i, j)).second) return false;
    return true;
}

CommuteReport check_commute(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw ShapeError("check_commute: order mismatch");
    const IntSquare ab = multiply(a, b);
    const IntSquare ba = multiply(b, a);
    if (ab != ba) return {};

    CommuteReport report;
    report.commutes = true;
    const std::int64_t c = ab(0, 0);
    const bool scalar_ones =
        std::all_of(ab.entries().begin(), ab.entries().end(), [c](std::int64_t v) { return v == c; });
    if (scalar_ones) report.product_scalar = c;
    return report;
}

PropertyReport check_properties(const IntSquare& m) {
    PropertyReport report = check_magic(m);
    report.is_natural = check_natural(m);
    const auto regular = check_regular(m);
    report.is_regular = regular.is_regular;
    report.regular_constant = regular.constant;
    report.is_pandiagonal = check_pandiagonal(m);
    return report;
}

} // namespace magicsq
