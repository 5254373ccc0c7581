#include "magicsq/int_square.hpp"

#include <cmath>
#include <cstdlib>

namespace magicsq {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer addition overflow; retry via the arbitrary-precision path");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer subtraction overflow; retry via the arbitrary-precision path");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer multiplication overflow; retry via the arbitrary-precision path");
    return out;
}

IntSquare::IntSquare(int order)
    : order_(order), entries_(static_cast<std::size_t>(order) * order, 0) {
    if (order < 1) throw PreconditionError("IntSquare order must be >= 1");
}

IntSquare::IntSquare(int order, std::vector<std::int64_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order < 1) throw PreconditionError("IntSquare order must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(order) * order)
        throw ShapeError("IntSquare entry count does not match order^2");
}

IntSquare IntSquare::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::int64_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw ShapeError("IntSquare::from_rows requires n rows of n entries");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return IntSquare(n, std::move(flat));
}

IntSquare ones_matrix(int n) {
    IntSquare e(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e(i, j) = 1;
    return e;
}

IntSquare flip_matrix(int n) {
    IntSquare r(n);
    for (int i = 0; i < n; ++i) r(i, n - 1 - i) = 1;
    return r;
}

IntSquare identity_matrix(int n) {
    IntSquare id(n);
    for (int i = 0; i < n; ++i) id(i, i) = 1;
    return id;
}

IntSquare multiply(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw ShapeError("multiply: order mismatch");
    const int n = a.order();
    IntSquare out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
        }
    return out;
}

IntSquare add(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw ShapeError("add: order mismatch");
    const int n = a.order();
    IntSquare out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = checked_add(a(i, j), b(i, j));
    return out;
}

IntSquare subtract(const IntSquare& a, const IntSquare& b) {
    if (a.order() != b.order()) throw ShapeError("subtract: order mismatch");
    const int n = a.order();
    IntSquare out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = checked_sub(a(i, j), b(i, j));
    return out;
}

IntSquare scale(std::int64_t c, const IntSquare& a) {
    const int n = a.order();
    IntSquare out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = checked_mul(c, a(i, j));
    return out;
}

IntSquare transpose(const IntSquare& a) {
    const int n = a.order();
    IntSquare out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(j, i);
    return out;
}

std::int64_t trace(const IntSquare& a) {
    std::int64_t t = 0;
    for (int i = 0; i < a.order(); ++i) t = checked_add(t, a(i, i));
    return t;
}

double frobenius_norm(const IntSquare& a) {
    std::int64_t sq = 0;
    for (std::int64_t v : a.entries()) sq = checked_add(sq, checked_mul(v, v));
    return std::sqrt(static_cast<double>(sq));
}

IntSquare kron(const IntSquare& a, const IntSquare& b) {
    const int m = a.order();
    const int p = b.order();
    if (static_cast<std::int64_t>(m) * p > 1 << 20)
        throw OverflowError("kron: product order too large");
    IntSquare out(m * p);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const std::int64_t aij = a(i, j);
            for (int k = 0; k < p; ++k)
                for (int l = 0; l < p; ++l)
                    out(i * p + k, j * p + l) = checked_mul(aij, b(k, l));
        }
    return out;
}

} // namespace magicsq
