#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "magicsq/errors.hpp"

namespace magicsq {

/// Checked 64-bit arithmetic. Throws OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Square matrix of signed 64-bit integers, row-major. The universal
/// carrier for magic squares. Immutable in spirit: operations return new
/// values, and all arithmetic on entries is overflow-checked.
class IntSquare {
public:
    /// Order-n square filled with zeros.
    explicit IntSquare(int order);

    /// Takes ownership of a row-major entry vector of length order^2.
    IntSquare(int order, std::vector<std::int64_t> entries);

    /// Convenience for literals: IntSquare::from_rows({{3,8,1},{2,4,6},{7,0,5}}).
    static IntSquare from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    int order() const noexcept { return order_; }

    std::int64_t operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * order_ + col];
    }
    std::int64_t& operator()(int row, int col) {
        return entries_[static_cast<std::size_t>(row) * order_ + col];
    }

    std::span<const std::int64_t> entries() const noexcept { return entries_; }

    bool operator==(const IntSquare&) const = default;

private:
    int order_;
    std::vector<std::int64_t> entries_;
};

/// E_n: every entry one.
IntSquare ones_matrix(int n);

/// R_n: ones on the cross diagonal, zero elsewhere. R_n^2 = I_n.
IntSquare flip_matrix(int n);

/// I_n.
IntSquare identity_matrix(int n);

IntSquare multiply(const IntSquare& a, const IntSquare& b);
IntSquare add(const IntSquare& a, const IntSquare& b);
IntSquare subtract(const IntSquare& a, const IntSquare& b);
IntSquare scale(std::int64_t c, const IntSquare& a);
IntSquare transpose(const IntSquare& a);
std::int64_t trace(const IntSquare& a);

/// sqrt of the (exact) sum of squared entries.
double frobenius_norm(const IntSquare& a);

/// Kronecker (tensor) product: entry ((i*p+k),(j*p+l)) = a(i,j)*b(k,l)
/// for b of order p. Output order is the product of the input orders.
IntSquare kron(const IntSquare& a, const IntSquare& b);

} // namespace magicsq
