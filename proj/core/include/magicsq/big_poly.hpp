#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace magicsq {

using BigInt = mpz_class;

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(k) multiplies x^k. Normalized: no stored leading zeros; the zero
/// polynomial stores no coefficients and has degree -1.
class BigPoly {
public:
    BigPoly() = default;

    explicit BigPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    /// c * x^degree
    static BigPoly monomial(int degree, BigInt c = BigInt(1));

    /// Ascending coefficients from machine integers: {-288, 24, -12, 1}.
    static BigPoly from_coeffs(std::initializer_list<long> ascending);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Zero beyond the stored degree.
    const BigInt& coeff(int k) const;

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    bool operator==(const BigPoly&) const = default;

    friend BigPoly operator+(const BigPoly& a, const BigPoly& b);
    friend BigPoly operator-(const BigPoly& a, const BigPoly& b);
    friend BigPoly operator*(const BigPoly& a, const BigPoly& b);

    /// Human-readable form, highest power first: "x^3 - 12*x^2 + 24*x - 288".
    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

/// True iff the product of factors equals p, by exact polynomial
/// multiplication and coefficient comparison. An empty factor list
/// multiplies to the constant 1.
bool exact_factor_check(const BigPoly& p, const std::vector<BigPoly>& factors);

} // namespace magicsq
