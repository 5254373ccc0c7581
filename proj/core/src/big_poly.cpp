#include "magicsq/big_poly.hpp"

#include <sstream>

#include "magicsq/errors.hpp"

namespace magicsq {

namespace {
const BigInt kZero(0);
}

BigPoly BigPoly::monomial(int degree, BigInt c) {
    if (degree < 0) throw PreconditionError("monomial degree must be >= 0");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, kZero);
    coeffs.back() = std::move(c);
    return BigPoly(std::move(coeffs));
}

BigPoly BigPoly::from_coeffs(std::initializer_list<long> ascending) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(ascending.size());
    for (long c : ascending) coeffs.emplace_back(c);
    return BigPoly(std::move(coeffs));
}

const BigInt& BigPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt BigPoly::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void BigPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigPoly operator+(const BigPoly& a, const BigPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return BigPoly(std::move(out));
}

BigPoly operator-(const BigPoly& a, const BigPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), kZero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return BigPoly(std::move(out));
}

BigPoly operator*(const BigPoly& a, const BigPoly& b) {
    if (a.is_zero() || b.is_zero()) return BigPoly();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BigPoly(std::move(out));
}

std::string BigPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeff(k);
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = (mag == 1 && k > 0);
        if (!unit) os << mag.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

bool exact_factor_check(const BigPoly& p, const std::vector<BigPoly>& factors) {
    BigPoly prod = BigPoly::monomial(0); // constant 1
    for (const BigPoly& f : factors) prod = prod * f;
    return prod == p;
}

} // namespace magicsq
