#include "magicsq/charpoly.hpp"

#include <stdexcept>
#include <vector>

namespace magicsq {

namespace {

// Minimal n x n big-integer matrix, just enough for the recurrence.
struct BigMat {
    int n;
    std::vector<BigInt> e;

    explicit BigMat(int order) : n(order), e(static_cast<std::size_t>(order) * order, BigInt(0)) {}

    BigInt& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

BigMat to_big(const IntSquare& m) {
    BigMat out(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) out.at(i, j) = BigInt(static_cast<long>(m(i, j)));
    return out;
}

BigMat big_multiply(const BigMat& a, const BigMat& b) {
    BigMat out(a.n);
    BigInt tmp;
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.n; ++j) {
                tmp = aik * b.at(k, j);
                out.at(i, j) += tmp;
            }
        }
    return out;
}

BigInt big_trace(const BigMat& a) {
    BigInt t(0);
    for (int i = 0; i < a.n; ++i) t += a.at(i, i);
    return t;
}

} // namespace

BigPoly charpoly_exact(const IntSquare& m) {
    const int n = m.order();
    const BigMat a = to_big(m);

    // p(x) = x^n + c[n-1] x^(n-1) + ... + c[0]
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    c[static_cast<std::size_t>(n)] = 1;

    BigMat mk = a; // M_1 = M
    c[static_cast<std::size_t>(n - 1)] = -big_trace(mk);

    for (int k = 2; k <= n; ++k) {
        // M_k = M * (M_{k-1} + c_{n-k+1} I)
        const BigInt& shift = c[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) mk.at(i, i) += shift;
        mk = big_multiply(a, mk);

        BigInt t = -big_trace(mk);
        if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(k)))
            throw std::logic_error("charpoly_exact: inexact division in the recurrence");
        BigInt ck;
        mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        c[static_cast<std::size_t>(n - k)] = ck;
    }

    return BigPoly(std::move(c));
}

} // namespace magicsq
