#include "magicsq/dense_matrix.hpp"

namespace magicsq {

RealMatrix to_real(const IntSquare& m) {
    const int n = m.order();
    RealMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = static_cast<double>(m(i, j));
    return out;
}

ComplexMatrix to_complex(const IntSquare& m) {
    const int n = m.order();
    ComplexMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = {static_cast<double>(m(i, j)), 0.0};
    return out;
}

ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = {m(i, j), 0.0};
    return out;
}

} // namespace magicsq
