#pragma once

#include "magicsq/big_poly.hpp"
#include "magicsq/int_square.hpp"

namespace magicsq {

/// det(xI - M) by the Faddeev-LeVerrier recurrence over arbitrary-precision
/// integers. Monic of degree order(M); every intermediate division is exact
/// (checked, a failure means an implementation bug, never rounding).
BigPoly charpoly_exact(const IntSquare& m);

} // namespace magicsq
