#pragma once

#include <string_view>
#include <vector>

#include "magicsq/int_square.hpp"
#include "magicsq/spectral.hpp"

namespace magicsq {
namespace fixtures {

// Golden squares. Each accessor returns a fresh copy.
IntSquare m3_lo_shu();
IntSquare m4_regular();
IntSquare m4_pandiagonal();
IntSquare a9();
IntSquare b9();
IntSquare m9_a();
IntSquare m9_b();
IntSquare a9_tilde();
IntSquare p9();
IntSquare a12();
IntSquare b12();
IntSquare m12_a();
IntSquare m12_b();
IntSquare m12_a_hat();
IntSquare m12_b_hat();
IntSquare m16_a(); // transcription cross-checked against the construction on first access
IntSquare m16_b();

// Seed decompositions.
EigenSystem m3_eigen();  // S3 with D_M3 = diag[12, 2i sqrt(6), -2i sqrt(6)]
EigenSystem m4_eigen();  // S4 with the order-3 Jordan block at eigenvalue 0
SvdSystem m3_svd();      // U3, diag[12, 4 sqrt(3), 2 sqrt(3)], V3
SvdSystem m4_svd();      // U4, diag[30, 8 sqrt(5), 2 sqrt(5), 0], V4

/// Lookup by name, case-insensitive ("M3_LO_SHU", "P9", ...). Throws
/// UnknownNameError listing the available names.
IntSquare square(std::string_view name);

/// All square fixture names, in lookup order.
std::vector<std::string_view> square_names();

} // namespace fixtures
} // namespace magicsq
