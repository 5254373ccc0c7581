#include "magicsq/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "magicsq/compound.hpp"

namespace magicsq {
namespace fixtures {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt6 = std::sqrt(6.0);

std::complex<double> c6(double re, double im_units_sqrt6) {
    return {re, im_units_sqrt6 * kSqrt6};
}

} // namespace

IntSquare m3_lo_shu() {
    return IntSquare::from_rows({{3, 8, 1}, {2, 4, 6}, {7, 0, 5}});
}

IntSquare m4_regular() {
    return IntSquare::from_rows({{4, 3, 15, 8}, {10, 13, 1, 6}, {9, 14, 2, 5}, {7, 0, 12, 11}});
}

IntSquare m4_pandiagonal() {
    return IntSquare::from_rows({{13, 6, 11, 0}, {10, 1, 12, 7}, {4, 15, 2, 9}, {3, 8, 5, 14}});
}

IntSquare a9() {
    return IntSquare::from_rows({{3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5},
                                 {3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5},
                                 {3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5}});
}

IntSquare b9() {
    return IntSquare::from_rows({{3, 3, 3, 8, 8, 8, 1, 1, 1},
                                 {3, 3, 3, 8, 8, 8, 1, 1, 1},
                                 {3, 3, 3, 8, 8, 8, 1, 1, 1},
                                 {2, 2, 2, 4, 4, 4, 6, 6, 6},
                                 {2, 2, 2, 4, 4, 4, 6, 6, 6},
                                 {2, 2, 2, 4, 4, 4, 6, 6, 6},
                                 {7, 7, 7, 0, 0, 0, 5, 5, 5},
                                 {7, 7, 7, 0, 0, 0, 5, 5, 5},
                                 {7, 7, 7, 0, 0, 0, 5, 5, 5}});
}

IntSquare m9_a() {
    return IntSquare::from_rows({{30, 35, 28, 75, 80, 73, 12, 17, 10},
                                 {29, 31, 33, 74, 76, 78, 11, 13, 15},
                                 {34, 27, 32, 79, 72, 77, 16, 9, 14},
                                 {21, 26, 19, 39, 44, 37, 57, 62, 55},
                                 {20, 22, 24, 38, 40, 42, 56, 58, 60},
                                 {25, 18, 23, 43, 36, 41, 61, 54, 59},
                                 {66, 71, 64, 3, 8, 1, 48, 53, 46},
                                 {65, 67, 69, 2, 4, 6, 47, 49, 51},
                                 {70, 63, 68, 7, 0, 5, 52, 45, 50}});
}

IntSquare m9_b() {
    return IntSquare::from_rows({{30, 75, 12, 35, 80, 17, 28, 73, 10},
                                 {21, 39, 57, 26, 44, 62, 19, 37, 55},
                                 {66, 3, 48, 71, 8, 53, 64, 1, 46},
                                 {29, 74, 11, 31, 76, 13, 33, 78, 15},
                                 {20, 38, 56, 22, 40, 58, 24, 42, 60},
                                 {65, 2, 47, 67, 4, 49, 69, 6, 51},
                                 {34, 79, 16, 27, 72, 9, 32, 77, 14},
                                 {25, 43, 61, 18, 36, 54, 23, 41, 59},
                                 {70, 7, 52, 63, 0, 45, 68, 5, 50}});
}

IntSquare a9_tilde() {
    return IntSquare::from_rows({{5, 6, 1, 3, 2, 7, 3, 8, 1},
                                 {0, 4, 8, 8, 4, 0, 2, 4, 6},
                                 {7, 2, 3, 1, 6, 5, 7, 0, 5},
                                 {1, 6, 5, 7, 2, 3, 1, 6, 5},
                                 {8, 4, 0, 0, 4, 8, 8, 4, 0},
                                 {3, 2, 7, 5, 6, 1, 3, 2, 7},
                                 {3, 8, 1, 3, 2, 7, 5, 6, 1},
                                 {2, 4, 6, 8, 4, 0, 0, 4, 8},
                                 {7, 0, 5, 1, 6, 5, 7, 2, 3}});
}

IntSquare p9() {
    return IntSquare::from_rows({{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 1}});
}

IntSquare a12() {
    return IntSquare::from_rows({{3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5},
                                 {3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5},
                                 {3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5},
                                 {3, 8, 1, 3, 8, 1, 3, 8, 1, 3, 8, 1},
                                 {2, 4, 6, 2, 4, 6, 2, 4, 6, 2, 4, 6},
                                 {7, 0, 5, 7, 0, 5, 7, 0, 5, 7, 0, 5}});
}

IntSquare b12() {
    return IntSquare::from_rows({{4, 4, 4, 3, 3, 3, 15, 15, 15, 8, 8, 8},
                                 {4, 4, 4, 3, 3, 3, 15, 15, 15, 8, 8, 8},
                                 {4, 4, 4, 3, 3, 3, 15, 15, 15, 8, 8, 8},
                                 {10, 10, 10, 13, 13, 13, 1, 1, 1, 6, 6, 6},
                                 {10, 10, 10, 13, 13, 13, 1, 1, 1, 6, 6, 6},
                                 {10, 10, 10, 13, 13, 13, 1, 1, 1, 6, 6, 6},
                                 {9, 9, 9, 14, 14, 14, 2, 2, 2, 5, 5, 5},
                                 {9, 9, 9, 14, 14, 14, 2, 2, 2, 5, 5, 5},
                                 {9, 9, 9, 14, 14, 14, 2, 2, 2, 5, 5, 5},
                                 {7, 7, 7, 0, 0, 0, 12, 12, 12, 11, 11, 11},
                                 {7, 7, 7, 0, 0, 0, 12, 12, 12, 11, 11, 11},
                                 {7, 7, 7, 0, 0, 0, 12, 12, 12, 11, 11, 11}});
}

IntSquare m12_a() {
    return IntSquare::from_rows({{39, 44, 37, 30, 35, 28, 138, 143, 136, 75, 80, 73},
                                 {38, 40, 42, 29, 31, 33, 137, 139, 141, 74, 76, 78},
                                 {43, 36, 41, 34, 27, 32, 142, 135, 140, 79, 72, 77},
                                 {93, 98, 91, 120, 125, 118, 12, 17, 10, 57, 62, 55},
                                 {92, 94, 96, 119, 121, 123, 11, 13, 15, 56, 58, 60},
                                 {97, 90, 95, 124, 117, 122, 16, 9, 14, 61, 54, 59},
                                 {84, 89, 82, 129, 134, 127, 21, 26, 19, 48, 53, 46},
                                 {83, 85, 87, 128, 130, 132, 20, 22, 24, 47, 49, 51},
                                 {88, 81, 86, 133, 126, 131, 25, 18, 23, 52, 45, 50},
                                 {66, 71, 64, 3, 8, 1, 111, 116, 109, 102, 107, 100},
                                 {65, 67, 69, 2, 4, 6, 110, 112, 114, 101, 103, 105},
                                 {70, 63, 68, 7, 0, 5, 115, 108, 113, 106, 99, 104}});
}

IntSquare m12_b() {
    return IntSquare::from_rows({{52, 132, 20, 51, 131, 19, 63, 143, 31, 56, 136, 24},
                                 {36, 68, 100, 35, 67, 99, 47, 79, 111, 40, 72, 104},
                                 {116, 4, 84, 115, 3, 83, 127, 15, 95, 120, 8, 88},
                                 {58, 138, 26, 61, 141, 29, 49, 129, 17, 54, 134, 22},
                                 {42, 74, 106, 45, 77, 109, 33, 65, 97, 38, 70, 102},
                                 {122, 10, 90, 125, 13, 93, 113, 1, 81, 118, 6, 86},
                                 {57, 137, 25, 62, 142, 30, 50, 130, 18, 53, 133, 21},
                                 {41, 73, 105, 46, 78, 110, 34, 66, 98, 37, 69, 101},
                                 {121, 9, 89, 126, 14, 94, 114, 2, 82, 117, 5, 85},
                                 {55, 135, 23, 48, 128, 16, 60, 140, 28, 59, 139, 27},
                                 {39, 71, 103, 32, 64, 96, 44, 76, 108, 43, 75, 107},
                                 {119, 7, 87, 112, 0, 80, 124, 12, 92, 123, 11, 91}});
}

IntSquare m12_a_hat() {
    return IntSquare::from_rows({{52, 51, 63, 56, 132, 131, 143, 136, 20, 19, 31, 24},
                                 {58, 61, 49, 54, 138, 141, 129, 134, 26, 29, 17, 22},
                                 {57, 62, 50, 53, 137, 142, 130, 133, 25, 30, 18, 21},
                                 {55, 48, 60, 59, 135, 128, 140, 139, 23, 16, 28, 27},
                                 {36, 35, 47, 40, 68, 67, 79, 72, 100, 99, 111, 104},
                                 {42, 45, 33, 38, 74, 77, 65, 70, 106, 109, 97, 102},
                                 {41, 46, 34, 37, 73, 78, 66, 69, 105, 110, 98, 101},
                                 {39, 32, 44, 43, 71, 64, 76, 75, 103, 96, 108, 107},
                                 {116, 115, 127, 120, 4, 3, 15, 8, 84, 83, 95, 88},
                                 {122, 125, 113, 118, 10, 13, 1, 6, 90, 93, 81, 86},
                                 {121, 126, 114, 117, 9, 14, 2, 5, 89, 94, 82, 85},
                                 {119, 112, 124, 123, 7, 0, 12, 11, 87, 80, 92, 91}});
}

IntSquare m12_b_hat() {
    return IntSquare::from_rows({{39, 30, 138, 75, 44, 35, 143, 80, 37, 28, 136, 73},
                                 {93, 120, 12, 57, 98, 125, 17, 62, 91, 118, 10, 55},
                                 {84, 129, 21, 48, 89, 134, 26, 53, 82, 127, 19, 46},
                                 {66, 3, 111, 102, 71, 8, 116, 107, 64, 1, 109, 100},
                                 {38, 29, 137, 74, 40, 31, 139, 76, 42, 33, 141, 78},
                                 {92, 119, 11, 56, 94, 121, 13, 58, 96, 123, 15, 60},
                                 {83, 128, 20, 47, 85, 130, 22, 49, 87, 132, 24, 51},
                                 {65, 2, 110, 101, 67, 4, 112, 103, 69, 6, 114, 105},
                                 {43, 34, 142, 79, 36, 27, 135, 72, 41, 32, 140, 77},
                                 {97, 124, 16, 61, 90, 117, 9, 54, 95, 122, 14, 59},
                                 {88, 133, 25, 52, 81, 126, 18, 45, 86, 131, 23, 50},
                                 {70, 7, 115, 106, 63, 0, 108, 99, 68, 5, 113, 104}});
}

namespace {

IntSquare m16_a_transcription() {
    return IntSquare::from_rows(
        {{221, 214, 219, 208, 109, 102, 107, 96, 189, 182, 187, 176, 13, 6, 11, 0},
         {218, 209, 220, 215, 106, 97, 108, 103, 186, 177, 188, 183, 10, 1, 12, 7},
         {212, 223, 210, 217, 100, 111, 98, 105, 180, 191, 178, 185, 4, 15, 2, 9},
         {211, 216, 213, 222, 99, 104, 101, 110, 179, 184, 181, 190, 3, 8, 5, 14},
         {173, 166, 171, 160, 29, 22, 27, 16, 205, 198, 203, 192, 125, 118, 123, 112},
         {170, 161, 172, 167, 26, 17, 28, 23, 202, 193, 204, 199, 122, 113, 124, 119},
         {164, 175, 162, 169, 20, 31, 18, 25, 196, 207, 194, 201, 116, 127, 114, 121},
         {163, 168, 165, 174, 19, 24, 21, 30, 195, 200, 197, 206, 115, 120, 117, 126},
         {77, 70, 75, 64, 253, 246, 251, 240, 45, 38, 43, 32, 157, 150, 155, 144},
         {74, 65, 76, 71, 250, 241, 252, 247, 42, 33, 44, 39, 154, 145, 156, 151},
         {68, 79, 66, 73, 244, 255, 242, 249, 36, 47, 34, 41, 148, 159, 146, 153},
         {67, 72, 69, 78, 243, 248, 245, 254, 35, 40, 37, 46, 147, 152, 149, 158},
         {61, 54, 59, 48, 141, 134, 139, 128, 93, 86, 91, 80, 237, 230, 235, 224},
         {58, 49, 60, 55, 138, 129, 140, 135, 90, 81, 92, 87, 234, 225, 236, 231},
         {52, 63, 50, 57, 132, 143, 130, 137, 84, 95, 82, 89, 228, 239, 226, 233},
         {51, 56, 53, 62, 131, 136, 133, 142, 83, 88, 85, 94, 227, 232, 229, 238}});
}

IntSquare m16_b_transcription() {
    return IntSquare::from_rows(
        {{221, 109, 189, 13, 214, 102, 182, 6, 219, 107, 187, 11, 208, 96, 176, 0},
         {173, 29, 205, 125, 166, 22, 198, 118, 171, 27, 203, 123, 160, 16, 192, 112},
         {77, 253, 45, 157, 70, 246, 38, 150, 75, 251, 43, 155, 64, 240, 32, 144},
         {61, 141, 93, 237, 54, 134, 86, 230, 59, 139, 91, 235, 48, 128, 80, 224},
         {218, 106, 186, 10, 209, 97, 177, 1, 220, 108, 188, 12, 215, 103, 183, 7},
         {170, 26, 202, 122, 161, 17, 193, 113, 172, 28, 204, 124, 167, 23, 199, 119},
         {74, 250, 42, 154, 65, 241, 33, 145, 76, 252, 44, 156, 71, 247, 39, 151},
         {58, 138, 90, 234, 49, 129, 81, 225, 60, 140, 92, 236, 55, 135, 87, 231},
         {212, 100, 180, 4, 223, 111, 191, 15, 210, 98, 178, 2, 217, 105, 185, 9},
         {164, 20, 196, 116, 175, 31, 207, 127, 162, 18, 194, 114, 169, 25, 201, 121},
         {68, 244, 36, 148, 79, 255, 47, 159, 66, 242, 34, 146, 73, 249, 41, 153},
         {52, 132, 84, 228, 63, 143, 95, 239, 50, 130, 82, 226, 57, 137, 89, 233},
         {211, 99, 179, 3, 216, 104, 184, 8, 213, 101, 181, 5, 222, 110, 190, 14},
         {163, 19, 195, 115, 168, 24, 200, 120, 165, 21, 197, 117, 174, 30, 206, 126},
         {67, 243, 35, 147, 72, 248, 40, 152, 69, 245, 37, 149, 78, 254, 46, 158},
         {51, 131, 83, 227, 56, 136, 88, 232, 53, 133, 85, 229, 62, 142, 94, 238}});
}

// The order-16 transcriptions are long enough that a typo is plausible;
// compare them against the construction once, on first access.
std::pair<IntSquare, IntSquare> checked_m16_pair() {
    static const std::pair<IntSquare, IntSquare> pair = [] {
        const auto built = euler_compose(make_compound_pair(m4_pandiagonal(), m4_pandiagonal()));
        IntSquare a = m16_a_transcription();
        IntSquare b = m16_b_transcription();
        if (a != built.first || b != built.second)
            throw std::logic_error("order-16 fixture transcription disagrees with the construction");
        return std::make_pair(std::move(a), std::move(b));
    }();
    return pair;
}

} // namespace

IntSquare m16_a() { return checked_m16_pair().first; }

IntSquare m16_b() { return checked_m16_pair().second; }

EigenSystem m3_eigen() {
    ComplexMatrix s = ComplexMatrix::from_rows({{c6(1, 0), c6(8, 1), c6(8, -1)},
                                                {c6(1, 0), c6(-4, 2), c6(-4, -2)},
                                                {c6(1, 0), c6(-4, -3), c6(-4, 3)}});
    ComplexMatrix j(3, 3);
    j(0, 0) = c6(12, 0);
    j(1, 1) = c6(0, 2);
    j(2, 2) = c6(0, -2);
    return {std::move(s), std::move(j)};
}

EigenSystem m4_eigen() {
    ComplexMatrix s = ComplexMatrix::from_rows({{{1, 0}, {48, 0}, {-14, 0}, {3, 0}},
                                                {{1, 0}, {-16, 0}, {10, 0}, {-1, 0}},
                                                {{1, 0}, {16, 0}, {6, 0}, {-1, 0}},
                                                {{1, 0}, {-48, 0}, {-2, 0}, {-1, 0}}});
    // Eigenvalue 30 plus a three-chain of generalized eigenvectors at 0.
    ComplexMatrix j(4, 4);
    j(0, 0) = {30, 0};
    j(1, 2) = {1, 0};
    j(2, 3) = {1, 0};
    return {std::move(s), std::move(j)};
}

SvdSystem m3_svd() {
    const double s3 = kSqrt3, s2 = std::sqrt(2.0), s6 = kSqrt6;
    RealMatrix u = RealMatrix::from_rows({{s3 / 3, s2 / 2, s6 / 6},
                                          {s3 / 3, 0.0, -s6 / 3},
                                          {s3 / 3, -s2 / 2, s6 / 6}});
    RealMatrix v = RealMatrix::from_rows({{s3 / 3, -s6 / 6, s2 / 2},
                                          {s3 / 3, s6 / 3, 0.0},
                                          {s3 / 3, -s6 / 6, -s2 / 2}});
    return {std::move(u), {12.0, 4 * s3, 2 * s3}, std::move(v)};
}

SvdSystem m4_svd() {
    const double s5 = kSqrt5;
    RealMatrix u = RealMatrix::from_rows({{0.5, -0.5, 0.3 * s5, 0.1 * s5},
                                          {0.5, 0.5, -0.1 * s5, 0.3 * s5},
                                          {0.5, 0.5, 0.1 * s5, -0.3 * s5},
                                          {0.5, -0.5, -0.3 * s5, -0.1 * s5}});
    RealMatrix v = RealMatrix::from_rows({{0.5, 0.1 * s5, -0.5, -0.3 * s5},
                                          {0.5, 0.3 * s5, 0.5, 0.1 * s5},
                                          {0.5, -0.3 * s5, 0.5, -0.1 * s5},
                                          {0.5, -0.1 * s5, -0.5, 0.3 * s5}});
    return {std::move(u), {30.0, 8 * s5, 2 * s5, 0.0}, std::move(v)};
}

namespace {

struct NamedSquare {
    std::string_view name;
    IntSquare (*make)();
};

constexpr NamedSquare kSquares[] = {
    {"M3_LO_SHU", m3_lo_shu},
    {"M4_REGULAR", m4_regular},
    {"M4_PANDIAGONAL", m4_pandiagonal},
    {"A9", a9},
    {"B9", b9},
    {"M9_A", m9_a},
    {"M9_B", m9_b},
    {"A9_TILDE", a9_tilde},
    {"P9", p9},
    {"A12", a12},
    {"B12", b12},
    {"M12_A", m12_a},
    {"M12_B", m12_b},
    {"M12_A_HAT", m12_a_hat},
    {"M12_B_HAT", m12_b_hat},
    {"M16_A", m16_a},
    {"M16_B", m16_b},
};

std::string to_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace

IntSquare square(std::string_view name) {
    const std::string key = to_upper(name);
    for (const NamedSquare& entry : kSquares)
        if (entry.name == key) return entry.make();

    std::ostringstream os;
    os << "unknown fixture \"" << name << "\"; available:";
    for (const NamedSquare& entry : kSquares) os << " " << entry.name;
    throw UnknownNameError(os.str());
}

std::vector<std::string_view> square_names() {
    std::vector<std::string_view> names;
    names.reserve(std::size(kSquares));
    for (const NamedSquare& entry : kSquares) names.push_back(entry.name);
    return names;
}

} // namespace fixtures
} // namespace magicsq
