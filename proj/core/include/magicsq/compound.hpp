#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "magicsq/int_square.hpp"

namespace magicsq {

/// The two order-mn compounds of magic seeds of order m and n:
/// a = E_m (x) M_n and b = M_m (x) E_n. They commute with
/// a*b = b*a = mu_m * mu_n * E_mn. Build through make_compound_pair.
struct CompoundPair {
    IntSquare a;
    IntSquare b;
    int m = 0;
    int n = 0;
};

/// E_m (x) seed. The seed must be magic; the result is magic with
/// summation index m * mu(seed).
IntSquare compound_a(const IntSquare& seed_n, int m);

/// seed (x) E_n; magic with summation index n * mu(seed).
IntSquare compound_b(const IntSquare& seed_m, int n);

/// Validates both seeds are magic and builds the commuting pair.
CompoundPair make_compound_pair(const IntSquare& seed_m, const IntSquare& seed_n);

/// Euler composition (MA, MB) = (A + n^2 B, B + m^2 A). Natural magic
/// squares of order mn when both seeds are natural; MA and MB commute.
std::pair<IntSquare, IntSquare> euler_compose(const CompoundPair& pair);

/// m x m grid of order-n magic subsquares sharing one summation index;
/// the generalized replacement for E_m (x) M_n.
struct SubsquareGrid {
    int m = 0;
    int n = 0;
    std::vector<IntSquare> cells; // row-major, m*m cells of order n

    SubsquareGrid(int grid_side, int cell_order, std::vector<IntSquare> grid_cells);

    const IntSquare& cell(int i, int j) const { return cells[static_cast<std::size_t>(i) * m + j]; }
};

/// Assembles the order-mn square whose (i,j) block is grid.cell(i,j).
/// Throws if any cell is non-magic or the summation indices disagree.
IntSquare generalized_a(const SubsquareGrid& grid);

/// The eight dihedral transforms of a square.
enum class Phase {
    identity,
    rot90,
    rot180,
    rot270,
    transpose,
    anti_transpose,
    flip_horizontal,
    flip_vertical,
};

constexpr std::array<Phase, 8> all_phases() {
    return {Phase::identity,  Phase::rot90,          Phase::rot180,
            Phase::rot270,    Phase::transpose,      Phase::anti_transpose,
            Phase::flip_horizontal, Phase::flip_vertical};
}

std::string_view phase_name(Phase p);
std::optional<Phase> phase_from_name(std::string_view name);

/// rot90/rot270 turn clockwise; rot180(M) = R M R.
IntSquare apply_phase(const IntSquare& m, Phase p);

/// (M, R M R) for a regular magic square M; the two commute.
std::pair<IntSquare, IntSquare> rotation_duo(const IntSquare& m);

/// The symmetric, self-inverse order-n^2 block permutation P with
/// block (i,j) holding a single 1 at position (j,i). Conjugation by it
/// exchanges A_nn and B_nn. Satisfies R P R = P.
IntSquare shuffle_permutation(int n);

/// P * M * P.
IntSquare apply_shuffle(const IntSquare& p, const IntSquare& m);

/// One stage of repeated self-compounding.
struct ChainStage {
    CompoundPair pair;
    IntSquare ma;
    IntSquare mb;
};

enum class ChainSeed { use_ma, use_mb };

/// Repeats the construction with m = n: each stage compounds the current
/// seed with itself and feeds MA (or MB) forward. Orders grow as k^(2^depth).
std::vector<ChainStage> compound_chain(const IntSquare& seed, int depth,
                                       ChainSeed which = ChainSeed::use_ma);

} // namespace magicsq
