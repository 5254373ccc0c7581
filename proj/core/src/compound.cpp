#include "magicsq/compound.hpp"

#include <string>

#include "magicsq/magic_props.hpp"

namespace magicsq {

IntSquare compound_a(const IntSquare& seed_n, int m) {
    if (m < 1) throw PreconditionError("compound_a: m must be >= 1");
    if (!check_magic(seed_n).is_magic) throw PreconditionError("compound_a: seed is not magic");
    return kron(ones_matrix(m), seed_n);
}

IntSquare compound_b(const IntSquare& seed_m, int n) {
    if (n < 1) throw PreconditionError("compound_b: n must be >= 1");
    if (!check_magic(seed_m).is_magic) throw PreconditionError("compound_b: seed is not magic");
    return kron(seed_m, ones_matrix(n));
}

CompoundPair make_compound_pair(const IntSquare& seed_m, const IntSquare& seed_n) {
    const int m = seed_m.order();
    const int n = seed_n.order();
    return {compound_a(seed_n, m), compound_b(seed_m, n), m, n};
}

std::pair<IntSquare, IntSquare> euler_compose(const CompoundPair& pair) {
    const std::int64_t m2 = checked_mul(pair.m, pair.m);
    const std::int64_t n2 = checked_mul(pair.n, pair.n);
    IntSquare ma = add(pair.a, scale(n2, pair.b));
    IntSquare mb = add(pair.b, scale(m2, pair.a));
    return {std::move(ma), std::move(mb)};
}

SubsquareGrid::SubsquareGrid(int grid_side, int cell_order, std::vector<IntSquare> grid_cells)
    : m(grid_side), n(cell_order), cells(std::move(grid_cells)) {
    if (m < 1 || n < 1) throw PreconditionError("SubsquareGrid: sides must be >= 1");
    if (cells.size() != static_cast<std::size_t>(m) * m)
        throw ShapeError("SubsquareGrid: expected m*m cells");
    for (const IntSquare& c : cells)
        if (c.order() != n) throw ShapeError("SubsquareGrid: cell order mismatch");
}

IntSquare generalized_a(const SubsquareGrid& grid) {
    std::optional<std::int64_t> mu;
    for (const IntSquare& c : grid.cells) {
        const auto report = check_magic(c);
        if (!report.is_magic) throw PreconditionError("generalized_a: non-magic subsquare");
        if (!mu) mu = report.summation_index;
        else if (*mu != *report.summation_index)
            throw PreconditionError("generalized_a: inconsistent summation indices across cells");
    }

    const int m = grid.m, n = grid.n;
    IntSquare out(m * n);
    for (int bi = 0; bi < m; ++bi)
        for (int bj = 0; bj < m; ++bj) {
            const IntSquare& c = grid.cell(bi, bj);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) out(bi * n + i, bj * n + j) = c(i, j);
        }
    return out;
}

std::string_view phase_name(Phase p) {
    switch (p) {
        case Phase::identity: return "identity";
        case Phase::rot90: return "rot90";
        case Phase::rot180: return "rot180";
        case Phase::rot270: return "rot270";
        case Phase::transpose: return "transpose";
        case Phase::anti_transpose: return "anti_transpose";
        case Phase::flip_horizontal: return "flip_horizontal";
        case Phase::flip_vertical: return "flip_vertical";
    }
    return "unknown";
}

std::optional<Phase> phase_from_name(std::string_view name) {
    for (Phase p : all_phases())
        if (phase_name(p) == name) return p;
    return std::nullopt;
}

IntSquare apply_phase(const IntSquare& m, Phase p) {
    const int n = m.order();
    IntSquare out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = 0;
            switch (p) {
                case Phase::identity: v = m(i, j); break;
                case Phase::rot90: v = m(n - 1 - j, i); break;
                case Phase::rot180: v = m(n - 1 - i, n - 1 - j); break;
                case Phase::rot270: v = m(j, n - 1 - i); break;
                case Phase::transpose: v = m(j, i); break;
                case Phase::anti_transpose: v = m(n - 1 - j, n - 1 - i); break;
                case Phase::flip_horizontal: v = m(i, n - 1 - j); break;
                case Phase::flip_vertical: v = m(n - 1 - i, j); break;
            }
            out(i, j) = v;
        }
    return out;
}

std::pair<IntSquare, IntSquare> rotation_duo(const IntSquare& m) {
    if (!check_regular(m).is_regular)
        throw PreconditionError("rotation_duo: input must be a regular magic square");
    return {m, apply_phase(m, Phase::rot180)};
}

IntSquare shuffle_permutation(int n) {
    if (n < 1) throw PreconditionError("shuffle_permutation: n must be >= 1");
    IntSquare p(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i * n + j, j * n + i) = 1;
    return p;
}

IntSquare apply_shuffle(const IntSquare& p, const IntSquare& m) {
    if (p.order() != m.order()) throw ShapeError("apply_shuffle: order mismatch");
    return multiply(multiply(p, m), p);
}

std::vector<ChainStage> compound_chain(const IntSquare& seed, int depth, ChainSeed which) {
    if (depth < 1) throw PreconditionError("compound_chain: depth must be >= 1");
    if (!check_magic(seed).is_magic) throw PreconditionError("compound_chain: seed is not magic");

    // Validate every stage order before building anything; orders square
    // at each stage, so a deep chain can blow past the supported range.
    std::int64_t order = seed.order();
    for (int d = 0; d < depth; ++d) {
        order = order * order;
        if (order > 1 << 12)
            throw OverflowError("compound_chain: stage order " + std::to_string(order) +
                                " exceeds the supported size");
    }

    std::vector<ChainStage> stages;
    stages.reserve(static_cast<std::size_t>(depth));
    IntSquare current = seed;
    for (int d = 0; d < depth; ++d) {
        CompoundPair pair = make_compound_pair(current, current);
        auto [ma, mb] = euler_compose(pair);
        current = (which == ChainSeed::use_ma) ? ma : mb;
        stages.push_back({std::move(pair), std::move(ma), std::move(mb)});
    }
    return stages;
}

} // namespace magicsq
