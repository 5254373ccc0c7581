#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "magicsq/big_poly.hpp"
#include "magicsq/int_square.hpp"

namespace magicsq {

/// Square file format: first line the order n, then n lines of n
/// whitespace-separated integers. parse(render(M)) == M for every square.

IntSquare parse_square(std::istream& in);
IntSquare parse_square(const std::string& text);
IntSquare read_square_file(const std::filesystem::path& path);

/// offset is added to every entry on output (+1 for one-based readers).
std::string render_square(const IntSquare& m, std::int64_t offset = 0);
void write_square_file(const std::filesystem::path& path, const IntSquare& m,
                       std::int64_t offset = 0);

/// Spectrum claim grammar: a product of "L^k" (or bare "L"), "(L-a)"/"(L+a)",
/// and "(L^2+b)"/"(L^2-b)" tokens, e.g. "L^4(L-360)(L^2+216)(L^2+17496)".
/// Whitespace between tokens is ignored. Returns the factors as exact
/// polynomials; throws ParseError on malformed input.
std::vector<BigPoly> parse_claim(const std::string& text);

} // namespace magicsq
