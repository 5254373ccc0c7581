#include "magicsq/square_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace magicsq {

IntSquare parse_square(std::istream& in) {
    long long n = 0;
    if (!(in >> n)) throw ParseError("square file: missing or invalid order on the first line");
    if (n < 1 || n > (1 << 20)) throw ParseError("square file: order out of range");

    std::vector<std::int64_t> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (std::int64_t i = 0; i < n * n; ++i) {
        long long v = 0;
        if (!(in >> v)) {
            std::ostringstream os;
            os << "square file: expected " << n * n << " entries, failed at entry " << i + 1;
            throw ParseError(os.str());
        }
        entries.push_back(v);
    }
    return IntSquare(static_cast<int>(n), std::move(entries));
}

IntSquare parse_square(const std::string& text) {
    std::istringstream in(text);
    return parse_square(in);
}

IntSquare read_square_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open square file: " + path.string());
    return parse_square(in);
}

std::string render_square(const IntSquare& m, std::int64_t offset) {
    std::ostringstream os;
    const int n = m.order();
    os << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << checked_add(m(i, j), offset);
        }
        os << '\n';
    }
    return os.str();
}

void write_square_file(const std::filesystem::path& path, const IntSquare& m,
                       std::int64_t offset) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path.string());
    out << render_square(m, offset);
}

namespace {

// Recursive-descent-free tokenizer for the tiny claim grammar.
struct ClaimScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return text[pos]; }

    void expect(char c, const char* what) {
        if (pos >= text.size() || text[pos] != c) fail(what);
        ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "claim: expected " << what << " at position " << pos << " in \"" << text << "\"";
        throw ParseError(os.str());
    }

    // Unsigned decimal integer.
    BigInt integer() {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("an integer");
        return BigInt(text.substr(start, pos - start));
    }
};

} // namespace

std::vector<BigPoly> parse_claim(const std::string& text) {
    std::vector<BigPoly> factors;
    ClaimScanner scan{text};

    while (!scan.done()) {
        if (scan.peek() == 'L') {
            // "L" or "L^k": the lambda^k factor.
            ++scan.pos;
            int k = 1;
            if (scan.pos < scan.text.size() && scan.peek() == '^') {
                ++scan.pos;
                const BigInt e = scan.integer();
                if (e <= 0 || e > 4096) scan.fail("an exponent in 1..4096");
                k = static_cast<int>(e.get_si());
            }
            factors.push_back(BigPoly::monomial(k));
        } else if (scan.peek() == '(') {
            ++scan.pos;
            scan.expect('L', "'L' after '('");
            int degree = 1;
            if (scan.pos < scan.text.size() && scan.peek() == '^') {
                ++scan.pos;
                const BigInt e = scan.integer();
                if (e != 2) scan.fail("exponent 2 (only (L-a) and (L^2+b) factors are allowed)");
                degree = 2;
            }
            if (scan.pos >= scan.text.size() || (scan.peek() != '+' && scan.peek() != '-'))
                scan.fail("'+' or '-'");
            const bool negative = scan.peek() == '-';
            ++scan.pos;
            BigInt constant = scan.integer();
            if (negative) constant = -constant;
            scan.expect(')', "')'");

            std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1, BigInt(0));
            coeffs[0] = constant;
            coeffs[static_cast<std::size_t>(degree)] = 1;
            factors.emplace_back(std::move(coeffs));
        } else {
            scan.fail("'L' or '('");
        }
    }
    if (factors.empty()) throw ParseError("claim: empty expression");
    return factors;
}

} // namespace magicsq
