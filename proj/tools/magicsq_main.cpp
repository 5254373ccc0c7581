// magicsq: construct commuting magic squares by compounding, check their
// structural properties, and audit spectra against exact oracles.

#include <cctype>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "magicsq/charpoly.hpp"
#include "magicsq/compound.hpp"
#include "magicsq/errors.hpp"
#include "magicsq/fixtures.hpp"
#include "magicsq/magic_props.hpp"
#include "magicsq/spectral.hpp"
#include "magicsq/square_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace magicsq;

namespace {

// A square argument is a built-in name (fixtures, the short seed aliases,
// and E<n>/R<n>/I<n>) or a file path. Built-ins win on collision.
IntSquare resolve_square(const std::string& arg) {
    if (!arg.empty() && (arg[0] == 'E' || arg[0] == 'R' || arg[0] == 'I' || arg[0] == 'e' ||
                         arg[0] == 'r' || arg[0] == 'i')) {
        const std::string digits = arg.substr(1);
        if (!digits.empty() && digits.size() <= 4 &&
            digits.find_first_not_of("0123456789") == std::string::npos) {
            const int n = std::stoi(digits);
            if (n >= 1 && n <= 4096) {
                switch (std::toupper(static_cast<unsigned char>(arg[0]))) {
                    case 'E': return ones_matrix(n);
                    case 'R': return flip_matrix(n);
                    case 'I': return identity_matrix(n);
                }
            }
        }
    }

    std::string upper(arg);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "M3") return fixtures::m3_lo_shu();
    if (upper == "M4") return fixtures::m4_regular();

    try {
        return fixtures::square(arg);
    } catch (const UnknownNameError&) {
        // fall through to the filesystem
    }
    return read_square_file(arg);
}

json report_to_json(const PropertyReport& r) {
    json doc;
    doc["order"] = r.order;
    if (r.summation_index) doc["summation_index"] = *r.summation_index;
    doc["flags"] = {{"semi_magic", r.is_semi_magic},
                    {"magic", r.is_magic},
                    {"natural", r.is_natural},
                    {"regular", r.is_regular},
                    {"pandiagonal", r.is_pandiagonal}};
    if (r.regular_constant) doc["regular_constant"] = *r.regular_constant;
    return doc;
}

void print_report_plain(const PropertyReport& r, std::ostream& os) {
    os << "order            " << r.order << '\n';
    os << "summation index  "
       << (r.summation_index ? std::to_string(*r.summation_index) : std::string("-")) << '\n';
    os << "semi-magic       " << (r.is_semi_magic ? "yes" : "no") << '\n';
    os << "magic            " << (r.is_magic ? "yes" : "no") << '\n';
    os << "natural          " << (r.is_natural ? "yes" : "no") << '\n';
    os << "regular          " << (r.is_regular ? "yes" : "no");
    if (r.regular_constant) os << " (constant " << *r.regular_constant << ")";
    os << '\n';
    os << "pandiagonal      " << (r.is_pandiagonal ? "yes" : "no") << '\n';
}

struct CompoundArgs {
    std::string seed_n;
    std::string seed_m;
    std::string out_dir = ".";
    bool one_based = false;
    bool plain = false;
};

int cmd_compound(const CompoundArgs& args) {
    const IntSquare inner = resolve_square(args.seed_n);
    const IntSquare outer = resolve_square(args.seed_m);
    const CompoundPair pair = make_compound_pair(outer, inner);
    const auto [ma, mb] = euler_compose(pair);

    const int order = pair.a.order();
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    const std::string stem = "order" + std::to_string(order);
    const std::int64_t offset = args.one_based ? 1 : 0;

    const std::map<std::string, const IntSquare*> outputs = {
        {"_A", &pair.a}, {"_B", &pair.b}, {"_MA", &ma}, {"_MB", &mb}};
    json files, sums;
    for (const auto& [suffix, square] : outputs) {
        const fs::path path = dir / (stem + suffix + ".txt");
        write_square_file(path, *square, offset);
        const std::string key = suffix.substr(1);
        files[key] = path.string();
        sums[key] = *check_magic(*square).summation_index;
    }

    if (args.plain) {
        std::cout << "order " << order << " quartet written to " << dir.string() << '\n';
        for (const std::string key : {"A", "B", "MA", "MB"})
            std::cout << key << "  mu = " << sums[key].get<std::int64_t>() << "  ("
                      << files[key].get<std::string>() << ")\n";
    } else {
        json doc = {{"command", "compound"},
                    {"order", order},
                    {"m", pair.m},
                    {"n", pair.n},
                    {"summation_indices", sums},
                    {"files", files}};
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_check(const std::string& square_arg, const std::string& pair_arg, bool plain) {
    const IntSquare m = resolve_square(square_arg);
    PropertyReport report = check_properties(m);

    json doc = report_to_json(report);
    std::string pair_plain;
    if (!pair_arg.empty()) {
        const IntSquare other = resolve_square(pair_arg);
        const CommuteReport commute = check_commute(m, other);
        const bool orthogonal = check_orthogonal_pair(m, other);
        json pair_doc = {{"commutes", commute.commutes}, {"orthogonal_pair", orthogonal}};
        if (commute.product_scalar) pair_doc["product_scalar"] = *commute.product_scalar;
        doc["pair"] = pair_doc;

        pair_plain = "commutes         " + std::string(commute.commutes ? "yes" : "no");
        if (commute.product_scalar)
            pair_plain += " (product " + std::to_string(*commute.product_scalar) + "*E)";
        pair_plain += "\northogonal pair  " + std::string(orthogonal ? "yes" : "no") + "\n";
    }

    if (plain) {
        print_report_plain(report, std::cout);
        std::cout << pair_plain;
    } else {
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_spectra(const std::string& square_arg, const std::string& claim, bool svd, bool plain) {
    const IntSquare m = resolve_square(square_arg);
    const BigPoly poly = charpoly_exact(m);

    json coeffs = json::array();
    for (const BigInt& c : poly.coeffs()) coeffs.push_back(c.get_str());
    json doc = {{"order", m.order()},
                {"charpoly", {{"degree", poly.degree()}, {"coefficients", coeffs}}}};

    bool verdict = false;
    if (!claim.empty()) {
        verdict = exact_factor_check(poly, parse_claim(claim));
        doc["claim"] = {{"expression", claim}, {"verdict", verdict}};
    }

    std::vector<double> singular;
    if (svd) {
        singular = jacobi_singular_values(m);
        doc["singular_values"] = singular;
    }

    if (plain) {
        std::cout << "order      " << m.order() << '\n';
        std::cout << "charpoly   " << poly.to_string("L") << '\n';
        if (!claim.empty())
            std::cout << "claim      " << claim << " -> " << (verdict ? "true" : "false") << '\n';
        if (svd) {
            std::cout << "singular   ";
            for (std::size_t i = 0; i < singular.size(); ++i)
                std::cout << (i ? " " : "") << singular[i];
            std::cout << '\n';
        }
    } else {
        std::cout << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_shuffle(int n, const std::string& apply_arg, bool one_based) {
    const IntSquare p = shuffle_permutation(n);
    const std::int64_t offset = one_based ? 1 : 0;
    if (apply_arg.empty()) {
        std::cout << render_square(p, offset);
    } else {
        const IntSquare target = resolve_square(apply_arg);
        std::cout << render_square(apply_shuffle(p, target), offset);
    }
    return 0;
}

int cmd_phases(const std::string& square_arg, const std::string& out_dir, bool one_based,
               bool plain) {
    const IntSquare m = resolve_square(square_arg);
    const fs::path dir(out_dir);
    fs::create_directories(dir);
    const std::int64_t offset = one_based ? 1 : 0;

    json files;
    for (Phase p : all_phases()) {
        const fs::path path = dir / ("phase_" + std::string(phase_name(p)) + ".txt");
        write_square_file(path, apply_phase(m, p), offset);
        files[std::string(phase_name(p))] = path.string();
    }

    if (plain) {
        std::cout << "eight phases written to " << dir.string() << '\n';
    } else {
        std::cout << json{{"command", "phases"}, {"files", files}}.dump(2) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting magic squares: compounding, property checks, spectral audits"};
    app.require_subcommand(1);

    CompoundArgs compound_args;
    auto* compound = app.add_subcommand(
        "compound", "compound two magic seeds and write the quartet A, B, MA, MB");
    compound->add_option("seed_n", compound_args.seed_n,
                         "inner seed (its order is n; builtin name or file)")->required();
    compound->add_option("seed_m", compound_args.seed_m,
                         "outer seed (its order is m; builtin name or file)")->required();
    compound->add_option("--out-dir", compound_args.out_dir, "output directory");
    compound->add_flag("--one-based", compound_args.one_based, "emit entries offset by +1");
    compound->add_flag("--plain", compound_args.plain, "human-readable output");

    std::string check_square, check_pair;
    bool check_plain = false;
    auto* check = app.add_subcommand("check", "report structural properties of a square");
    check->add_option("square", check_square, "builtin name or file")->required();
    check->add_option("--pair", check_pair, "second square: adds commutation/orthogonality");
    check->add_flag("--plain", check_plain, "human-readable output");

    std::string spectra_square, spectra_claim;
    bool spectra_svd = false, spectra_plain = false;
    auto* spectra =
        app.add_subcommand("spectra", "exact characteristic polynomial and singular values");
    spectra->add_option("square", spectra_square, "builtin name or file")->required();
    spectra->add_option("--claim", spectra_claim,
                        "spectrum claim, e.g. \"L^4(L-360)(L^2+216)(L^2+17496)\"");
    spectra->add_flag("--svd", spectra_svd, "include singular values (Jacobi on M*M^T)");
    spectra->add_flag("--plain", spectra_plain, "human-readable output");

    int shuffle_n = 0;
    std::string shuffle_apply;
    bool shuffle_one_based = false;
    auto* shuffle =
        app.add_subcommand("shuffle", "emit the order-n^2 shuffle permutation P, or P*M*P");
    shuffle->add_option("n", shuffle_n, "block size (P has order n^2)")->required();
    shuffle->add_option("--apply", shuffle_apply, "conjugate this square by P");
    shuffle->add_flag("--one-based", shuffle_one_based, "emit entries offset by +1");

    std::string phases_square, phases_out = ".";
    bool phases_one_based = false, phases_plain = false;
    auto* phases = app.add_subcommand("phases", "write all eight dihedral images of a square");
    phases->add_option("square", phases_square, "builtin name or file")->required();
    phases->add_option("--out-dir", phases_out, "output directory");
    phases->add_flag("--one-based", phases_one_based, "emit entries offset by +1");
    phases->add_flag("--plain", phases_plain, "human-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*compound) return cmd_compound(compound_args);
        if (*check) return cmd_check(check_square, check_pair, check_plain);
        if (*spectra) return cmd_spectra(spectra_square, spectra_claim, spectra_svd, spectra_plain);
        if (*shuffle) return cmd_shuffle(shuffle_n, shuffle_apply, shuffle_one_based);
        if (*phases) return cmd_phases(phases_square, phases_out, phases_one_based, phases_plain);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnknownNameError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
