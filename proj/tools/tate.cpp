// tate: command-line front end for index, commutator, tame symbol and the
// verification suites.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "tate/det_lines.hpp"
#include "tate/errors.hpp"
#include "tate/index_map.hpp"
#include "tate/verify.hpp"

using namespace tate;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

struct Globals {
    std::string field = "Q";
    int precision = 16;
    std::uint64_t seed = 0;
    bool json = false;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

/// "<poly>" or "inv(<poly>)"; the latter is the series inverse at `precision`.
TruncSeries parse_series(const FieldCtx& ctx, const std::string& text, int precision) {
    const std::string t = trim(text);
    if (t.rfind("inv(", 0) == 0) {
        if (t.back() != ')') throw ParseError("unbalanced inv( in '" + text + "'");
        return invert_series(LaurentPoly::parse(ctx, t.substr(4, t.size() - 5)), precision);
    }
    const LaurentPoly f = LaurentPoly::parse(ctx, t);
    if (f.is_zero()) throw ZeroElement("'" + text + "' is zero, not a unit");
    return TruncSeries::from_poly(f);
}

json scalar_json(const Scalar& s) {
    if (s.ctx().is_prime()) return s.residue_value();
    return s.to_string();
}

/// c_f^{v(g)} / c_g^{v(f)}, times (-1)^{v(f)v(g)} when graded.
Scalar closed_formula(const TruncSeries& f, const TruncSeries& g, LineMode mode) {
    const Scalar tame = tame_symbol(f, g);
    const bool odd = (f.valuation() % 2 != 0) && (g.valuation() % 2 != 0);
    return (mode == LineMode::Ungraded && odd) ? -tame : tame;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index maps, determinant lines and tame symbols over k((t))"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--field", g.field, "Base field: Q, Fp:<p> or F<p>");
    app.add_option("--precision", g.precision, "Series coefficients for inv(...) and inverses")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized suites");
    app.add_flag("--json", g.json, "Print JSON instead of text");

    std::optional<std::string> f_spec, g_spec, matrix_spec;
    std::string mode_text = "ungraded";

    auto* index_cmd = app.add_subcommand("index", "Index of an automorphism at K0");
    index_cmd->fallthrough();
    index_cmd->add_option("--f", f_spec, "Multiply by this unit of k((t))");
    index_cmd->add_option("--matrix", matrix_spec, "GLn matrix, rows split by ';', entries by ','");

    auto* comm_cmd = app.add_subcommand("commutator", "Commutator of lifts to the determinant extension");
    comm_cmd->fallthrough();
    comm_cmd->add_option("--f", f_spec)->required();
    comm_cmd->add_option("--g", g_spec)->required();
    comm_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"graded", "ungraded"}));

    auto* tame_cmd = app.add_subcommand("tame", "Tame symbol from the closed formula");
    tame_cmd->fallthrough();
    tame_cmd->add_option("--f", f_spec)->required();
    tame_cmd->add_option("--g", g_spec)->required();

    std::string suite = "all";
    int cases = 20;
    auto* verify_cmd = app.add_subcommand("verify", "Run randomized property suites");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--suite", suite, "lattice, index, family, detline, simplicial or all");
    verify_cmd->add_option("--cases", cases, "Cases per suite")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const FieldCtx ctx = FieldCtx::parse(g.field);

        if (*index_cmd) {
            if (f_spec.has_value() == matrix_spec.has_value()) {
                std::cerr << "index: give exactly one of --f and --matrix\n";
                return kExitUsage;
            }
            const Automorphism aut = f_spec ? Automorphism::mult_by(TateSpace{ctx, 1}, parse_series(ctx, *f_spec, g.precision))
                                            : Automorphism::gl(LaurentMatrix::parse(ctx, *matrix_spec));
            const long value = index0(aut);
            emit(g, {{"field", ctx.name()}, {"automorphism", aut.to_string()}, {"index", value}}, std::to_string(value));
            return kExitOk;
        }

        if (*comm_cmd) {
            const LineMode mode = parse_mode(mode_text);
            const TateSpace space{ctx, 1};
            const TruncSeries fs = parse_series(ctx, *f_spec, g.precision);
            const TruncSeries gs = parse_series(ctx, *g_spec, g.precision);
            const Scalar value = commutator(Automorphism::mult_by(space, fs), Automorphism::mult_by(space, gs), mode);
            const Scalar formula = closed_formula(fs, gs, mode);
            emit(g,
                 {{"commutator", {{"mode", mode_name(mode)}, {"value", scalar_json(value)}}},
                  {"formula", scalar_json(formula)},
                  {"match", value == formula}},
                 value.to_string());
            return value == formula ? kExitOk : kExitFailed;
        }

        if (*tame_cmd) {
            const Scalar value = tame_symbol(parse_series(ctx, *f_spec, g.precision), parse_series(ctx, *g_spec, g.precision));
            emit(g, {{"field", ctx.name()}, {"tame", scalar_json(value)}}, value.to_string());
            return kExitOk;
        }

        if (*verify_cmd) {
            const VerifyReport report = run_verify(suite, {g.seed, cases, g.precision});
            if (g.json) {
                std::cout << report.to_json().dump(2) << "\n";
            } else {
                std::cout << report.to_text();
            }
            return report.all_pass() ? kExitOk : kExitFailed;
        }
    } catch (const InsufficientPrecision& e) {
        std::cerr << "insufficient precision: " << e.what() << "; rerun with --precision " << e.required()
                  << " or more\n";
        return kExitPrecision;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
