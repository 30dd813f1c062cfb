// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <variant>

#include "oracles.hpp"
#include "tate/det_lines.hpp"
#include "tate/errors.hpp"
#include "tate/index_map.hpp"
#include "tate/random.hpp"
#include "tate/simplicial_kit.hpp"

using namespace tate;

namespace {

const FieldCtx Q = FieldCtx::rationals();
const FieldCtx F3 = FieldCtx::prime(3);
const FieldCtx F5 = FieldCtx::prime(5);
constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
    long checks = 0;
    long failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

/// Laplace expansion along the first row.
LaurentPoly leibniz(const LaurentMatrix& m, std::vector<int> rows, int col) {
    if (rows.empty()) return LaurentPoly::constant(m.ctx(), 1);
    LaurentPoly out = LaurentPoly::constant(m.ctx(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto rest = rows;
        rest.erase(rest.begin() + static_cast<long>(i));
        const LaurentPoly term = m(rows[i], col) * leibniz(m, rest, col + 1);
        out = i % 2 == 0 ? out + term : out - term;
    }
    return out;
}

/// v(det g) summed factor by factor.
long det_valuation_oracle(const Automorphism& g) {
    long v = 0;
    for (const auto& f : g.factors()) {
        if (const auto* m = std::get_if<MultBy>(&f)) {
            v += g.space().rank * m->f.valuation();
        } else {
            const auto& gl = std::get<GLn>(f).m;
            std::vector<int> rows(static_cast<std::size_t>(gl.n()));
            for (int r = 0; r < gl.n(); ++r) rows[static_cast<std::size_t>(r)] = r;
            v += leibniz(gl, rows, 0).valuation();
        }
    }
    return v;
}

Outcome winding_number() {
    Outcome o;
    Rng rng(kSeed + 1);
    for (const FieldCtx& ctx : {Q, F5}) {
        for (int i = 0; i < 50; ++i) {
            const auto f = random_unit_poly(rng, ctx, rng.uniform(-5, 5), 3);
            o.expect(index0(Automorphism::mult_by(TateSpace{ctx, 1}, f)) == f.valuation(), ctx.name() + " " + f.to_string());
        }
    }
    return o;
}

Outcome choice_independence() {
    Outcome o;
    Rng rng(kSeed + 2);
    for (int a = 0; a < 20; ++a) {
        const TateSpace v{a % 3 == 0 ? Q : F3, static_cast<int>(rng.uniform(1, 2))};
        const auto g = random_automorphism(rng, v, 2);
        std::optional<long> first;
        for (int c = 0; c < 10; ++c) {
            const auto l = random_lattice(rng, v, 2);
            const auto n = join(join(l, act(g, l)), random_lattice(rng, v, 3));
            const long value = index0_with(g, l, n);
            if (!first) first = value;
            o.expect(value == *first, g.to_string());
        }
        o.expect(*first == index0(g), "index0 " + g.to_string());
    }
    return o;
}

Outcome euler_equality() {
    Outcome o;
    Rng rng(kSeed + 3);
    for (int i = 0; i < 100; ++i) {
        const TateSpace v{i % 4 == 0 ? Q : F3, static_cast<int>(rng.uniform(1, 2))};
        const auto g = random_automorphism(rng, v, 2);
        const auto l = random_lattice(rng, v, 2);
        const auto n = meet(meet(l, act(g, l)), random_lattice(rng, v, 3));
        o.expect(euler0(g, l, n) == index0(g), g.to_string());
    }
    return o;
}

Outcome additivity() {
    Outcome o;
    Rng rng(kSeed + 4);
    const TateSpace v{F3, 2};
    for (int i = 0; i < 200; ++i) {
        const auto g = random_automorphism(rng, v, 2), h = random_automorphism(rng, v, 2);
        o.expect(check_additivity(g, h), g.to_string() + " ; " + h.to_string());
        // independent oracle: valuation of the determinant
        o.expect(index0(compose(g, h)) == det_valuation_oracle(g) + det_valuation_oracle(h), "v(det) " + g.to_string());
    }
    return o;
}

Outcome family_construction() {
    Outcome o;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(kSeed + 100 + seed);
        for (int k = 1; k <= 3; ++k) {
            const TateSpace v{seed % 5 == 0 ? Q : F3, static_cast<int>(rng.uniform(1, 2))};
            std::vector<Automorphism> chain;
            while (static_cast<int>(chain.size()) < k) {
                auto g = random_automorphism(rng, v, 2);
                if (!g.is_identity()) chain.push_back(std::move(g));
            }
            const auto fam = build_family(chain);
            const auto report = verify_family(fam);
            for (const auto& c : report.checks)
                o.expect(c.pass, "seed " + std::to_string(seed) + " " + c.check + " " + c.simplex + " " + c.detail);

            // (c)-fault: a lattice escaping the enclosing one.
            auto broken_c = fam;
            const unsigned full = (1u << (k + 1)) - 1;
            const Lattice& top = fam.at(fam.top(), full);
            broken_c.set(fam.top(), 1, std_lattice(v, std::vector<long>(static_cast<std::size_t>(v.rank), -top.b() - 1)));
            o.expect(!verify_family(broken_c).all_pass(), "fault (c) undetected");

            // (b)-fault: an edge lattice replaced by its untranslated vertex.
            auto broken_b = fam;
            if (fam.at(0b011, 0b01) != fam.at(0b001, 0b1)) {
                broken_b.set(0b011, 0b01, fam.at(0b001, 0b1));
                o.expect(!verify_family(broken_b).all_pass(), "fault (b) undetected");
            }
        }
    }
    return o;
}

Outcome cocycle() {
    Outcome o;
    Rng rng(kSeed + 6);
    for (const FieldCtx& ctx : {F5, Q}) {
        const TateSpace v{ctx, 1};
        for (int i = 0; i < 100; ++i) {
            const auto f1 = random_lattice(rng, v, 3), f2 = random_lattice(rng, v, 3);
            const auto f3 = random_lattice(rng, v, 3), f4 = random_lattice(rng, v, 3);
            o.expect(cocycle_check(f1, f2, f3, f4, LineMode::Ungraded), "ungraded " + ctx.name());
            o.expect(cocycle_check(f1, f2, f3, f4, LineMode::Graded), "graded " + ctx.name());
        }
        for (long s3 = -3; s3 <= 3; ++s3)
            for (long s2 = s3; s2 <= 3; ++s2)
                for (long s1 = s2; s1 <= 3; ++s1) {
                    const auto a = std_lattice(v, s1), b = std_lattice(v, s2), c = std_lattice(v, s3);
                    o.expect(omega(a, b, c, LineMode::Ungraded).is_one() && omega(a, b, c, LineMode::Graded).is_one(),
                             "nested omega");
                }
    }
    return o;
}

Outcome commutator_formula() {
    Outcome o;
    Rng rng(kSeed + 7);
    for (const FieldCtx& ctx : {F5, Q}) {
        const TateSpace v{ctx, 1};
        for (int i = 0; i < 100; ++i) {
            const auto f = random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2);
            const auto g = random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2);
            const auto fa = Automorphism::mult_by(v, f), ga = Automorphism::mult_by(v, g);
            const Scalar u = commutator(fa, ga, LineMode::Ungraded);
            const Scalar gr = commutator(fa, ga, LineMode::Graded);
            o.expect(u == oracle::closed_commutator(f, g, false), f.to_string() + " , " + g.to_string());
            const long sign = (f.valuation() * g.valuation()) % 2 == 0 ? 1 : -1;
            o.expect(gr / u == Scalar(ctx, sign), "graded ratio");
        }
        for (int i = 0; i < 50; ++i) {
            std::array<Automorphism, 3> x{
                Automorphism::mult_by(v, random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2)),
                Automorphism::mult_by(v, random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2)),
                Automorphism::mult_by(v, random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2))};
            for (auto mode : {LineMode::Ungraded, LineMode::Graded}) {
                o.expect(commutator(compose(x[0], x[1]), x[2], mode) ==
                             commutator(x[0], x[2], mode) * commutator(x[1], x[2], mode),
                         "left bimultiplicativity");
                o.expect(commutator(x[0], compose(x[1], x[2]), mode) ==
                             commutator(x[0], x[1], mode) * commutator(x[0], x[2], mode),
                         "right bimultiplicativity");
            }
        }
    }
    return o;
}

Outcome dimension_torsor() {
    Outcome o;
    Rng rng(kSeed + 8);
    for (int i = 0; i < 100; ++i) {
        const TateSpace v{F3, static_cast<int>(rng.uniform(1, 2))};
        const DimensionTheory d{random_lattice(rng, v, 2), rng.uniform(-5, 5)};
        const auto a = random_lattice(rng, v, 3), b = random_lattice(rng, v, 3);
        const auto lo = meet(a, b), hi = join(a, b);
        o.expect(d.eval(hi) == d.eval(lo) + quotient_dim(lo, hi), "nested relation");
    }
    for (int rank = 1; rank <= 2; ++rank) {
        const TateSpace v{F3, rank};
        const DimensionTheory d1{random_lattice(rng, v, 2), rng.uniform(-5, 5)};
        const DimensionTheory d2{random_lattice(rng, v, 2), rng.uniform(-5, 5)};
        const long diff = d1.eval(std_lattice(v)) - d2.eval(std_lattice(v));
        for (int i = 0; i < 20; ++i) {
            const auto l = random_lattice(rng, v, 3);
            o.expect(d1.eval(l) - d2.eval(l) == diff, "constant difference");
        }
    }
    return o;
}

Outcome determinant_coherence() {
    Outcome o;
    Rng rng(kSeed + 9);
    for (int i = 0; i < 50; ++i) {
        const TateSpace v{F3, static_cast<int>(rng.uniform(1, 2))};
        const DeterminantTheory d{random_lattice(rng, v, 2)};
        const auto a = random_lattice(rng, v, 3), b = random_lattice(rng, v, 3), c = random_lattice(rng, v, 3);
        const auto mid = join(a, b);
        o.expect(d.coherence(meet(a, b), mid, join(mid, c)), "coherence");
    }
    return o;
}

Outcome ex_sd_agreement() {
    Outcome o;
    for (int size = 1; size <= 4; ++size) {
        for (const auto& p : oracle::all_posets(size)) {
            for (int n = 0; n <= 2; ++n) {
                const auto fams = ex_poset(p, n);
                const std::set<ExFamily> got(fams.begin(), fams.end());
                o.expect(got.size() == fams.size() && got == oracle::sd_maps(p, n),
                         "poset of size " + std::to_string(size) + ", n=" + std::to_string(n));
            }
        }
    }
    const auto nv = nerve(sd_ordinal(1));
    std::vector<int> edges;
    for (int e = 0; e < nv.set.count[1]; ++e)
        if (!nv.set.is_degenerate(1, e)) edges.push_back(e);
    o.expect(nv.set.count[0] == 3 && edges.size() == 2, "sd([1]) has three vertices and two edges");
    if (edges.size() == 2) {
        o.expect(nv.set.d(1, 0, edges[0]) == nv.set.d(1, 0, edges[1]), "edges share their end");
        o.expect(nv.set.d(1, 1, edges[0]) != nv.set.d(1, 1, edges[1]), "edges have distinct starts");
    }
    o.expect(nv.set.nondegenerate_count(2) == 0, "no 2-simplices");
    return o;
}

Outcome k0_decomposition() {
    Outcome o;
    Rng rng(kSeed + 11);
    const FieldCtx f2 = FieldCtx::prime(2);
    const auto b1 = b_interval(1), b2 = b_interval(2);
    const FramedPoset frame2(b2, star_tree(b2.poset));
    for (int i = 0; i < 100; ++i) {
        const auto f = random_diagram(rng, b2.poset, f2, 4);
        const auto d = k0_decompose(f, frame2);
        for (int x = 0; x < b2.poset.size(); ++x) o.expect(k0_reconstruct(d, frame2, x) == f.dim(x), "B[2] reconstruction");
        long sum = 0;
        for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 2}})
            sum += preindex_k0(pullback(f, b1.poset, phi_interval(a, b)), b1.base_points)[0];
        o.expect(sum == preindex_k0(pullback(f, b1.poset, phi_interval(0, 2)), b1.base_points)[0], "chain rule");
    }
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        const auto p = random_filtered_poset(rng, n);
        std::vector<int> minimal;
        for (int x = 0; x < n; ++x)
            if (p.is_minimal(x)) minimal.push_back(x);
        const FramedPoset frame({p, minimal}, star_tree(p));
        const auto f = random_diagram(rng, p, f2, 4);
        const auto d = k0_decompose(f, frame);
        for (int x = 0; x < n; ++x) o.expect(k0_reconstruct(d, frame, x) == f.dim(x), "filtered reconstruction");
        o.expect(preindex_k0(f, minimal) == preindex_via_max(f, minimal), "pre-index routes");
    }
    return o;
}

/// stdout and exit status of a shell command.
std::pair<std::string, int> run(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {"", -1};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome determinism() {
    Outcome o;
    const std::string cmd = std::string("\"") + TATE_CLI_PATH + "\" --json verify --suite all --seed 7";
    const auto [first, code1] = run(cmd);
    const auto [second, code2] = run(cmd);
    o.expect(code1 == 0 && code2 == 0, "exit codes " + std::to_string(code1) + ", " + std::to_string(code2));
    o.expect(!first.empty() && first == second, "reports differ");
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "winding number", 5, winding_number},
        {2, "choice independence", 30, choice_independence},
        {3, "euler characteristic equals index", 30, euler_equality},
        {4, "additivity at K0", 60, additivity},
        {5, "lattice family construction", 120, family_construction},
        {6, "omega cocycle and nested normalization", 60, cocycle},
        {7, "commutator formula", 120, commutator_formula},
        {8, "dimension torsor", 600, dimension_torsor},
        {9, "determinant theory coherence", 600, determinant_coherence},
        {10, "Ex and sd agreement", 600, ex_sd_agreement},
        {11, "K0 decomposition and pre-index", 600, k0_decomposition},
        {12, "verify determinism", 600, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.failures == 0 && o.checks > 0 && in_time;
        failed += pass ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.checks << " checks, "
             << o.failures << " failures, " << secs << " s";
        if (!in_time) line << " (budget " << c.budget_seconds << " s exceeded)";
        if (o.failures > 0) line << "; first failure: " << o.first_failure;
        std::cout << line.str() << std::endl;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
