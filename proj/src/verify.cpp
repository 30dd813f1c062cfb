#include "tate/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tate/det_lines.hpp"
#include "tate/errors.hpp"
#include "tate/index_map.hpp"
#include "tate/random.hpp"
#include "tate/simplicial_kit.hpp"

namespace tate {

namespace {

class Recorder {
public:
    Recorder(SuiteResult& r, int case_id) : r_(r), case_id_(case_id) {}

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        auto& t = r_.checks[name];
        if (ok) {
            ++t.passed;
        } else {
            ++t.failed;
            r_.failures.push_back({case_id_, name, detail});
        }
    }

private:
    SuiteResult& r_;
    int case_id_;
};

using CaseFn = std::function<void(Rng&, Recorder&, const VerifyOptions&, int)>;

Scalar closed_formula(const LaurentPoly& f, const LaurentPoly& g) {
    const long vf = f.valuation(), vg = g.valuation();
    return f.coeff(vf).pow(vg) / g.coeff(vg).pow(vf);
}

Lattice uniform_shift(const TateSpace& v, long shift) {
    std::vector<long> s(static_cast<std::size_t>(v.rank), shift);
    return std_lattice(v, s);
}

void lattice_case(Rng& rng, Recorder& rec, const VerifyOptions& opt, int) {
    const FieldCtx f3 = FieldCtx::prime(3);
    const TateSpace v{f3, static_cast<int>(rng.uniform(1, 2))};
    const auto l = random_lattice(rng, v, 3), m = random_lattice(rng, v, 3), n = random_lattice(rng, v, 3);
    const auto j = join(l, m), mt = meet(l, m);
    rec.check("directed", leq(l, j) && leq(m, j) && leq(mt, l) && leq(mt, m));
    rec.check("idempotent", join(l, l) == l && meet(l, l) == l);
    rec.check("commutative", j == join(m, l) && mt == meet(m, l));
    rec.check("associative", join(join(l, m), n) == join(l, join(m, n)) && meet(meet(l, m), n) == meet(l, meet(m, n)));
    rec.check("modular_dims", quotient_dim(mt, l) == quotient_dim(m, j));
    const auto g = random_automorphism(rng, v, 2), h = random_automorphism(rng, v, 2);
    rec.check("act_order", leq(l, m) == leq(act(g, l), act(g, m)));
    rec.check("act_join", act(g, j) == join(act(g, l), act(g, m)));
    rec.check("act_compose", act(g, act(h, l)) == act(compose(g, h), l));
    rec.check("act_inverse", act(g.inverse(opt.precision), act(g, l)) == l);
    rec.check("normalize", Lattice::from_window(v, -l.b(), l.a(), l.w()) == l);
    rec.check("json_roundtrip", lattice_from_json(f3, lattice_to_json(l)) == l);
}

void index_case(Rng& rng, Recorder& rec, const VerifyOptions&, int id) {
    const FieldCtx ctx = id % 2 ? FieldCtx::prime(5) : FieldCtx::rationals();
    const auto f = random_unit_poly(rng, ctx, rng.uniform(-5, 5), 3);
    rec.check("winding_number", index0(Automorphism::mult_by(TateSpace{ctx, 1}, f)) == f.valuation(),
              f.to_string());

    const FieldCtx f3 = FieldCtx::prime(3);
    const auto gm = random_gl(rng, f3, 2);
    rec.check("gl_valuation", index0(Automorphism::gl(gm)) == det_laurent(gm).valuation(), gm.to_string());

    const TateSpace v{f3, static_cast<int>(rng.uniform(1, 2))};
    const auto g = random_automorphism(rng, v, 2);
    const long expected = index0(g);
    for (int c = 0; c < 3; ++c) {
        const auto l = random_lattice(rng, v, 2);
        const auto gl = act(g, l);
        const auto big = join(join(l, gl), random_lattice(rng, v, 2));
        const auto small = meet(meet(l, gl), random_lattice(rng, v, 2));
        rec.check("choice_independence", index0_with(g, l, big) == expected, g.to_string());
        rec.check("euler_equals_index", euler0(g, l, small) == expected, g.to_string());
    }
    const TateSpace v2{f3, 2};
    const auto a = random_automorphism(rng, v2, 2), b = random_automorphism(rng, v2, 2);
    rec.check("additivity", check_additivity(a, b), a.to_string() + " ; " + b.to_string());
}

void family_case(Rng& rng, Recorder& rec, const VerifyOptions& opt, int id) {
    const FieldCtx f3 = FieldCtx::prime(3);
    const TateSpace v{f3, static_cast<int>(rng.uniform(1, 2))};
    const int k = id % 3 + 1;
    std::vector<Automorphism> chain;
    while (static_cast<int>(chain.size()) < k) {
        auto g = random_automorphism(rng, v, 2);
        if (!g.is_identity()) chain.push_back(std::move(g));
    }
    const auto fam = build_family(chain);
    const auto report = verify_family(fam, opt.precision);
    for (const auto& c : report.checks) rec.check("family_" + c.check, c.pass, c.simplex + " " + c.detail);
    for (FaceMask face = 1; face <= fam.top(); ++face) {
        if (std::popcount(face) != 2) continue;
        rec.check("loop_index", loop_index(fam, face) == index0(fam.face_chain(face).front()), mask_to_string(face));
    }
    auto broken = fam;
    const Lattice& full = fam.at(fam.top(), (1u << (k + 1)) - 1);
    broken.set(fam.top(), 1, uniform_shift(v, -full.b() - 1));
    rec.check("fault_detected", !verify_family(broken, opt.precision).all_pass());
}

void detline_case(Rng& rng, Recorder& rec, const VerifyOptions&, int id) {
    const FieldCtx ctx = id % 2 ? FieldCtx::rationals() : FieldCtx::prime(5);
    const TateSpace v{ctx, 1};
    const auto f1 = random_lattice(rng, v, 3), f2 = random_lattice(rng, v, 3);
    const auto f3 = random_lattice(rng, v, 3), f4 = random_lattice(rng, v, 3);
    rec.check("cocycle_ungraded", cocycle_check(f1, f2, f3, f4, LineMode::Ungraded));
    rec.check("cocycle_graded", cocycle_check(f1, f2, f3, f4, LineMode::Graded));

    const long s3 = rng.uniform(-3, 3), s2 = s3 + rng.uniform(0, 2), s1 = s2 + rng.uniform(0, 2);
    rec.check("nested_normalization", omega(std_lattice(v, s1), std_lattice(v, s2), std_lattice(v, s3)).is_one());

    const auto fp = random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2);
    const auto gp = random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2);
    const auto hp = random_unit_poly(rng, ctx, rng.uniform(-3, 3), 2);
    const auto f = Automorphism::mult_by(v, fp), g = Automorphism::mult_by(v, gp), h = Automorphism::mult_by(v, hp);
    const Scalar u = commutator(f, g, LineMode::Ungraded), gr = commutator(f, g, LineMode::Graded);
    rec.check("commutator_formula", u == closed_formula(fp, gp), fp.to_string() + " , " + gp.to_string());
    const bool odd = (fp.valuation() % 2 != 0) && (gp.valuation() % 2 != 0);
    rec.check("graded_ratio", gr / u == Scalar(ctx, odd ? -1L : 1L));
    rec.check("tame_symbol", gr == tame_symbol(fp, gp));
    rec.check("bimultiplicative",
              commutator(compose(f, g), h, LineMode::Ungraded) ==
                      commutator(f, h, LineMode::Ungraded) * commutator(g, h, LineMode::Ungraded) &&
                  commutator(f, compose(g, h), LineMode::Ungraded) ==
                      commutator(f, g, LineMode::Ungraded) * commutator(f, h, LineMode::Ungraded));
    auto lift = [&](const Automorphism& a) {
        auto x = ext_lift(a, LineMode::Ungraded);
        x.z = random_scalar(rng, ctx, true);
        return x;
    };
    const auto x = lift(f), y = lift(g), z = lift(h);
    rec.check("ext_associative", ext_mul(ext_mul(x, y), z).z == ext_mul(x, ext_mul(y, z)).z);

    const TateSpace w{FieldCtx::prime(3), static_cast<int>(rng.uniform(1, 2))};
    const DimensionTheory d{random_lattice(rng, w, 2), rng.uniform(-5, 5)};
    const auto a = random_lattice(rng, w, 3), b = random_lattice(rng, w, 3), c = random_lattice(rng, w, 3);
    const auto lo = meet(a, b), mid = join(a, b), hi = join(mid, c);
    rec.check("dimension_relation", d.eval(mid) == d.eval(lo) + quotient_dim(lo, mid));
    const DimensionTheory d2{random_lattice(rng, w, 2), rng.uniform(-5, 5)};
    rec.check("dimension_torsor", d.eval(a) - d2.eval(a) == d.eval(b) - d2.eval(b));
    rec.check("determinant_coherence", DeterminantTheory{random_lattice(rng, w, 2)}.coherence(lo, mid, hi));
}

void simplicial_case(Rng& rng, Recorder& rec, const VerifyOptions&, int) {
    const FieldCtx f2 = FieldCtx::prime(2);
    const int n = static_cast<int>(rng.uniform(1, 6));
    const auto p = random_filtered_poset(rng, n);
    rec.check("nerve_identities", nerve(p, 3).set.audit().empty());
    if (n <= 4) rec.check("ex_identities", ex_simplicial_set(p, 2).audit().empty());
    rec.check("star_tree_admissible", is_admissible_tree(gamma(p), star_tree(p)));

    std::vector<int> minimal;
    for (int x = 0; x < n; ++x)
        if (p.is_minimal(x)) minimal.push_back(x);
    const FramedPoset frame({p, minimal}, star_tree(p));
    const auto f = random_diagram(rng, p, f2, 4);
    const auto dec = k0_decompose(f, frame);
    bool ok = true;
    for (int x = 0; x < n; ++x) ok = ok && k0_reconstruct(dec, frame, x) == f.dim(x);
    rec.check("k0_reconstruction", ok);
    rec.check("preindex_routes_agree", preindex_k0(f, minimal) == preindex_via_max(f, minimal));

    const auto b1 = b_interval(1), b2 = b_interval(2);
    const auto g = random_diagram(rng, b2.poset, f2, 4);
    long sum = 0;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}})
        sum += preindex_k0(pullback(g, b1.poset, phi_interval(i, j)), b1.base_points)[0];
    rec.check("chain_rule", sum == preindex_k0(pullback(g, b1.poset, phi_interval(0, 2)), b1.base_points)[0]);
    const FramedPoset frame2(b2, star_tree(b2.poset));
    const auto dec2 = k0_decompose(g, frame2);
    ok = true;
    for (int x = 0; x < b2.poset.size(); ++x) ok = ok && k0_reconstruct(dec2, frame2, x) == g.dim(x);
    rec.check("k0_reconstruction", ok);
}

CaseFn suite_fn(const std::string& name) {
    if (name == "lattice") return lattice_case;
    if (name == "index") return index_case;
    if (name == "family") return family_case;
    if (name == "detline") return detline_case;
    if (name == "simplicial") return simplicial_case;
    throw ParseError("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name, std::uint64_t salt, const VerifyOptions& opt) {
    SuiteResult r;
    r.name = name;
    const CaseFn fn = suite_fn(name);
    Rng root(opt.seed ^ (0x5bd1e995ULL * (salt + 1)));
    for (int id = 0; id < opt.cases; ++id) {
        Rng rng = root.fork(static_cast<std::uint64_t>(id));
        Recorder rec(r, id);
        try {
            fn(rng, rec, opt, id);
        } catch (const Error& e) {
            rec.check("no_exception", false, e.what());
        }
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lattice", "index", "family", "detline", "simplicial"};
    return names;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
    if (options.cases < 0) throw ParseError("--cases must be non-negative");
    VerifyReport report{options, {}};
    const auto& names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (suite == "all" || suite == names[i]) report.suites.push_back(run_suite(names[i], i, options));
    }
    if (report.suites.empty()) throw ParseError("unknown suite '" + suite + "'");
    return report;
}

bool VerifyReport::all_pass() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.all_pass(); });
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json out;
    out["seed"] = options.seed;
    out["cases"] = options.cases;
    out["precision"] = options.precision;
    out["status"] = all_pass() ? "pass" : "fail";
    nlohmann::json suites_json = nlohmann::json::object();
    for (const auto& s : suites) {
        nlohmann::json checks = nlohmann::json::object();
        for (const auto& [name, t] : s.checks) checks[name] = {{"passed", t.passed}, {"failed", t.failed}};
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& f : s.failures)
            failures.push_back({{"case", f.case_id}, {"check", f.check}, {"detail", f.detail}});
        suites_json[s.name] = {
            {"status", s.all_pass() ? "pass" : "fail"}, {"checks", checks}, {"failures", failures}};
    }
    out["suites"] = suites_json;
    return out;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "seed " << options.seed << ", " << options.cases << " cases per suite\n";
    for (const auto& s : suites) {
        long passed = 0, failed = 0;
        for (const auto& [name, t] : s.checks) {
            passed += t.passed;
            failed += t.failed;
        }
        os << (s.all_pass() ? "PASS " : "FAIL ") << s.name << ": " << passed << " passed, " << failed
           << " failed\n";
        for (const auto& f : s.failures)
            os << "  case " << f.case_id << " " << f.check << (f.detail.empty() ? "" : ": " + f.detail) << "\n";
    }
    os << (all_pass() ? "all checks passed\n" : "verification failed\n");
    return os.str();
}

}  // namespace tate
