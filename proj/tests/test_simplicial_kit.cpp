#include <doctest.h>

#include "oracles.hpp"
#include "tate/errors.hpp"
#include "tate/simplicial_kit.hpp"

using namespace tate;

namespace {

const FieldCtx F2 = FieldCtx::prime(2);

Subspace span_rows(std::initializer_list<std::initializer_list<long>> rows) {
    return Subspace::span(Matrix::from_ints(F2, rows));
}

}  // namespace

TEST_CASE("posets are validated") {
    CHECK_THROWS_AS(FinPoset({"a", "b"}, {{true, true}, {true, true}}), InvalidPoset);
    CHECK_THROWS_AS(FinPoset({"a", "b"}, {{false, false}, {false, true}}), InvalidPoset);
    CHECK_THROWS_AS(FinPoset({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
                    InvalidPoset);
    const auto p = FinPoset::from_relations({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.maximum() == 2);
    CHECK(p.is_minimal(0));
    CHECK_FALSE(p.is_minimal(1));
    CHECK(oracle::all_posets(3).size() == 19);
    CHECK(oracle::all_posets(4).size() == 219);
}

TEST_CASE("nerve examples") {
    const auto point = nerve(FinPoset::ordinal(0));
    for (int n = 0; n <= 4; ++n) CHECK(point.set.count[static_cast<std::size_t>(n)] == 1);
    for (int n = 1; n <= 4; ++n) CHECK(point.set.nondegenerate_count(n) == 0);

    const auto one = nerve(FinPoset::ordinal(1));
    CHECK(one.set.count[1] == 3);
    CHECK(one.set.nondegenerate_count(1) == 1);
    CHECK(one.set.nondegenerate_count(2) == 0);

    const auto b1 = nerve(b_interval(1).poset);
    CHECK(b1.set.count[0] == 3);
    CHECK(b1.set.nondegenerate_count(1) == 2);
    CHECK(b1.set.nondegenerate_count(2) == 0);
}

TEST_CASE("subdivision examples") {
    CHECK(sd_ordinal(0).size() == 1);
    const auto sd2 = sd_ordinal(2);
    CHECK(sd2.size() == 7);
    int maximal = 0;
    for (int x = 0; x < sd2.size(); ++x) {
        bool top = true;
        for (int y = 0; y < sd2.size(); ++y) top = top && !sd2.lt(x, y);
        maximal += top;
    }
    CHECK(maximal == 1);  // [2] itself; the three 2-element subsets are maximal among proper ones
    int two_element = 0;
    for (int x = 0; x < sd2.size(); ++x) two_element += std::popcount(static_cast<unsigned>(x + 1)) == 2;
    CHECK(two_element == 3);

    // sd([1]): two 1-simplices glued at their ends.
    const auto n = nerve(sd_ordinal(1));
    CHECK(n.set.count[0] == 3);
    std::vector<int> edges;
    for (int e = 0; e < n.set.count[1]; ++e)
        if (!n.set.is_degenerate(1, e)) edges.push_back(e);
    REQUIRE(edges.size() == 2);
    CHECK(n.set.d(1, 0, edges[0]) == n.set.d(1, 0, edges[1]));
    CHECK(n.set.d(1, 1, edges[0]) != n.set.d(1, 1, edges[1]));
}

TEST_CASE("simplicial identities hold") {
    for (const auto& p : oracle::all_posets(3)) {
        CHECK(nerve(p).set.audit().empty());
        CHECK(ex_simplicial_set(p, 3).audit().empty());
    }
    CHECK(nerve(b_interval(2).poset).set.audit().empty());
    CHECK(nerve(sd_ordinal(2), 3).set.audit().empty());
}

TEST_CASE("ex_poset examples") {
    const auto p = FinPoset::from_relations({"a", "b", "c"}, {{0, 1}});
    CHECK(ex_poset(p, 0).size() == 3);
    CHECK(ex_poset(FinPoset::ordinal(1), 1).size() == 5);
}

TEST_CASE("ex_poset agrees with maps out of the subdivision") {
    for (int size = 1; size <= 4; ++size) {
        for (const auto& p : oracle::all_posets(size)) {
            for (int n = 0; n <= 2; ++n) {
                const auto fams = ex_poset(p, n);
                const std::set<ExFamily> got(fams.begin(), fams.end());
                CHECK(got.size() == fams.size());
                CHECK(got == oracle::sd_maps(p, n));
            }
        }
    }
}

TEST_CASE("ex faces and degeneracies are restriction along cofaces") {
    const auto p = FinPoset::ordinal(2);
    for (const auto& x : ex_poset(p, 2)) {
        for (int i = 0; i <= 2; ++i) {
            const auto y = ex_face(x, 2, i);
            REQUIRE(y.size() == 3);
            for (unsigned j = 1; j <= 3; ++j) {
                // d^i: [1] -> [2] skips i.
                unsigned img = 0;
                for (int b = 0; b < 2; ++b)
                    if ((j >> b) & 1u) img |= 1u << (b < i ? b : b + 1);
                CHECK(y[j - 1] == x[img - 1]);
            }
        }
    }
    for (const auto& x : ex_poset(p, 1)) {
        const auto y = ex_degeneracy(x, 1, 0);
        REQUIRE(y.size() == 7);
        // s^0: [2] -> [1] sends 0, 1 to 0 and 2 to 1.
        for (unsigned j = 1; j <= 7; ++j) {
            unsigned img = 0;
            if (j & 3u) img |= 1u;
            if (j & 4u) img |= 2u;
            CHECK(y[j - 1] == x[img - 1]);
        }
    }
}

TEST_CASE("admissible trees") {
    // Left picture: c -> b, d -> b, b -> a. Right picture: c -> a, d -> b, d -> a.
    const OrientedGraph left{{"a", "b", "c", "d"}, {{2, 1}, {3, 1}, {1, 0}}};
    CHECK(is_admissible_tree(left, left.edges));
    const OrientedGraph right{{"a", "b", "c", "d"}, {{2, 0}, {3, 1}, {3, 0}}};
    CHECK_FALSE(is_admissible_tree(right, right.edges));

    const OrientedGraph single{{"x"}, {}};
    CHECK(is_admissible_tree(single, {}));

    const auto p = b_interval(2).poset;
    const auto g = gamma(p);
    CHECK(is_admissible_tree(g, star_tree(p)));
    CHECK_FALSE(is_admissible_tree(g, {}));
    CHECK_FALSE(is_admissible_tree(g, {{0, 5}}));
    CHECK_THROWS_AS(star_tree(FinPoset::from_relations({"a", "b"}, {})), InvalidPoset);

    for (int size = 1; size <= 4; ++size) {
        for (const auto& q : oracle::all_posets(size)) {
            if (q.maximum()) CHECK(is_admissible_tree(gamma(q), star_tree(q)));
        }
    }
    const auto dot = to_dot(g, star_tree(p));
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("style=bold") != std::string::npos);
}

TEST_CASE("interval posets") {
    const auto b0 = b_interval(0);
    CHECK(b0.poset.size() == 1);
    const auto b1 = b_interval(1);
    CHECK(b1.poset.size() == 3);
    CHECK(b1.base_points.size() == 2);
    const auto b2 = b_interval(2);
    CHECK(b2.poset.size() == 6);
    CHECK(b2.base_points == std::vector<int>{0, 1, 2});
    CHECK(b2.poset.maximum() == b_interval_index(2, 0, 2));
    CHECK(b2.poset.leq(b_interval_index(2, 1, 1), b_interval_index(2, 0, 1)));
    CHECK(b2.poset.leq(b_interval_index(2, 1, 1), b_interval_index(2, 1, 2)));
    CHECK_FALSE(b2.poset.leq(b_interval_index(2, 0, 0), b_interval_index(2, 1, 2)));
    // Three singletons, two doubletons, one tripleton.
    CHECK(b_interval_index(2, 2, 2) == 2);
    CHECK(b_interval_index(2, 0, 1) == 3);
    CHECK(b_interval_index(2, 1, 2) == 4);
    CHECK(b_interval_index(2, 0, 2) == 5);
}

TEST_CASE("k0 decomposition examples") {
    const auto chain = FinPoset::ordinal(2);
    const FramedPoset frame({chain, {0}}, {{0, 1}, {1, 2}});
    const AdmissibleDiagram f(chain, {Subspace::zero(F2, 2), span_rows({{1, 0}}), span_rows({{1, 0}, {0, 1}})});
    const auto d = k0_decompose(f, frame);
    CHECK(d.d0 == 0);
    CHECK(d.edge_dims.at({0, 1}) == 1);
    CHECK(d.edge_dims.at({1, 2}) == 1);
    for (int x = 0; x < 3; ++x) CHECK(k0_reconstruct(d, frame, x) == f.dim(x));

    const auto s = span_rows({{1, 1, 0}});
    const AdmissibleDiagram constant(chain, {s, s, s});
    const auto dc = k0_decompose(constant, frame);
    CHECK(dc.d0 == 1);
    for (const auto& [e, v] : dc.edge_dims) CHECK(v == 0);

    const FramedPoset other({b_interval(1).poset, {0, 1}}, star_tree(b_interval(1).poset));
    CHECK_THROWS_AS(k0_decompose(f, other), FrameMismatch);
    CHECK_THROWS_AS(AdmissibleDiagram(chain, {span_rows({{1, 0}}), Subspace::zero(F2, 2), span_rows({{1, 0}})}),
                    NotContained);
}

TEST_CASE("pre-index examples on B[2]") {
    const auto b2 = b_interval(2);
    std::vector<Subspace> vals(6, Subspace::whole(F2, 3));
    vals[static_cast<std::size_t>(b_interval_index(2, 0, 0))] = Subspace::zero(F2, 3);
    vals[static_cast<std::size_t>(b_interval_index(2, 1, 1))] = span_rows({{1, 0, 0}});
    vals[static_cast<std::size_t>(b_interval_index(2, 0, 1))] = span_rows({{1, 0, 0}});
    const AdmissibleDiagram f(b2.poset, vals);
    CHECK(preindex_k0(f, b2.base_points) == std::vector<long>{1, 2});
    CHECK(preindex_via_max(f, b2.base_points) == std::vector<long>{1, 2});

    long sum = 0;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}}) {
        const auto pulled = pullback(f, b_interval(1).poset, phi_interval(i, j));
        sum += preindex_k0(pulled, b_interval(1).base_points)[0];
    }
    const auto direct = pullback(f, b_interval(1).poset, phi_interval(0, 2));
    CHECK(sum == preindex_k0(direct, b_interval(1).base_points)[0]);

    const auto b1 = b_interval(1);
    const AdmissibleDiagram flat(b1.poset, std::vector<Subspace>(3, span_rows({{1, 0}})));
    CHECK(preindex_k0(flat, b1.base_points) == std::vector<long>{0});
}

TEST_CASE("random diagrams decompose and satisfy the chain rule") {
    Rng rng(71);
    const auto b1 = b_interval(1);
    const auto b2 = b_interval(2);
    const FramedPoset frame2(b2, star_tree(b2.poset));
    for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_diagram(rng, b2.poset, F2, 4);
        const auto d = k0_decompose(f, frame2);
        for (int x = 0; x < 6; ++x) CHECK(k0_reconstruct(d, frame2, x) == f.dim(x));
        const auto pre = preindex_k0(f, b2.base_points);
        CHECK(pre == preindex_via_max(f, b2.base_points));
        long sum = 0;
        for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}})
            sum += preindex_k0(pullback(f, b1.poset, phi_interval(i, j)), b1.base_points)[0];
        CHECK(sum == preindex_k0(pullback(f, b1.poset, phi_interval(0, 2)), b1.base_points)[0]);
        CHECK(sum == pre[0] + pre[1]);
    }
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 6));
        const auto p = random_filtered_poset(rng, n);
        REQUIRE(p.maximum());
        std::vector<int> minimal;
        for (int x = 0; x < n; ++x)
            if (p.is_minimal(x)) minimal.push_back(x);
        const FramedPoset frame({p, minimal}, star_tree(p));
        const auto f = random_diagram(rng, p, F2, 4);
        const auto d = k0_decompose(f, frame);
        for (int x = 0; x < n; ++x) CHECK(k0_reconstruct(d, frame, x) == f.dim(x));
        CHECK(preindex_k0(f, minimal) == preindex_via_max(f, minimal));
    }
}
