#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/random.hpp"
#include "tate/subspace.hpp"

namespace tate {

/// Finite poset on elements 0..n-1. The relation is checked for
/// reflexivity, antisymmetry and transitivity on construction.
class FinPoset {
public:
    FinPoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);
    /// Reflexive-transitive closure of the given relations x <= y.
    static FinPoset from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& rel);
    /// The ordinal [n] = {0 < 1 < ... < n}.
    static FinPoset ordinal(int n);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool is_minimal(int x) const;
    /// The final element, if any.
    std::optional<int> maximum() const;

    friend bool operator==(const FinPoset& a, const FinPoset& b) { return a.leq_ == b.leq_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

/// Levels 0..cap with face tables face[n][i][x] (n >= 1) and degeneracy
/// tables degen[n][i][x] (n < cap).
struct FinSimplicialSet {
    int cap = 0;
    std::vector<int> count;
    std::vector<std::vector<std::vector<int>>> face;
    std::vector<std::vector<std::vector<int>>> degen;

    int d(int n, int i, int x) const { return face[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]; }
    int s(int n, int i, int x) const { return degen[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]; }
    bool is_degenerate(int n, int x) const;
    int nondegenerate_count(int n) const;

    /// Every failed simplicial identity, as a readable line; empty when all hold.
    std::vector<std::string> audit() const;
};

/// n-simplices are weakly increasing chains x_0 <= ... <= x_n.
struct Nerve {
    FinSimplicialSet set;
    std::vector<std::vector<std::vector<int>>> simplices;  // [level][index] -> chain
};
Nerve nerve(const FinPoset& p, int cap = 4);

/// Non-empty subsets of [n] ordered by inclusion; element i is subset mask i+1.
FinPoset sd_ordinal(int n);

/// Families (x_I) over non-empty I ⊆ [n] with x_I <= x_J for I ⊆ J; entry
/// mask-1 holds x_I for I given as a bitmask.
using ExFamily = std::vector<int>;
std::vector<ExFamily> ex_poset(const FinPoset& p, int n);
/// J ↦ x_{d^i(J)}.
ExFamily ex_face(const ExFamily& x, int n, int i);
/// J ↦ x_{s^i(J)}.
ExFamily ex_degeneracy(const ExFamily& x, int n, int i);
/// Ex(N P) truncated at `cap`, built from ex_poset, ex_face and ex_degeneracy.
FinSimplicialSet ex_simplicial_set(const FinPoset& p, int cap);

struct OrientedGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
};
/// Vertices of P, an edge x -> y for every x < y.
OrientedGraph gamma(const FinPoset& p);

/// T is a spanning tree of G and every two vertices reach a common vertex
/// along oriented paths in T.
bool is_admissible_tree(const OrientedGraph& g, const std::vector<std::pair<int, int>>& tree);
/// Edges x -> m for the final element m. InvalidPoset without one.
std::vector<std::pair<int, int>> star_tree(const FinPoset& p);

std::string to_dot(const OrientedGraph& g, const std::vector<std::pair<int, int>>& tree = {});

struct BasedPoset {
    FinPoset poset;
    std::vector<int> base_points;
};
/// Non-empty intervals of [k] by inclusion; base points the singletons.
BasedPoset b_interval(int k);
/// Element index of the interval [i, j] in b_interval(k).
int b_interval_index(int k, int i, int j);

/// Validated: final element, minimal base points, admissible spanning tree.
struct FramedPoset {
    FramedPoset(BasedPoset based, std::vector<std::pair<int, int>> tree);

    BasedPoset based;
    std::vector<std::pair<int, int>> tree;
};

/// x <= y implies F(x) ⊆ F(y).
class AdmissibleDiagram {
public:
    AdmissibleDiagram(FinPoset poset, std::vector<Subspace> values);

    const FinPoset& poset() const noexcept { return poset_; }
    const Subspace& at(int x) const { return values_[static_cast<std::size_t>(x)]; }
    long dim(int x) const { return static_cast<long>(at(x).dim()); }

private:
    FinPoset poset_;
    std::vector<Subspace> values_;
};

/// F ∘ phi for a monotone map phi: domain -> F.poset().
AdmissibleDiagram pullback(const AdmissibleDiagram& f, const FinPoset& domain, const std::vector<int>& phi);
/// φ_ij: B[1] -> B[2], {0} ↦ {i}, {1} ↦ {j}, {0,1} ↦ [i, j].
std::vector<int> phi_interval(int i, int j);

struct K0Decomposition {
    long d0 = 0;
    std::map<std::pair<int, int>, long> edge_dims;
};
/// (dim F(x_0), dim F(y')/F(y) per tree edge). FrameMismatch unless the
/// frame is on F's poset.
K0Decomposition k0_decompose(const AdmissibleDiagram& f, const FramedPoset& frame);
/// dim F(x) from d0 and signed edge dims along the tree path x_0 ~ x.
long k0_reconstruct(const K0Decomposition& d, const FramedPoset& frame, int x);

/// dim F(x_{i+1}) - dim F(x_i), i = 0..k-1.
std::vector<long> preindex_k0(const AdmissibleDiagram& f, const std::vector<int>& base_points);
/// dim F(m)/F(x_i) - dim F(m)/F(x_{i+1}) with m the final element.
std::vector<long> preindex_via_max(const AdmissibleDiagram& f, const std::vector<int>& base_points);

/// Filtered poset with `n` elements: a random order on n-1 elements plus a top.
FinPoset random_filtered_poset(Rng& rng, int n);
/// F(x) = span of random generators attached to all z <= x.
AdmissibleDiagram random_diagram(Rng& rng, const FinPoset& p, const FieldCtx& ctx, std::size_t ambient);

}  // namespace tate
