#include "tate/simplicial_kit.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "tate/errors.hpp"
#include "tate/masks.hpp"

namespace tate {

// ------------------------------------------------------------------- FinPoset

FinPoset::FinPoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
    const std::size_t n = labels_.size();
    if (leq_.size() != n) throw InvalidPoset("relation table has the wrong size");
    for (const auto& row : leq_)
        if (row.size() != n) throw InvalidPoset("relation table has the wrong size");
    for (std::size_t x = 0; x < n; ++x) {
        if (!leq_[x][x]) throw InvalidPoset("relation is not reflexive at " + labels_[x]);
        for (std::size_t y = 0; y < n; ++y) {
            if (x != y && leq_[x][y] && leq_[y][x]) {
                throw InvalidPoset("relation is not antisymmetric on " + labels_[x] + ", " + labels_[y]);
            }
            for (std::size_t z = 0; z < n; ++z) {
                if (leq_[x][y] && leq_[y][z] && !leq_[x][z]) {
                    throw InvalidPoset("relation is not transitive on " + labels_[x] + ", " + labels_[y] + ", " +
                                       labels_[z]);
                }
            }
        }
    }
}

FinPoset FinPoset::from_relations(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& rel) {
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) leq[x][x] = true;
    for (const auto& [x, y] : rel) {
        if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
            throw InvalidPoset("relation refers to a missing element");
        }
        leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x)
            if (leq[x][k])
                for (std::size_t y = 0; y < n; ++y)
                    if (leq[k][y]) leq[x][y] = true;
    return FinPoset(std::move(labels), std::move(leq));
}

FinPoset FinPoset::ordinal(int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        if (i) rel.emplace_back(i - 1, i);
    }
    return from_relations(std::move(labels), rel);
}

bool FinPoset::is_minimal(int x) const {
    for (int y = 0; y < size(); ++y)
        if (lt(y, x)) return false;
    return true;
}

std::optional<int> FinPoset::maximum() const {
    for (int m = 0; m < size(); ++m) {
        bool top = true;
        for (int x = 0; x < size() && top; ++x) top = leq(x, m);
        if (top) return m;
    }
    return std::nullopt;
}

// ---------------------------------------------------------- FinSimplicialSet

bool FinSimplicialSet::is_degenerate(int n, int x) const {
    if (n == 0) return false;
    for (int i = 0; i < n; ++i)
        for (int y = 0; y < count[static_cast<std::size_t>(n - 1)]; ++y)
            if (s(n - 1, i, y) == x) return true;
    return false;
}

int FinSimplicialSet::nondegenerate_count(int n) const {
    int c = 0;
    for (int x = 0; x < count[static_cast<std::size_t>(n)]; ++x) c += is_degenerate(n, x) ? 0 : 1;
    return c;
}

std::vector<std::string> FinSimplicialSet::audit() const {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& what, int n, int x) {
        bad.push_back(what + " fails on simplex " + std::to_string(x) + " of level " + std::to_string(n));
    };
    for (int n = 2; n <= cap; ++n)
        for (int x = 0; x < count[static_cast<std::size_t>(n)]; ++x)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x))) {
                        fail("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" + std::to_string(j - 1) +
                                 " d" + std::to_string(i),
                             n, x);
                    }
    for (int n = 0; n < cap; ++n) {
        for (int x = 0; x < count[static_cast<std::size_t>(n)]; ++x) {
            for (int j = 0; j <= n; ++j) {
                const int y = s(n, j, x);
                for (int i = 0; i <= n + 1; ++i) {
                    const int lhs = d(n + 1, i, y);
                    int rhs;
                    if (i == j || i == j + 1) {
                        rhs = x;
                    } else if (i < j) {
                        rhs = s(n - 1, j - 1, d(n, i, x));
                    } else {
                        rhs = s(n - 1, j, d(n, i - 1, x));
                    }
                    if (lhs != rhs) fail("d" + std::to_string(i) + " s" + std::to_string(j), n, x);
                }
                if (n + 1 < cap) {
                    for (int i = 0; i <= j; ++i) {
                        if (s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x))) {
                            fail("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j + 1) +
                                     " s" + std::to_string(i),
                                 n, x);
                        }
                    }
                }
            }
        }
    }
    return bad;
}

namespace {

/// Tables for a simplicial set whose n-simplices are values of type T, with
/// face and degeneracy given as functions.
template <class T, class Face, class Degen>
FinSimplicialSet tabulate(const std::vector<std::vector<T>>& levels, Face face, Degen degen) {
    FinSimplicialSet s;
    s.cap = static_cast<int>(levels.size()) - 1;
    std::vector<std::map<T, int>> index(levels.size());
    for (std::size_t n = 0; n < levels.size(); ++n) {
        s.count.push_back(static_cast<int>(levels[n].size()));
        for (std::size_t k = 0; k < levels[n].size(); ++k) index[n][levels[n][k]] = static_cast<int>(k);
    }
    s.face.resize(levels.size());
    s.degen.resize(levels.size());
    for (int n = 0; n <= s.cap; ++n) {
        const auto& lv = levels[static_cast<std::size_t>(n)];
        if (n >= 1) {
            for (int i = 0; i <= n; ++i) {
                std::vector<int> t;
                for (const auto& x : lv) t.push_back(index[static_cast<std::size_t>(n - 1)].at(face(x, n, i)));
                s.face[static_cast<std::size_t>(n)].push_back(std::move(t));
            }
        }
        if (n < s.cap) {
            for (int i = 0; i <= n; ++i) {
                std::vector<int> t;
                for (const auto& x : lv) t.push_back(index[static_cast<std::size_t>(n + 1)].at(degen(x, n, i)));
                s.degen[static_cast<std::size_t>(n)].push_back(std::move(t));
            }
        }
    }
    return s;
}

}  // namespace

Nerve nerve(const FinPoset& p, int cap) {
    Nerve out;
    out.simplices.resize(static_cast<std::size_t>(cap + 1));
    std::vector<int> chain;
    auto extend = [&](auto&& self, int n) -> void {
        if (static_cast<int>(chain.size()) == n + 1) {
            out.simplices[static_cast<std::size_t>(n)].push_back(chain);
            return;
        }
        for (int x = 0; x < p.size(); ++x) {
            if (!chain.empty() && !p.leq(chain.back(), x)) continue;
            chain.push_back(x);
            self(self, n);
            chain.pop_back();
        }
    };
    for (int n = 0; n <= cap; ++n) extend(extend, n);
    out.set = tabulate(
        out.simplices,
        [](const std::vector<int>& x, int, int i) {
            auto y = x;
            y.erase(y.begin() + i);
            return y;
        },
        [](const std::vector<int>& x, int, int i) {
            auto y = x;
            y.insert(y.begin() + i, x[static_cast<std::size_t>(i)]);
            return y;
        });
    return out;
}

FinPoset sd_ordinal(int n) {
    const unsigned total = (1u << (n + 1)) - 1;
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
    for (unsigned a = 1; a <= total; ++a) {
        std::string l = "{";
        for (int i = 0; i <= n; ++i)
            if ((a >> i) & 1u) l += (l.size() > 1 ? "," : "") + std::to_string(i);
        labels.push_back(l + "}");
        for (unsigned b = 1; b <= total; ++b) leq[a - 1][b - 1] = (a & b) == a;
    }
    return FinPoset(std::move(labels), std::move(leq));
}

std::vector<ExFamily> ex_poset(const FinPoset& p, int n) {
    const unsigned total = (1u << (n + 1)) - 1;
    std::vector<ExFamily> out;
    ExFamily x(total, 0);
    auto fill = [&](auto&& self, unsigned mask) -> void {
        if (mask > total) {
            out.push_back(x);
            return;
        }
        for (int v = 0; v < p.size(); ++v) {
            bool ok = true;
            // every proper non-empty submask was assigned already
            for (unsigned sub = (mask - 1) & mask; sub && ok; sub = (sub - 1) & mask) ok = p.leq(x[sub - 1], v);
            if (!ok) continue;
            x[mask - 1] = v;
            self(self, mask + 1);
        }
    };
    fill(fill, 1);
    return out;
}

ExFamily ex_face(const ExFamily& x, int n, int i) {
    const unsigned total = (1u << n) - 1;
    ExFamily y(total);
    for (unsigned j = 1; j <= total; ++j) y[j - 1] = x[masks::coface(j, i) - 1];
    return y;
}

ExFamily ex_degeneracy(const ExFamily& x, int n, int i) {
    const unsigned total = (1u << (n + 2)) - 1;
    ExFamily y(total);
    for (unsigned j = 1; j <= total; ++j) y[j - 1] = x[masks::codegeneracy(j, i) - 1];
    return y;
}

FinSimplicialSet ex_simplicial_set(const FinPoset& p, int cap) {
    std::vector<std::vector<ExFamily>> levels;
    for (int n = 0; n <= cap; ++n) levels.push_back(ex_poset(p, n));
    return tabulate(levels, ex_face, ex_degeneracy);
}

// -------------------------------------------------------- graphs and trees

OrientedGraph gamma(const FinPoset& p) {
    OrientedGraph g{p.labels(), {}};
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.lt(x, y)) g.edges.emplace_back(x, y);
    return g;
}

bool is_admissible_tree(const OrientedGraph& g, const std::vector<std::pair<int, int>>& tree) {
    const int n = static_cast<int>(g.labels.size());
    if (static_cast<int>(tree.size()) != n - 1) return false;
    for (const auto& e : tree)
        if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) return false;

    // spanning and acyclic: n-1 edges joining n components into one
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& [x, y] : tree) {
        const int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[static_cast<std::size_t>(rx)] = ry;
    }

    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int s = 0; s < n; ++s) {
        std::deque<int> todo{s};
        reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = true;
        while (!todo.empty()) {
            const int x = todo.front();
            todo.pop_front();
            for (const auto& [a, b] : tree) {
                if (a == x && !reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)]) {
                    reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)] = true;
                    todo.push_back(b);
                }
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            bool common = false;
            for (int z = 0; z < n && !common; ++z) {
                common = reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] &&
                         reach[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
            }
            if (!common) return false;
        }
    }
    return true;
}

std::vector<std::pair<int, int>> star_tree(const FinPoset& p) {
    const auto m = p.maximum();
    if (!m) throw InvalidPoset("poset has no final element");
    std::vector<std::pair<int, int>> t;
    for (int x = 0; x < p.size(); ++x)
        if (x != *m) t.emplace_back(x, *m);
    return t;
}

std::string to_dot(const OrientedGraph& g, const std::vector<std::pair<int, int>>& tree) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (std::size_t v = 0; v < g.labels.size(); ++v) os << "  " << v << " [label=\"" << g.labels[v] << "\"];\n";
    for (const auto& e : g.edges) {
        os << "  " << e.first << " -> " << e.second;
        if (std::find(tree.begin(), tree.end(), e) != tree.end()) os << " [style=bold]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

int b_interval_index(int k, int i, int j) {
    if (i < 0 || j > k || i > j) throw InvalidPoset("not an interval of [" + std::to_string(k) + "]");
    int idx = 0;
    for (int len = 0; len < j - i; ++len) idx += k + 1 - len;
    return idx + i;
}

BasedPoset b_interval(int k) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> bounds;
    for (int len = 0; len <= k; ++len) {
        for (int i = 0; i + len <= k; ++i) {
            bounds.emplace_back(i, i + len);
            labels.push_back(len == 0 ? "{" + std::to_string(i) + "}"
                                      : "[" + std::to_string(i) + "," + std::to_string(i + len) + "]");
        }
    }
    const std::size_t n = bounds.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            leq[x][y] = bounds[y].first <= bounds[x].first && bounds[x].second <= bounds[y].second;
    std::vector<int> base;
    for (int i = 0; i <= k; ++i) base.push_back(b_interval_index(k, i, i));
    return {FinPoset(std::move(labels), std::move(leq)), std::move(base)};
}

FramedPoset::FramedPoset(BasedPoset b, std::vector<std::pair<int, int>> t)
    : based(std::move(b)), tree(std::move(t)) {
    const FinPoset& p = based.poset;
    if (!p.maximum()) throw InvalidPoset("framed poset needs a final element");
    if (based.base_points.empty()) throw InvalidPoset("framed poset needs a base point");
    for (int x : based.base_points) {
        if (x < 0 || x >= p.size() || !p.is_minimal(x)) throw InvalidPoset("base points must be minimal elements");
    }
    if (!is_admissible_tree(gamma(p), tree)) throw InvalidPoset("tree is not an admissible maximal tree");
}

// ------------------------------------------------------------------ diagrams

AdmissibleDiagram::AdmissibleDiagram(FinPoset poset, std::vector<Subspace> values)
    : poset_(std::move(poset)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != poset_.size()) throw InvalidPoset("one subspace per element");
    for (int x = 0; x < poset_.size(); ++x)
        for (int y = 0; y < poset_.size(); ++y)
            if (poset_.leq(x, y) && !subspace_contains(at(y), at(x))) {
                throw NotContained("F(" + poset_.labels()[static_cast<std::size_t>(x)] + ") is not inside F(" +
                                   poset_.labels()[static_cast<std::size_t>(y)] + ")");
            }
}

AdmissibleDiagram pullback(const AdmissibleDiagram& f, const FinPoset& domain, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != domain.size()) throw FrameMismatch("map has the wrong domain size");
    for (int x = 0; x < domain.size(); ++x) {
        if (phi[static_cast<std::size_t>(x)] < 0 || phi[static_cast<std::size_t>(x)] >= f.poset().size()) {
            throw FrameMismatch("map leaves the target poset");
        }
        for (int y = 0; y < domain.size(); ++y)
            if (domain.leq(x, y) && !f.poset().leq(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) {
                throw FrameMismatch("map is not monotone");
            }
    }
    std::vector<Subspace> values;
    for (int x : phi) values.push_back(f.at(x));
    return AdmissibleDiagram(domain, std::move(values));
}

std::vector<int> phi_interval(int i, int j) {
    return {b_interval_index(2, i, i), b_interval_index(2, j, j), b_interval_index(2, i, j)};
}

K0Decomposition k0_decompose(const AdmissibleDiagram& f, const FramedPoset& frame) {
    if (!(frame.based.poset == f.poset())) throw FrameMismatch("frame and diagram live on different posets");
    K0Decomposition d;
    d.d0 = f.dim(frame.based.base_points.front());
    for (const auto& [y, yp] : frame.tree) d.edge_dims[{y, yp}] = static_cast<long>(quotient_dim(f.at(y), f.at(yp)));
    return d;
}

long k0_reconstruct(const K0Decomposition& d, const FramedPoset& frame, int x) {
    const int n = frame.based.poset.size();
    std::vector<std::optional<long>> value(static_cast<std::size_t>(n));
    const int x0 = frame.based.base_points.front();
    value[static_cast<std::size_t>(x0)] = d.d0;
    std::deque<int> todo{x0};
    while (!todo.empty()) {
        const int v = todo.front();
        todo.pop_front();
        for (const auto& [e, dim] : d.edge_dims) {
            const auto [a, b] = e;
            if (a == v && !value[static_cast<std::size_t>(b)]) {
                value[static_cast<std::size_t>(b)] = *value[static_cast<std::size_t>(v)] + dim;
                todo.push_back(b);
            } else if (b == v && !value[static_cast<std::size_t>(a)]) {
                value[static_cast<std::size_t>(a)] = *value[static_cast<std::size_t>(v)] - dim;
                todo.push_back(a);
            }
        }
    }
    if (!value[static_cast<std::size_t>(x)]) throw FrameMismatch("element not connected to the base point");
    return *value[static_cast<std::size_t>(x)];
}

std::vector<long> preindex_k0(const AdmissibleDiagram& f, const std::vector<int>& base_points) {
    std::vector<long> out;
    for (std::size_t i = 0; i + 1 < base_points.size(); ++i) out.push_back(f.dim(base_points[i + 1]) - f.dim(base_points[i]));
    return out;
}

std::vector<long> preindex_via_max(const AdmissibleDiagram& f, const std::vector<int>& base_points) {
    const auto m = f.poset().maximum();
    if (!m) throw InvalidPoset("poset has no final element");
    std::vector<long> out;
    for (std::size_t i = 0; i + 1 < base_points.size(); ++i) {
        out.push_back(static_cast<long>(quotient_dim(f.at(base_points[i]), f.at(*m))) -
                      static_cast<long>(quotient_dim(f.at(base_points[i + 1]), f.at(*m))));
    }
    return out;
}

FinPoset random_filtered_poset(Rng& rng, int n) {
    if (n < 1) throw InvalidPoset("need at least one element");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = i + 1; j + 1 < n; ++j)
            if (rng.coin()) rel.emplace_back(i, j);
        rel.emplace_back(i, n - 1);
    }
    return FinPoset::from_relations(std::move(labels), rel);
}

AdmissibleDiagram random_diagram(Rng& rng, const FinPoset& p, const FieldCtx& ctx, std::size_t ambient) {
    std::vector<std::vector<Vector>> gens(static_cast<std::size_t>(p.size()));
    for (auto& g : gens) {
        const long k = rng.uniform(0, 2);
        for (long i = 0; i < k; ++i) {
            Vector v;
            for (std::size_t c = 0; c < ambient; ++c) v.push_back(random_scalar(rng, ctx));
            g.push_back(std::move(v));
        }
    }
    std::vector<Subspace> values;
    for (int x = 0; x < p.size(); ++x) {
        std::vector<Vector> all;
        for (int z = 0; z < p.size(); ++z)
            if (p.leq(z, x)) all.insert(all.end(), gens[static_cast<std::size_t>(z)].begin(), gens[static_cast<std::size_t>(z)].end());
        values.push_back(Subspace::span(ctx, ambient, all));
    }
    return AdmissibleDiagram(p, std::move(values));
}

}  // namespace tate
