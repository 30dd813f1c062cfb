#include "tate/index_map.hpp"

#include <algorithm>
#include <bit>

#include "tate/errors.hpp"
#include "tate/masks.hpp"

namespace tate {

long index0_with(const Automorphism& g, const Lattice& l, const Lattice& n) {
    const Lattice gl = act(g, l);
    if (!leq(l, n) || !leq(gl, n)) throw NotNested("N must contain L and gL");
    return quotient_dim(gl, n) - quotient_dim(l, n);
}

long index0(const Automorphism& g) {
    const Lattice l = std_lattice(g.space());
    const Lattice gl = act(g, l);
    const Lattice n = join(l, gl);
    return quotient_dim(gl, n) - quotient_dim(l, n);
}

long euler0(const Automorphism& g, const Lattice& l, const Lattice& n) {
    const Lattice gl = act(g, l);
    if (!leq(n, l) || !leq(n, gl)) throw NotNested("N must lie in L and gL");
    return quotient_dim(n, l) - quotient_dim(n, gl);
}

bool check_additivity(const Automorphism& g, const Automorphism& h) {
    return index0(compose(g, h)) == index0(g) + index0(h);
}

std::string mask_to_string(unsigned mask) {
    std::string s = "[";
    for (int i = 0; mask >> i; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (s.size() > 1) s += ",";
        s += std::to_string(i);
    }
    return s + "]";
}

namespace {

int face_dim(FaceMask face) { return std::popcount(face) - 1; }
SubsetMask full(int m) { return (1u << (m + 1)) - 1; }

/// Position -> vertex.
std::vector<int> vertices(FaceMask face) {
    std::vector<int> v;
    for (int i = 0; face >> i; ++i)
        if ((face >> i) & 1u) v.push_back(i);
    return v;
}

FaceMask drop_vertex(FaceMask face, int position) {
    return face & ~(1u << vertices(face)[static_cast<std::size_t>(position)]);
}

using masks::coface;
using masks::codegeneracy;
using masks::skip;

class Builder {
public:
    explicit Builder(LatticeFamily& f) : f_(f) {}

    const Lattice& get(FaceMask face, SubsetMask subset) {
        if (!f_.has(face, subset)) f_.set(face, subset, compute(face, subset));
        return f_.at(face, subset);
    }

private:
    Lattice compute(FaceMask face, SubsetMask subset) {
        const int m = face_dim(face);
        if (m == 0) return std_lattice(f_.space());
        if (subset == full(m)) {
            Lattice acc = get(face, 1u);
            for (SubsetMask s = 2; s < full(m); ++s) acc = join(acc, get(face, s));
            return acc;
        }
        const int i = std::countr_one(subset);
        if (i < m) return get(drop_vertex(face, i), skip(subset, i));
        const auto chain = f_.face_chain(face);
        return act(chain.back(), get(drop_vertex(face, m), skip(subset, m)));
    }

    LatticeFamily& f_;
};

}  // namespace

const Lattice& LatticeFamily::at(FaceMask face, SubsetMask subset) const {
    auto it = entries_.find({face, subset});
    if (it == entries_.end()) {
        throw UnknownFace("no lattice for face " + mask_to_string(face) + " and subset " + mask_to_string(subset));
    }
    return it->second;
}

void LatticeFamily::set(FaceMask face, SubsetMask subset, Lattice l) {
    auto it = entries_.find({face, subset});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(face, subset), std::move(l));
    } else {
        it->second = std::move(l);
    }
}

std::vector<Automorphism> LatticeFamily::face_chain(FaceMask face) const {
    if (face == 0 || face > top()) throw UnknownFace("face " + mask_to_string(face) + " is not in the chain");
    const auto v = vertices(face);
    std::vector<Automorphism> out;
    for (std::size_t j = 1; j < v.size(); ++j) {
        Automorphism g = Automorphism::identity(space_);
        for (int s = v[j - 1] + 1; s <= v[j]; ++s) g = compose(chain_[static_cast<std::size_t>(s - 1)], g);
        out.push_back(std::move(g));
    }
    return out;
}

LatticeFamily build_family(const std::vector<Automorphism>& chain, int cap) {
    if (chain.empty()) throw DegenerateChain("empty chain");
    if (static_cast<int>(chain.size()) > cap) {
        throw ChainTooLong("chain of length " + std::to_string(chain.size()) + " exceeds cap " + std::to_string(cap));
    }
    const TateSpace space = chain.front().space();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!(chain[i].space() == space)) throw SpaceMismatch("chain mixes spaces");
        if (chain[i].is_identity()) throw DegenerateChain("g_" + std::to_string(i + 1) + " is the identity");
    }
    LatticeFamily f(space, chain);
    Builder b(f);
    for (FaceMask face = 1; face <= f.top(); ++face) {
        const int m = face_dim(face);
        for (SubsetMask s = 1; s <= full(m); ++s) b.get(face, s);
    }
    return f;
}

bool FamilyReport::all_pass() const { return failures() == 0; }

std::size_t FamilyReport::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
}

nlohmann::json FamilyReport::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : checks) {
        out.push_back({{"check", c.check}, {"simplex", c.simplex}, {"status", c.pass ? "pass" : "fail"},
                       {"detail", c.detail}});
    }
    return out;
}

namespace {

class Verifier {
public:
    Verifier(const LatticeFamily& f, int precision, FamilyReport& r) : f_(f), precision_(precision), r_(r) {}

    void run() {
        for (FaceMask face = 1; face <= f_.top(); ++face) {
            if (face_dim(face) == 0) continue;
            check_face(face);
        }
    }

private:
    void record(const std::string& check, FaceMask face, bool pass, std::string detail) {
        r_.checks.push_back({check, mask_to_string(face), pass, std::move(detail)});
    }

    template <class F>
    void guarded(const std::string& check, FaceMask face, const std::string& where, F&& body) {
        try {
            const bool ok = body();
            record(check, face, ok, where);
        } catch (const Error& e) {
            record(check, face, false, where + ": " + e.what());
        }
    }

    void check_face(FaceMask face) {
        const int m = face_dim(face);
        const auto chain = f_.face_chain(face);
        const Automorphism& last = chain.back();

        for (SubsetMask s = 1; s < full(m); ++s) {
            const std::string where = "I=" + mask_to_string(s);
            std::vector<Lattice> candidates;
            for (int i = 0; i <= m; ++i) {
                if ((s >> i) & 1u) continue;
                const std::string wi = where + " i=" + std::to_string(i);
                if (i < m) {
                    guarded("hyp_a", face, wi, [&] {
                        const Lattice& rhs = f_.at(drop_vertex(face, i), skip(s, i));
                        candidates.push_back(rhs);
                        return f_.at(face, s) == rhs;
                    });
                } else {
                    guarded("hyp_b", face, wi, [&] {
                        const Lattice rhs = act(last, f_.at(drop_vertex(face, m), skip(s, m)));
                        candidates.push_back(rhs);
                        return f_.at(face, s) == rhs;
                    });
                }
            }
            bool same = true;
            for (const auto& c : candidates) same = same && c == candidates.front();
            record("well_defined", face, same && !candidates.empty(),
                   where + " (" + std::to_string(candidates.size()) + " choices)");
        }

        for (SubsetMask s = 1; s <= full(m); ++s) {
            for (SubsetMask t = s; t <= full(m); ++t) {
                if ((s & t) != s || s == t) continue;
                guarded("hyp_c", face, "I=" + mask_to_string(s) + " J=" + mask_to_string(t),
                        [&] { return leq(f_.at(face, s), f_.at(face, t)); });
            }
        }

        const Automorphism last_inv = last.inverse(precision_);
        for (SubsetMask j = 1; j <= full(m - 1); ++j) {
            for (int i = 0; i < m; ++i) {
                guarded("face_inner", face, "i=" + std::to_string(i) + " J=" + mask_to_string(j), [&] {
                    return f_.at(face, coface(j, i)) == f_.at(drop_vertex(face, i), j);
                });
            }
            guarded("face_last", face, "J=" + mask_to_string(j), [&] {
                return act(last_inv, f_.at(face, coface(j, m))) == f_.at(drop_vertex(face, m), j);
            });
        }

        for (int j = 1; j <= m; ++j) {
            if (!chain[static_cast<std::size_t>(j - 1)].is_identity()) continue;
            // The face is the degeneracy s_{j-1} of the face without vertex j.
            const FaceMask lower = drop_vertex(face, j);
            for (SubsetMask s = 1; s <= full(m); ++s) {
                guarded("degeneracy", face, "j=" + std::to_string(j) + " I=" + mask_to_string(s),
                        [&] { return f_.at(face, s) == f_.at(lower, codegeneracy(s, j - 1)); });
            }
        }
    }

    const LatticeFamily& f_;
    int precision_;
    FamilyReport& r_;
};

}  // namespace

FamilyReport verify_family(const LatticeFamily& f, int precision) {
    FamilyReport r;
    Verifier(f, precision, r).run();
    return r;
}

SimplexDims index_simplex(const LatticeFamily& f, FaceMask face) {
    if (face == 0 || face > f.top()) throw UnknownFace("face " + mask_to_string(face) + " is not in the family");
    const int m = face_dim(face);
    SimplexDims out;
    for (SubsetMask s = 1; s <= full(m); ++s) {
        for (int i = 0; i <= m; ++i) {
            if ((s >> i) & 1u) continue;
            const SubsetMask t = s | (1u << i);
            out.edges.emplace_back(s, t);
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    for (const auto& [s, t] : out.edges) out.dims.push_back(quotient_dim(f.at(face, s), f.at(face, t)));
    return out;
}

long loop_index(const LatticeFamily& f, FaceMask face) {
    if (face_dim(face) != 1) throw UnknownFace("loop_index needs an edge, got " + mask_to_string(face));
    const SimplexDims d = index_simplex(f, face);
    return d.dims[0] - d.dims[1];
}

}  // namespace tate
