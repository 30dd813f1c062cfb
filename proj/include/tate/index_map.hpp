#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tate/lattice.hpp"

namespace tate {

/// dim(N/gL) - dim(N/L) with L the standard lattice and N = L + gL.
long index0(const Automorphism& g);
/// Same formula for any L and N containing both L and gL. NotNested otherwise.
long index0_with(const Automorphism& g, const Lattice& l, const Lattice& n);
/// dim(L/N) - dim(gL/N) for N contained in both L and gL. NotNested otherwise.
long euler0(const Automorphism& g, const Lattice& l, const Lattice& n);
/// index0(g∘h) == index0(g) + index0(h).
bool check_additivity(const Automorphism& g, const Automorphism& h);

/// A face of the chain simplex, as a bitmask of its vertices in [k].
using FaceMask = unsigned;
/// Non-empty subset of the positions [m] of a face, as a bitmask.
using SubsetMask = unsigned;

std::string mask_to_string(unsigned mask);

/// The lattices L_{S,I} for every face S of a chain g_1, ..., g_k and every
/// non-empty I ⊆ [dim S].
class LatticeFamily {
public:
    LatticeFamily(TateSpace space, std::vector<Automorphism> chain)
        : space_(std::move(space)), chain_(std::move(chain)) {}

    const TateSpace& space() const noexcept { return space_; }
    const std::vector<Automorphism>& chain() const noexcept { return chain_; }
    int length() const noexcept { return static_cast<int>(chain_.size()); }
    FaceMask top() const noexcept { return (1u << (chain_.size() + 1)) - 1; }

    /// UnknownFace if the entry is missing.
    const Lattice& at(FaceMask face, SubsetMask subset) const;
    bool has(FaceMask face, SubsetMask subset) const { return entries_.count({face, subset}) > 0; }
    void set(FaceMask face, SubsetMask subset, Lattice l);
    const std::map<std::pair<FaceMask, SubsetMask>, Lattice>& entries() const noexcept { return entries_; }

    /// The automorphisms of the face: composites of consecutive g's.
    std::vector<Automorphism> face_chain(FaceMask face) const;

private:
    TateSpace space_;
    std::vector<Automorphism> chain_;
    std::map<std::pair<FaceMask, SubsetMask>, Lattice> entries_;
};

constexpr int kDefaultChainCap = 4;

/// DegenerateChain if some g_i is the identity, ChainTooLong above `cap`.
LatticeFamily build_family(const std::vector<Automorphism>& chain, int cap = kDefaultChainCap);

struct CheckResult {
    std::string check;
    std::string simplex;
    bool pass = true;
    std::string detail;
};

struct FamilyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

/// Checks well-definedness, hypotheses (a), (b), (c), both face identities,
/// and agreement with degeneracies on faces whose composite is the identity.
/// `precision` bounds the series inverses used by the last-face identity.
FamilyReport verify_family(const LatticeFamily& f, int precision = 16);

/// Quotient dimensions along the edges I ⊂ J (|J| = |I| + 1) of sd([m]) for
/// the face `face`, in (I, J) bitmask order.
struct SimplexDims {
    std::vector<std::pair<SubsetMask, SubsetMask>> edges;
    std::vector<long> dims;
};
SimplexDims index_simplex(const LatticeFamily& f, FaceMask face);
/// dim(L_{01}/L_0) - dim(L_{01}/L_1) for an edge face; equals index0 of its automorphism.
long loop_index(const LatticeFamily& f, FaceMask face);

}  // namespace tate
