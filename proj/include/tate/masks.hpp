#pragma once

// Subsets of an ordinal [m] as bitmasks.

namespace tate::masks {

/// I ⊆ [m] \ {i}, relabelled into [m-1].
inline unsigned skip(unsigned s, int i) {
    const unsigned low = s & ((1u << i) - 1);
    return low | ((s >> (i + 1)) << i);
}

/// Image under the coface d^i: [m-1] -> [m] that misses i.
inline unsigned coface(unsigned s, int i) {
    const unsigned low = s & ((1u << i) - 1);
    return low | ((s >> i) << (i + 1));
}

/// Image under the codegeneracy s^j: [m] -> [m-1] that hits j twice.
inline unsigned codegeneracy(unsigned s, int j) {
    const unsigned low = s & ((1u << (j + 1)) - 1);
    return low | ((s >> (j + 1)) << j);
}

}  // namespace tate::masks
