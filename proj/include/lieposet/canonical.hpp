#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lieposet/poset.hpp"

namespace lieposet {

/// Default bound on |P| for canonical forms and enumeration.
inline constexpr int kEnumerationBound = 9;

/// Vertex-coloured digraph with small integer arc labels (0 = no arc).
struct ColoredDigraph {
    int n = 0;
    std::vector<std::uint32_t> colors;  // size n
    std::vector<std::uint8_t> arcs;     // n*n row-major

    std::uint8_t arc(int i, int j) const { return arcs[static_cast<std::size_t>(i) * n + j]; }
};

/// Canonical code of a coloured digraph: equal codes iff isomorphic (as
/// coloured, arc-labelled digraphs). Uses colour refinement with
/// individualisation; interchangeable twins are explored once.
std::vector<std::uint32_t> canonical_code(const ColoredDigraph& g);

/// Canonical relation set: the strict relations of P under a canonical
/// relabelling. Throws SizeBound when |P| exceeds `bound`.
std::vector<Relation> canonical_form(const Poset& p, int bound = kEnumerationBound);

bool are_isomorphic(const Poset& p, const Poset& q, int bound = kEnumerationBound);

/// One naturally labelled representative per isomorphism class of posets on
/// n elements with height <= max_height (and connected when requested), in a
/// deterministic order. Throws SizeBound for n > 9.
std::vector<Poset> enumerate_posets(int n, int max_height, bool connected_only);

/// Streaming form of enumerate_posets.
void for_each_poset(int n, int max_height, bool connected_only,
                    const std::function<void(const Poset&)>& visit);

}  // namespace lieposet
