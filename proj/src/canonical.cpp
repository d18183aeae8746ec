#include "lieposet/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "lieposet/error.hpp"

namespace lieposet {

namespace {

using Partition = std::vector<int>;  // cell index per vertex, cells ordered

// Refines `cell` until equitable: a vertex's signature is its cell plus the
// sorted multiset of (arc out, arc in, neighbour cell). Cell indices are
// assigned by sorting signatures, so the result is labelling-invariant.
void refine(const ColoredDigraph& g, Partition& cell) {
    const int n = g.n;
    int cells = cell.empty() ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
    while (true) {
        std::vector<std::vector<std::uint32_t>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.push_back(static_cast<std::uint32_t>(cell[v]));
            std::vector<std::uint32_t> nb;
            for (int w = 0; w < n; ++w) {
                if (w == v) continue;
                const std::uint32_t out = g.arc(v, w), in = g.arc(w, v);
                if (out == 0 && in == 0) continue;
                nb.push_back((out << 24) | (in << 16) | static_cast<std::uint32_t>(cell[w]));
            }
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        Partition next(static_cast<std::size_t>(n));
        int id = -1;
        for (int k = 0; k < n; ++k) {
            if (k == 0 || sig[order[k]] != sig[order[k - 1]]) ++id;
            next[order[k]] = id;
        }
        const int next_cells = id + 1;
        cell = std::move(next);
        if (next_cells == cells) return;
        cells = next_cells;
    }
}

bool twins(const ColoredDigraph& g, int u, int v) {
    if (g.colors[u] != g.colors[v] || g.arc(u, v) != g.arc(v, u)) return false;
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        if (g.arc(u, w) != g.arc(v, w) || g.arc(w, u) != g.arc(w, v)) return false;
    }
    return true;
}

std::vector<std::uint32_t> encode(const ColoredDigraph& g, const Partition& cell) {
    // Discrete partition: cell[v] is the new label of v.
    std::vector<int> at(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) at[cell[v]] = v;
    std::vector<std::uint32_t> code;
    code.reserve(static_cast<std::size_t>(g.n) * (g.n + 1) + 1);
    code.push_back(static_cast<std::uint32_t>(g.n));
    for (int k = 0; k < g.n; ++k) code.push_back(g.colors[at[k]]);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) code.push_back(g.arc(at[a], at[b]));
    return code;
}

void search(const ColoredDigraph& g, Partition cell, std::vector<std::uint32_t>& best, bool& have) {
    refine(g, cell);
    const int n = g.n;
    std::vector<int> size(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++size[cell[v]];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target < 0) {
        auto code = encode(g, cell);
        if (!have || code < best) {
            best = std::move(code);
            have = true;
        }
        return;
    }
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (cell[v] == target) members.push_back(v);
    std::vector<int> tried;
    for (int v : members) {
        bool redundant = false;
        for (int u : tried)
            if (twins(g, u, v)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        tried.push_back(v);
        // Individualise v: it takes the front of its cell.
        Partition next = cell;
        for (int w = 0; w < n; ++w)
            if (next[w] > target || (next[w] == target && w != v)) next[w] += 1;
        search(g, std::move(next), best, have);
    }
}

ColoredDigraph poset_digraph(const Poset& p) {
    ColoredDigraph g;
    g.n = p.size();
    g.colors.assign(static_cast<std::size_t>(g.n), 0);
    g.arcs.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (const auto& [a, b] : p.relations()) g.arcs[static_cast<std::size_t>(a - 1) * g.n + (b - 1)] = 1;
    return g;
}

}  // namespace

std::vector<std::uint32_t> canonical_code(const ColoredDigraph& g) {
    // Initial colours are ranked by value so the code is label-free.
    std::vector<std::uint32_t> distinct = g.colors;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Partition cell(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        cell[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), g.colors[v]) - distinct.begin());
    std::vector<std::uint32_t> best;
    bool have = false;
    if (g.n == 0) return {0};
    search(g, cell, best, have);
    return best;
}

std::vector<Relation> canonical_form(const Poset& p, int bound) {
    if (p.size() > bound)
        throw Error(ErrorKind::SizeBound, "canonical form limited to " + std::to_string(bound) + " elements");
    const ColoredDigraph g = poset_digraph(p);
    const auto code = canonical_code(g);
    const int n = p.size();
    std::vector<Relation> out;
    const std::size_t base = 1 + static_cast<std::size_t>(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (code[base + static_cast<std::size_t>(a) * n + b]) out.emplace_back(a + 1, b + 1);
    return out;
}

bool are_isomorphic(const Poset& p, const Poset& q, int bound) {
    if (p.size() != q.size() || p.relation_count() != q.relation_count()) return false;
    return canonical_form(p, bound) == canonical_form(q, bound);
}

void for_each_poset(int n, int max_height, bool connected_only,
                    const std::function<void(const Poset&)>& visit) {
    if (n > kEnumerationBound)
        throw Error(ErrorKind::SizeBound, "enumeration limited to " + std::to_string(kEnumerationBound) + " elements");
    if (n < 1) return;
    // Grow level by level: every naturally labelled poset on k+1 elements is a
    // poset on k elements plus a new top label whose down-set is an order
    // ideal. Heights are filtered early; connectivity only at the last level.
    std::vector<Poset> level{antichain(1)};
    for (int k = 1; k < n; ++k) {
        std::map<std::vector<Relation>, Poset> next;
        for (const Poset& base : level) {
            const std::vector<Relation> rels = base.relations();
            const auto heights = base.hasse().heights;
            // Enumerate down-closed subsets of base.
            const std::uint32_t limit = 1u << k;
            for (std::uint32_t mask = 0; mask < limit; ++mask) {
                bool closed = true;
                int new_height = 0;
                for (int v = 0; v < k && closed; ++v) {
                    if (!(mask >> v & 1u)) continue;
                    new_height = std::max(new_height, heights[v] + 1);
                    for (int u = 0; u < v; ++u)
                        if (base.less(u + 1, v + 1) && !(mask >> u & 1u)) {
                            closed = false;
                            break;
                        }
                }
                if (!closed || new_height > max_height) continue;
                std::vector<Relation> gens = rels;
                for (int v = 0; v < k; ++v)
                    if (mask >> v & 1u) gens.emplace_back(v + 1, k + 1);
                Poset candidate = Poset::from_generators(k + 1, gens);
                auto key = canonical_form(candidate, kEnumerationBound);
                next.try_emplace(std::move(key), std::move(candidate));
            }
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [key, poset] : next) level.push_back(std::move(poset));
    }
    for (const Poset& p : level) {
        if (p.height() > max_height) continue;
        if (connected_only && !p.is_connected()) continue;
        visit(p);
    }
}

std::vector<Poset> enumerate_posets(int n, int max_height, bool connected_only) {
    std::vector<Poset> out;
    for_each_poset(n, max_height, connected_only, [&](const Poset& p) { out.push_back(p); });
    return out;
}

}  // namespace lieposet
