#include "lieposet/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "lieposet/error.hpp"

namespace lieposet {

namespace {

std::string pair_text(Element i, Element j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Undirected cycle search by DFS, smallest start vertex and ascending
// neighbours so the witness is deterministic.
std::vector<Element> find_cycle(const std::vector<Element>& vertices,
                                const std::vector<Relation>& edges) {
    std::vector<std::vector<Element>> adj;
    const Element max_v = vertices.empty() ? 0 : *std::max_element(vertices.begin(), vertices.end());
    adj.resize(static_cast<std::size_t>(max_v) + 1);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<int> state(adj.size(), 0);  // 0 new, 1 on stack, 2 done
    std::vector<Element> parent(adj.size(), 0);
    std::vector<Element> found;

    std::function<bool(Element)> dfs = [&](Element v) -> bool {
        state[v] = 1;
        for (Element w : adj[v]) {
            if (w == parent[v]) continue;
            if (state[w] == 1) {
                for (Element u = v; u != w; u = parent[u]) found.push_back(u);
                found.push_back(w);
                std::reverse(found.begin(), found.end());
                return true;
            }
            if (state[w] == 0) {
                parent[w] = v;
                if (dfs(w)) return true;
            }
        }
        state[v] = 2;
        return false;
    };

    std::vector<Element> order = vertices;
    std::sort(order.begin(), order.end());
    for (Element v : order) {
        if (state[v] == 0 && dfs(v)) return found;
    }
    return {};
}

}  // namespace

Poset::Poset(int n, std::vector<bool> rel) : n_(n), rel_(std::move(rel)) { finalize(); }

Poset Poset::from_generators(int n, const std::vector<Relation>& generators) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "poset needs at least one element");
    std::vector<bool> rel(static_cast<std::size_t>(n) * n, false);
    for (const auto& [i, j] : generators) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw Error(ErrorKind::OutOfRange, "element out of range in " + pair_text(i, j));
        if (i >= j)
            throw Error(ErrorKind::LabelOrderViolation,
                        "generator " + pair_text(i, j) + " violates natural labelling");
        rel[static_cast<std::size_t>(i - 1) * n + (j - 1)] = true;
    }
    // Natural labelling makes the closure a single pass from the top down.
    for (int i = n; i >= 1; --i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!rel[static_cast<std::size_t>(i - 1) * n + (j - 1)]) continue;
            for (int k = j + 1; k <= n; ++k) {
                if (rel[static_cast<std::size_t>(j - 1) * n + (k - 1)])
                    rel[static_cast<std::size_t>(i - 1) * n + (k - 1)] = true;
            }
        }
    }
    return Poset(n, std::move(rel));
}

Poset Poset::relabeled_from(int n, const std::vector<Relation>& relations,
                            std::vector<Element>* mapping) {
    std::vector<std::vector<Element>> succ(static_cast<std::size_t>(n) + 1);
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, b] : relations) {
        if (a < 1 || b < 1 || a > n || b > n)
            throw Error(ErrorKind::OutOfRange, "element out of range in " + pair_text(a, b));
        succ[a].push_back(b);
        ++indeg[b];
    }
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
    for (Element v = 1; v <= n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<Element> new_label(static_cast<std::size_t>(n) + 1, 0);
    Element next = 1;
    while (!ready.empty()) {
        Element v = ready.top();
        ready.pop();
        new_label[v] = next++;
        for (Element w : succ[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (next != n + 1) throw Error(ErrorKind::LabelOrderViolation, "relation contains a directed cycle");
    std::vector<Relation> gens;
    gens.reserve(relations.size());
    for (const auto& [a, b] : relations) gens.emplace_back(new_label[a], new_label[b]);
    if (mapping) *mapping = new_label;
    return from_generators(n, gens);
}

void Poset::finalize() {
    relation_count_ = static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), true));
    covers_.clear();
    for (Element i = 1; i <= n_; ++i) {
        for (Element j = i + 1; j <= n_; ++j) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (Element k = i + 1; k < j && cover; ++k)
                if (less(i, k) && less(k, j)) cover = false;
            if (cover) covers_.emplace_back(i, j);
        }
    }
    std::vector<int> level(static_cast<std::size_t>(n_) + 1, 0);
    height_ = 0;
    for (Element j = 1; j <= n_; ++j) {
        for (Element i = 1; i < j; ++i)
            if (less(i, j)) level[j] = std::max(level[j], level[i] + 1);
        height_ = std::max(height_, level[j]);
    }
    // Union-find over covers.
    std::vector<int> root(static_cast<std::size_t>(n_) + 1);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
    components_ = n_;
    for (const auto& [a, b] : covers_) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            root[ra] = rb;
            --components_;
        }
    }
}

std::vector<Relation> Poset::relations() const {
    std::vector<Relation> out;
    out.reserve(relation_count_);
    for (Element i = 1; i <= n_; ++i)
        for (Element j = i + 1; j <= n_; ++j)
            if (less(i, j)) out.emplace_back(i, j);
    return out;
}

bool Poset::is_minimal(Element i) const {
    for (Element k = 1; k < i; ++k)
        if (less(k, i)) return false;
    return true;
}

bool Poset::is_maximal(Element i) const {
    for (Element k = i + 1; k <= n_; ++k)
        if (less(i, k)) return false;
    return true;
}

std::vector<Element> Poset::minimal_elements() const {
    std::vector<Element> out;
    for (Element i = 1; i <= n_; ++i)
        if (is_minimal(i)) out.push_back(i);
    return out;
}

std::vector<Element> Poset::maximal_elements() const {
    std::vector<Element> out;
    for (Element i = 1; i <= n_; ++i)
        if (is_maximal(i)) out.push_back(i);
    return out;
}

HasseData Poset::hasse() const {
    HasseData data;
    data.covers = covers_;
    data.components = components_;
    data.heights.assign(static_cast<std::size_t>(n_), 0);
    for (Element j = 1; j <= n_; ++j)
        for (Element i = 1; i < j; ++i)
            if (less(i, j)) data.heights[j - 1] = std::max(data.heights[j - 1], data.heights[i - 1] + 1);
    return data;
}

Poset Poset::induced(std::vector<Element> elements) const {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const int k = static_cast<int>(elements.size());
    std::vector<Relation> gens;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (less(elements[a], elements[b])) gens.emplace_back(a + 1, b + 1);
    return from_generators(k, gens);
}

std::vector<std::vector<Element>> Poset::component_elements() const {
    std::vector<int> comp(static_cast<std::size_t>(n_) + 1, -1);
    std::vector<std::vector<Element>> adj(static_cast<std::size_t>(n_) + 1);
    for (const auto& [a, b] : covers_) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::vector<Element>> out;
    for (Element s = 1; s <= n_; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Element> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Element v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Element w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Poset make_poset(int n, const std::vector<Relation>& generators) {
    return Poset::from_generators(n, generators);
}

Poset antichain(int n) { return Poset::from_generators(n, {}); }

Poset chain(int n) {
    std::vector<Relation> gens;
    for (Element i = 1; i < n; ++i) gens.emplace_back(i, i + 1);
    return Poset::from_generators(n, gens);
}

Poset complete_poset(const std::vector<int>& ranks) {
    if (ranks.empty()) throw Error(ErrorKind::OutOfRange, "complete poset needs at least one rank");
    std::vector<Relation> gens;
    Element start = 1;
    for (std::size_t r = 0; r < ranks.size(); ++r) {
        if (ranks[r] < 1) throw Error(ErrorKind::OutOfRange, "rank sizes must be positive");
        if (r + 1 < ranks.size()) {
            const Element next_start = start + ranks[r];
            for (Element a = start; a < next_start; ++a)
                for (Element b = next_start; b < next_start + ranks[r + 1]; ++b) gens.emplace_back(a, b);
        }
        start += ranks[r];
    }
    return Poset::from_generators(start - 1, gens);
}

Poset disjoint_sum(const Poset& p, const Poset& q) {
    std::vector<Relation> gens = p.relations();
    for (const auto& [a, b] : q.relations()) gens.emplace_back(a + p.size(), b + p.size());
    return Poset::from_generators(p.size() + q.size(), gens);
}

ExtremalData extremal_data(const Poset& p) {
    ExtremalData data;
    for (Element i = 1; i <= p.size(); ++i) (p.is_extremal(i) ? data.ext : data.interior).push_back(i);
    for (Element a : data.ext)
        for (Element b : data.ext)
            if (p.less(a, b)) data.rel_e.emplace_back(a, b);
    std::sort(data.rel_e.begin(), data.rel_e.end());
    return data;
}

UpDown up_down(const Poset& p, Element j) {
    if (j < 1 || j > p.size()) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(j) + " not in poset");
    UpDown r;
    for (Element i = 1; i <= p.size(); ++i) {
        if (p.less(i, j)) ++r.down;
        if (p.less(j, i)) ++r.up;
    }
    r.ud = r.up != r.down ? std::abs(r.up - r.down) : 2;
    return r;
}

Poset interior_neighborhood(const Poset& p, Element i, NeighborhoodShape* shape) {
    if (i < 1 || i > p.size()) throw Error(ErrorKind::OutOfRange, "element " + std::to_string(i) + " not in poset");
    if (p.height() > 2) throw Error(ErrorKind::HeightBound, "interior neighbourhoods need height <= 2");
    if (p.is_extremal(i)) throw Error(ErrorKind::NotInterior, "element " + std::to_string(i) + " is extremal");
    std::vector<Element> members{i};
    for (Element j = 1; j <= p.size(); ++j)
        if (p.related(i, j)) members.push_back(j);
    if (shape) {
        const UpDown ud = up_down(p, i);
        shape->below = ud.down;
        shape->above = ud.up;
    }
    return p.induced(members);
}

ForestCheck is_forest(const Poset& p, bool restrict_to_ext) {
    std::vector<Element> vertices;
    std::vector<Relation> edges;
    if (restrict_to_ext) {
        const ExtremalData ext = extremal_data(p);
        vertices = ext.ext;
        const Poset sub = p.induced(ext.ext);
        for (const auto& [a, b] : sub.covers()) edges.emplace_back(ext.ext[a - 1], ext.ext[b - 1]);
    } else {
        vertices.resize(static_cast<std::size_t>(p.size()));
        std::iota(vertices.begin(), vertices.end(), 1);
        edges = p.covers();
    }
    ForestCheck result;
    result.cycle = find_cycle(vertices, edges);
    result.is_forest = result.cycle.empty();
    return result;
}

bool same_cycle(const std::vector<Element>& a, const std::vector<Element>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t n = a.size();
    for (int dir : {1, -1}) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                const std::size_t idx = dir == 1 ? (shift + k) % n : (shift + n - k) % n;
                ok = a[k] == b[idx];
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace lieposet
