#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lieposet {

/// Elements are 1-based, as in the printed matrices E_{i,j}.
using Element = int;
using Relation = std::pair<Element, Element>;

struct UpDown {
    int down = 0;
    int up = 0;
    int ud = 0;  // |up - down|, or 2 when they coincide
};

struct HasseData {
    std::vector<Relation> covers;
    int components = 0;
    std::vector<int> heights;  // heights[i-1]: length of the longest chain ending at i, minus one
};

struct ExtremalData {
    std::vector<Element> ext;
    std::vector<Relation> rel_e;
    std::vector<Element> interior;
};

/// Shape (n_i, 1, m_i) of the neighbourhood poset of an interior element.
struct NeighborhoodShape {
    int below = 0;
    int above = 0;
};

/// A finite poset on {1..n} with natural labelling: i ≺ j implies i < j.
/// The strict relation is stored transitively closed as an n×n table.
class Poset {
public:
    Poset() = default;

    /// Closes `generators` transitively. Throws LabelOrderViolation when a
    /// generator has i >= j and OutOfRange when an element is outside 1..n.
    static Poset from_generators(int n, const std::vector<Relation>& generators);

    /// Builds from an arbitrary acyclic relation on 1..n (labels need not be
    /// natural) and relabels along the smallest-label-first linear extension.
    /// `mapping`, when given, receives old label -> new label (index 0 unused).
    static Poset relabeled_from(int n, const std::vector<Relation>& relations,
                                std::vector<Element>* mapping = nullptr);

    int size() const noexcept { return n_; }

    bool less(Element i, Element j) const { return rel_[idx(i, j)]; }
    bool related(Element i, Element j) const { return less(i, j) || less(j, i); }

    /// All strict relations (i, j), lexicographic.
    std::vector<Relation> relations() const;
    std::size_t relation_count() const noexcept { return relation_count_; }

    bool is_minimal(Element i) const;
    bool is_maximal(Element i) const;
    bool is_extremal(Element i) const { return is_minimal(i) || is_maximal(i); }

    std::vector<Element> minimal_elements() const;
    std::vector<Element> maximal_elements() const;

    /// Cover relations (i ≺ j with nothing strictly between), lexicographic.
    const std::vector<Relation>& covers() const noexcept { return covers_; }

    HasseData hasse() const;
    int height() const noexcept { return height_; }
    int components() const noexcept { return components_; }
    bool is_connected() const noexcept { return components_ <= 1; }

    /// Induced subposet on `elements` (any order); relabelled to 1..k
    /// following the ascending order of the original labels.
    Poset induced(std::vector<Element> elements) const;

    /// Connected components as element lists, ordered by smallest element.
    std::vector<std::vector<Element>> component_elements() const;

    bool operator==(const Poset& other) const {
        return n_ == other.n_ && rel_ == other.rel_;
    }

private:
    Poset(int n, std::vector<bool> rel);
    std::size_t idx(Element i, Element j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }
    void finalize();

    int n_ = 0;
    std::vector<bool> rel_;
    std::vector<Relation> covers_;
    std::size_t relation_count_ = 0;
    int height_ = 0;
    int components_ = 0;
};

Poset make_poset(int n, const std::vector<Relation>& generators);
Poset antichain(int n);
Poset chain(int n);

/// P(r_0, ..., r_k): ranks[i] elements on rank i, all cross-rank relations.
Poset complete_poset(const std::vector<int>& ranks);

/// Elements of `q` are shifted by |p|; no cross relations.
Poset disjoint_sum(const Poset& p, const Poset& q);

ExtremalData extremal_data(const Poset& p);

UpDown up_down(const Poset& p, Element j);

/// Induced subposet on {j : i ⪯ j or j ⪯ i}. Requires i interior and
/// height(P) <= 2; the returned poset has shape P(below, 1, above).
Poset interior_neighborhood(const Poset& p, Element i, NeighborhoodShape* shape = nullptr);

/// Undirected simple cycle (length >= 3) in the Hasse diagram, optionally of
/// the subposet induced on Ext(P). Cycles are reported in original labels.
struct ForestCheck {
    bool is_forest = true;
    std::vector<Element> cycle;
};
ForestCheck is_forest(const Poset& p, bool restrict_to_ext);

/// True when `a` and `b` describe the same undirected cycle (any rotation or
/// direction).
bool same_cycle(const std::vector<Element>& a, const std::vector<Element>& b);

}  // namespace lieposet
