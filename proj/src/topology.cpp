#include "lieposet/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lieposet/error.hpp"
#include "lieposet/matrix.hpp"

namespace lieposet {

namespace {

std::string face_text(const Face& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
}

std::vector<Face> facets_of(const Face& f) {
    std::vector<Face> out;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face g;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (i != drop) g.push_back(f[i]);
        out.push_back(std::move(g));
    }
    return out;
}

// Rank of ∂_k : C_k -> C_{k-1} with the alternating-sign incidence.
std::size_t boundary_rank(const SimplicialComplex& k, int degree) {
    if (degree <= 0 || degree > k.dimension()) return 0;
    const auto& lower = k.faces[degree - 1];
    std::vector<SparseRow> rows;
    for (const Face& f : k.faces[degree]) {
        SparseRow row;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
            const auto col = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), g) - lower.begin());
            row.emplace_back(col, Rational(drop % 2 == 0 ? 1 : -1));
        }
        rows.push_back(std::move(row));
    }
    return sparse_rank(std::move(rows));
}

}  // namespace

bool SimplicialComplex::contains(const Face& f) const {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 0 || d > dimension()) return false;
    return std::binary_search(faces[d].begin(), faces[d].end(), f);
}

int SimplicialComplex::euler_characteristic() const {
    int chi = 0;
    for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<int>(faces[k].size());
    return chi;
}

SimplicialComplex complex_from_faces(std::vector<Face> faces) {
    SimplicialComplex k;
    std::set<Face> all;
    for (Face& f : faces) {
        if (f.empty()) throw Error(ErrorKind::ShapeMismatch, "empty face");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error(ErrorKind::ShapeMismatch, "repeated vertex in face " + face_text(f));
        all.insert(f);
    }
    for (const Face& f : all) {
        if (f.size() > 1)
            for (const Face& g : facets_of(f))
                if (!all.count(g))
                    throw Error(ErrorKind::ShapeMismatch, "face " + face_text(f) + " is missing facet " + face_text(g));
        const auto d = f.size() - 1;
        if (k.faces.size() <= d) k.faces.resize(d + 1);
        k.faces[d].push_back(f);
    }
    return k;
}

SimplicialComplex order_complex(const Poset& p) {
    SimplicialComplex k;
    // Chains are increasing label sequences because labels are natural.
    std::vector<Face> frontier;
    for (Element v = 1; v <= p.size(); ++v) frontier.push_back({v});
    while (!frontier.empty()) {
        k.faces.push_back(frontier);
        std::vector<Face> next;
        for (const Face& f : frontier)
            for (Element v = f.back() + 1; v <= p.size(); ++v)
                if (p.less(f.back(), v)) {
                    Face g = f;
                    g.push_back(v);
                    next.push_back(std::move(g));
                }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return k;
}

std::vector<int> betti_numbers(const SimplicialComplex& k, bool reduced, std::optional<int> max_degree) {
    const int top = max_degree.value_or(k.dimension());
    const int needed = max_degree ? std::min(top + 1, k.dimension()) : k.dimension();
    if (needed > kHomologyDimBound)
        throw Error(ErrorKind::SizeBound, "homology limited to boundary maps of degree " +
                                              std::to_string(kHomologyDimBound));
    std::vector<int> betti;
    if (k.dimension() < 0) return betti;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top + 1; ++d) ranks[d] = boundary_rank(k, d);
    for (int d = 0; d <= top; ++d)
        betti.push_back(static_cast<int>(k.face_count(d) - ranks[d] - ranks[d + 1]));
    if (reduced && !betti.empty()) betti[0] -= 1;
    return betti;
}

bool verify_acyclic(const Poset& p) {
    if (p.height() > 2) throw Error(ErrorKind::HeightBound, "acyclicity check needs height <= 2");
    if (!p.is_connected()) return false;
    const auto b = betti_numbers(order_complex(p), true);
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

std::vector<Face> check_morse(const SimplicialComplex& k, const MorseAssignment& f) {
    auto value = [&](const Face& face) -> const Rational& {
        auto it = f.find(face);
        if (it == f.end()) throw Error(ErrorKind::MorseConditionViolated, "no value for face " + face_text(face));
        return it->second;
    };
    std::vector<Face> critical;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const Face& sigma : k.faces[d]) {
            const Rational& fs = value(sigma);
            int low_cofaces = 0, high_faces = 0;
            if (d + 1 <= k.dimension())
                for (const Face& tau : k.faces[d + 1])
                    if (std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end()) && value(tau) <= fs)
                        ++low_cofaces;
            if (d > 0)
                for (const Face& nu : facets_of(sigma))
                    if (value(nu) >= fs) ++high_faces;
            if (low_cofaces > 1 || high_faces > 1 || (low_cofaces == 1 && high_faces == 1))
                throw Error(ErrorKind::MorseConditionViolated,
                            "Morse condition fails at face " + face_text(sigma));
            if (low_cofaces == 0 && high_faces == 0) critical.push_back(sigma);
        }
    }
    return critical;
}

}  // namespace lieposet
