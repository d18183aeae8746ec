#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lieposet/poset.hpp"
#include "lieposet/rational.hpp"

namespace lieposet {

using Face = std::vector<Element>;  // sorted vertex tuple

/// Finite simplicial complex; faces[k] holds the k-dimensional faces in
/// lexicographic order.
struct SimplicialComplex {
    std::vector<std::vector<Face>> faces;

    int dimension() const { return static_cast<int>(faces.size()) - 1; }
    std::size_t face_count(int k) const {
        return k >= 0 && k < static_cast<int>(faces.size()) ? faces[k].size() : 0;
    }
    bool contains(const Face& f) const;
    int euler_characteristic() const;
};

/// Builds a complex from a face list; every nonempty subset of a listed face
/// must also be listed (ShapeMismatch otherwise).
SimplicialComplex complex_from_faces(std::vector<Face> faces);

/// Σ(P): one face per nonempty chain.
SimplicialComplex order_complex(const Poset& p);

inline constexpr int kHomologyDimBound = 3;

/// Rational Betti numbers b_0..b_top, where top = dim K, or `max_degree`
/// when given (zero-padded). Needs boundary maps up to degree top+1 <= 3 (SizeBound).
/// The reduced variant lowers b_0 by one.
std::vector<int> betti_numbers(const SimplicialComplex& k, bool reduced,
                               std::optional<int> max_degree = std::nullopt);

/// Reduced rational homology vanishes and Σ(P) is connected.
bool verify_acyclic(const Poset& p);

using MorseAssignment = std::map<Face, Rational>;

/// Checks the discrete Morse condition and returns the critical faces (no
/// lower-valued coface, no higher-valued face). Throws
/// MorseConditionViolated naming the first offending face.
std::vector<Face> check_morse(const SimplicialComplex& k, const MorseAssignment& f);

}  // namespace lieposet
