#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieposet/matrix.hpp"
#include "lieposet/poset.hpp"

namespace lieposet {

/// Basis element of a matrix Lie algebra: E_{1,1} - E_{p,p}, E_{p,q}, or an
/// opaque e_k for algebras given by structure constants.
struct BasisLabel {
    enum class Kind { DiagDiff, Elem, Opaque };
    Kind kind = Kind::Opaque;
    int p = 0;
    int q = 0;

    static BasisLabel diag_diff(int p) { return {Kind::DiagDiff, p, 0}; }
    static BasisLabel elem(int p, int q) { return {Kind::Elem, p, q}; }
    static BasisLabel opaque(int k) { return {Kind::Opaque, k, 0}; }

    std::string to_string() const;
    bool operator==(const BasisLabel&) const = default;
};

/// Sparse coordinate vector over a basis: (index, coefficient), sorted.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Entries of a gl(n) matrix, keyed by 1-based (row, column).
using GlElement = std::map<std::pair<int, int>, Rational>;

/// A linear functional Σ c_{i,j} E*_{i,j} on a matrix Lie algebra. For
/// algebras given by structure constants the key (k, k) stands for e_k^*.
struct Functional {
    std::map<std::pair<int, int>, Rational> terms;

    Functional& add(int i, int j, const Rational& c = 1) {
        terms[{i, j}] += c;
        if (sgn(terms[{i, j}]) == 0) terms.erase({i, j});
        return *this;
    }
    bool operator==(const Functional&) const = default;
};

/// Values of a functional on the basis b_1..b_dim.
using DualVector = std::vector<Rational>;

class LieAlgebra {
public:
    int dim() const noexcept { return dim_; }
    const std::vector<BasisLabel>& basis() const noexcept { return basis_; }
    const std::optional<Poset>& origin() const noexcept { return origin_; }

    /// [b_i, b_j] in basis coordinates (0-based indices).
    const SparseVector& bracket(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * dim_ + j];
    }
    /// Bracket of two arbitrary elements given in basis coordinates.
    RationalVector bracket(const RationalVector& x, const RationalVector& y) const;

    /// Basis index of E_{p,q} (p ≺ q) or E_{1,1} - E_{p,p}; -1 when absent.
    int index_of(const BasisLabel& label) const;

    /// Values φ(b_k). Matrix algebras read E*_{i,j} coefficients; opaque
    /// algebras read the (k, k) keys.
    DualVector dual_vector(const Functional& phi) const;

    /// A gl-coordinate functional with the given basis values (E*_{1,1}
    /// coefficient fixed to zero for poset algebras).
    Functional functional_from_values(const DualVector& values) const;

    /// Matrix realisation of an element given in basis coordinates (poset
    /// algebras only).
    GlElement to_gl(const RationalVector& coords) const;

    /// Basis coordinates of a trace-zero matrix supported on the poset's
    /// entries; throws ShapeMismatch otherwise.
    RationalVector from_gl(const GlElement& element) const;

    /// First basis triple violating Jacobi, if any.
    std::optional<std::tuple<int, int, int>> jacobi_violation() const;

private:
    friend LieAlgebra build_type_a(const Poset&);
    friend LieAlgebra build_raw(int, const std::vector<std::tuple<int, int, SparseVector>>&);

    int dim_ = 0;
    std::vector<BasisLabel> basis_;
    std::vector<SparseVector> table_;
    std::optional<Poset> origin_;
    std::map<std::pair<int, int>, int> elem_index_;
};

/// g_A(P): trace-zero matrices supported on {(i,j) : i ⪯ j}. Basis order:
/// E_{1,1}-E_{p,p} for p = 2..n, then E_{p,q} lexicographically.
LieAlgebra build_type_a(const Poset& p);

/// Algebra on e_1..e_dim from brackets (i, j, coords), 1-based, with coords
/// also 1-based. Unlisted brackets are zero; [e_j, e_i] is implied.
/// Throws JacobiViolation (dim <= 30) or ShapeMismatch on inconsistent input.
LieAlgebra build_raw(int dim, const std::vector<std::tuple<int, int, SparseVector>>& brackets);

/// [B_φ]: (i, j) entry φ([b_i, b_j]).
RationalMatrix kirillov_matrix(const LieAlgebra& g, const DualVector& phi);
RationalMatrix kirillov_matrix(const LieAlgebra& g, const Functional& phi);

/// [B̂_φ] = [[0, φᵗ], [-φ, B_φ]]. Throws EvenDimension for even dim(g).
RationalMatrix extended_matrix(const LieAlgebra& g, const DualVector& phi);
RationalMatrix extended_matrix(const LieAlgebra& g, const Functional& phi);

/// Coefficient range [-bound, bound] for random functionals.
inline constexpr long kDefaultSampleBound = 1'000'000;
inline constexpr int kDefaultTrials = 3;
/// Largest dimension for which the index is certified symbolically.
inline constexpr int kSymbolicIndexDim = 8;

struct IndexReport {
    int index = 0;
    int max_rank = 0;
    int trials = 0;
    long sample_bound = kDefaultSampleBound;
    /// Schwartz–Zippel bound on one trial missing the generic rank.
    double per_trial_failure = 0.0;
    /// Bound on all trials missing it; zero once certified.
    double failure_bound = 0.0;
    bool certified = false;
};

/// Seeded uniform integer functional with entries in [-bound, bound].
DualVector random_dual_vector(int dim, std::mt19937_64& rng, long bound = kDefaultSampleBound);

/// dim(g) minus the largest rank of B_φ over `trials` random functionals.
/// For dim(g) <= kSymbolicIndexDim (or when `certify` is set) the generic
/// rank is also computed over the rational function field and the report is
/// marked certified.
IndexReport index(const LieAlgebra& g, int trials, std::uint64_t seed,
                  long bound = kDefaultSampleBound, std::optional<bool> certify = std::nullopt);

/// Rank of B_φ with φ = Σ x_k b_k^* over Q(x_1, ..., x_dim).
int symbolic_kirillov_rank(const LieAlgebra& g);

/// Index of g_A(P) for height(P) <= 2:
/// |Rel_E| - |P| + 2 C_P - 1 + Σ_{interior j} UD(P, j).
int index_formula_h2(const Poset& p);

/// Frobenius test for height <= 2: every interior i has |Ext(P^i)| = 3 and
/// the Hasse diagram of P_Ext is a tree.
bool is_frobenius_h2(const Poset& p);

/// Basis (coordinates) of the centre Z(g).
std::vector<RationalVector> center(const LieAlgebra& g);

struct CohomologyDims {
    int h0 = 0;
    int h1 = 0;
    int h2 = 0;
};

inline constexpr int kCohomologyDimBound = 14;

/// dim H^0, H^1, H^2 of g with adjoint coefficients, from exact ranks of the
/// Chevalley–Eilenberg differentials. Throws SizeBound above dim 14.
CohomologyDims ce_cohomology_dims(const LieAlgebra& g);

}  // namespace lieposet
