#include "lieposet/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "lieposet/polynomial.hpp"

namespace lieposet {

namespace {

void accumulate(SparseVector& v, int index, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, int k) { return e.first < k; });
    if (it != v.end() && it->first == index) {
        it->second += c;
        if (sgn(it->second) == 0) v.erase(it);
    } else {
        v.insert(it, {index, c});
    }
}

GlElement commutator(const GlElement& a, const GlElement& b) {
    GlElement out;
    auto add = [&](int i, int j, const Rational& c) {
        auto& slot = out[{i, j}];
        slot += c;
        if (sgn(slot) == 0) out.erase({i, j});
    };
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            if (pa.second == pb.first) add(pa.first, pb.second, ca * cb);
            if (pb.second == pa.first) add(pb.first, pa.second, -ca * cb);
        }
    return out;
}

GlElement basis_matrix(const BasisLabel& label) {
    GlElement m;
    if (label.kind == BasisLabel::Kind::DiagDiff) {
        m[{1, 1}] = 1;
        m[{label.p, label.p}] = -1;
    } else {
        m[{label.p, label.q}] = 1;
    }
    return m;
}

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Colex rank of a sorted subset.
std::size_t subset_rank(const std::vector<int>& s) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += choose(static_cast<std::size_t>(s[i]), i + 1);
    return r;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> s(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            visit(s);
            return;
        }
        for (int v = start; v < n; ++v) {
            s[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::string BasisLabel::to_string() const {
    switch (kind) {
        case Kind::DiagDiff: return "E_{1,1}-E_{" + std::to_string(p) + "," + std::to_string(p) + "}";
        case Kind::Elem: return "E_{" + std::to_string(p) + "," + std::to_string(q) + "}";
        case Kind::Opaque: break;
    }
    return "e_" + std::to_string(p);
}

RationalVector LieAlgebra::bracket(const RationalVector& x, const RationalVector& y) const {
    RationalVector out(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Rational f = x[i] * y[j];
            for (const auto& [k, c] : bracket(i, j)) out[k] += f * c;
        }
    }
    return out;
}

int LieAlgebra::index_of(const BasisLabel& label) const {
    for (int k = 0; k < dim_; ++k)
        if (basis_[k] == label) return k;
    return -1;
}

DualVector LieAlgebra::dual_vector(const Functional& phi) const {
    DualVector values(static_cast<std::size_t>(dim_));
    auto coeff = [&](int i, int j) -> Rational {
        auto it = phi.terms.find({i, j});
        return it == phi.terms.end() ? Rational(0) : it->second;
    };
    for (int k = 0; k < dim_; ++k) {
        const BasisLabel& b = basis_[k];
        switch (b.kind) {
            case BasisLabel::Kind::DiagDiff: values[k] = coeff(1, 1) - coeff(b.p, b.p); break;
            case BasisLabel::Kind::Elem: values[k] = coeff(b.p, b.q); break;
            case BasisLabel::Kind::Opaque: values[k] = coeff(b.p, b.p); break;
        }
    }
    return values;
}

Functional LieAlgebra::functional_from_values(const DualVector& values) const {
    Functional phi;
    for (int k = 0; k < dim_; ++k) {
        const BasisLabel& b = basis_[k];
        switch (b.kind) {
            case BasisLabel::Kind::DiagDiff: phi.add(b.p, b.p, -values[k]); break;
            case BasisLabel::Kind::Elem: phi.add(b.p, b.q, values[k]); break;
            case BasisLabel::Kind::Opaque: phi.add(b.p, b.p, values[k]); break;
        }
    }
    return phi;
}

GlElement LieAlgebra::to_gl(const RationalVector& coords) const {
    if (!origin_) throw Error(ErrorKind::ShapeMismatch, "algebra has no matrix realisation");
    GlElement out;
    for (int k = 0; k < dim_; ++k) {
        if (sgn(coords[k]) == 0) continue;
        for (const auto& [pos, c] : basis_matrix(basis_[k])) {
            auto& slot = out[pos];
            slot += c * coords[k];
            if (sgn(slot) == 0) out.erase(pos);
        }
    }
    return out;
}

RationalVector LieAlgebra::from_gl(const GlElement& element) const {
    if (!origin_) throw Error(ErrorKind::ShapeMismatch, "algebra has no matrix realisation");
    RationalVector coords(static_cast<std::size_t>(dim_));
    Rational trace = 0;
    for (const auto& [pos, c] : element) {
        const auto [i, j] = pos;
        if (i == j) {
            trace += c;
            if (i != 1) coords[index_of(BasisLabel::diag_diff(i))] -= c;
        } else {
            auto it = elem_index_.find({i, j});
            if (it == elem_index_.end())
                throw Error(ErrorKind::ShapeMismatch,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside the poset");
            coords[it->second] += c;
        }
    }
    if (sgn(trace) != 0) throw Error(ErrorKind::ShapeMismatch, "matrix is not trace-zero");
    return coords;
}

std::optional<std::tuple<int, int, int>> LieAlgebra::jacobi_violation() const {
    // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on basis triples i < j < k.
    auto ad = [&](int a, const SparseVector& v, SparseVector& out, const Rational& s) {
        for (const auto& [m, c] : v)
            for (const auto& [o, d] : bracket(a, m)) accumulate(out, o, s * c * d);
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                SparseVector sum;
                ad(i, bracket(j, k), sum, 1);
                ad(j, bracket(k, i), sum, 1);
                ad(k, bracket(i, j), sum, 1);
                if (!sum.empty()) return std::make_tuple(i, j, k);
            }
    return std::nullopt;
}

LieAlgebra build_type_a(const Poset& p) {
    const int n = p.size();
    if (n < 2) throw Error(ErrorKind::TooSmall, "type-A algebras need at least two elements");
    LieAlgebra g;
    for (int q = 2; q <= n; ++q) g.basis_.push_back(BasisLabel::diag_diff(q));
    for (const auto& [a, b] : p.relations()) {
        g.elem_index_[{a, b}] = static_cast<int>(g.basis_.size());
        g.basis_.push_back(BasisLabel::elem(a, b));
    }
    g.dim_ = static_cast<int>(g.basis_.size());
    g.origin_ = p;
    g.table_.assign(static_cast<std::size_t>(g.dim_) * g.dim_, {});
    std::vector<GlElement> mats;
    for (const auto& b : g.basis_) mats.push_back(basis_matrix(b));
    for (int i = 0; i < g.dim_; ++i)
        for (int j = i + 1; j < g.dim_; ++j) {
            const RationalVector coords = g.from_gl(commutator(mats[i], mats[j]));
            SparseVector v;
            for (int k = 0; k < g.dim_; ++k)
                if (sgn(coords[k]) != 0) v.emplace_back(k, coords[k]);
            SparseVector neg = v;
            for (auto& e : neg) e.second = -e.second;
            g.table_[static_cast<std::size_t>(i) * g.dim_ + j] = std::move(v);
            g.table_[static_cast<std::size_t>(j) * g.dim_ + i] = std::move(neg);
        }
    return g;
}

LieAlgebra build_raw(int dim, const std::vector<std::tuple<int, int, SparseVector>>& brackets) {
    if (dim < 1) throw Error(ErrorKind::TooSmall, "algebra dimension must be positive");
    LieAlgebra g;
    g.dim_ = dim;
    for (int k = 1; k <= dim; ++k) g.basis_.push_back(BasisLabel::opaque(k));
    g.table_.assign(static_cast<std::size_t>(dim) * dim, {});
    std::vector<bool> set(static_cast<std::size_t>(dim) * dim, false);
    for (const auto& [i1, j1, coords1] : brackets) {
        const int i = i1 - 1, j = j1 - 1;
        if (i < 0 || j < 0 || i >= dim || j >= dim)
            throw Error(ErrorKind::OutOfRange, "bracket index out of range");
        SparseVector v;
        for (const auto& [k1, c] : coords1) {
            if (k1 < 1 || k1 > dim) throw Error(ErrorKind::OutOfRange, "bracket coordinate out of range");
            accumulate(v, k1 - 1, c);
        }
        if (i == j) {
            if (!v.empty()) throw Error(ErrorKind::ShapeMismatch, "[e_i, e_i] must vanish");
            continue;
        }
        SparseVector neg = v;
        for (auto& e : neg) e.second = -e.second;
        auto check = [&](int a, int b, const SparseVector& val) {
            const std::size_t slot = static_cast<std::size_t>(a) * dim + b;
            if (set[slot] && g.table_[slot] != val)
                throw Error(ErrorKind::ShapeMismatch, "brackets violate antisymmetry at (" + std::to_string(a + 1) +
                                                          "," + std::to_string(b + 1) + ")");
            set[slot] = true;
            g.table_[slot] = val;
        };
        check(i, j, v);
        check(j, i, neg);
    }
    if (dim <= 30) {
        if (auto bad = g.jacobi_violation()) {
            const auto [a, b, c] = *bad;
            throw Error(ErrorKind::JacobiViolation, "Jacobi identity fails on (e_" + std::to_string(a + 1) + ", e_" +
                                                        std::to_string(b + 1) + ", e_" + std::to_string(c + 1) + ")");
        }
    }
    return g;
}

RationalMatrix kirillov_matrix(const LieAlgebra& g, const DualVector& phi) {
    if (static_cast<int>(phi.size()) != g.dim()) throw Error(ErrorKind::ShapeMismatch, "functional size mismatch");
    const auto n = static_cast<std::size_t>(g.dim());
    RationalMatrix m(n, n);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            Rational v = 0;
            for (const auto& [k, c] : g.bracket(i, j)) v += c * phi[k];
            m(i, j) = v;
            m(j, i) = -v;
        }
    return m;
}

RationalMatrix kirillov_matrix(const LieAlgebra& g, const Functional& phi) {
    return kirillov_matrix(g, g.dual_vector(phi));
}

RationalMatrix extended_matrix(const LieAlgebra& g, const DualVector& phi) {
    if (g.dim() % 2 == 0)
        throw Error(ErrorKind::EvenDimension, "contact criterion needs odd dimension, got " + std::to_string(g.dim()));
    const RationalMatrix b = kirillov_matrix(g, phi);
    const auto n = static_cast<std::size_t>(g.dim());
    RationalMatrix m(n + 1, n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        m(0, k + 1) = phi[k];
        m(k + 1, 0) = -phi[k];
        for (std::size_t l = 0; l < n; ++l) m(k + 1, l + 1) = b(k, l);
    }
    return m;
}

RationalMatrix extended_matrix(const LieAlgebra& g, const Functional& phi) {
    return extended_matrix(g, g.dual_vector(phi));
}

DualVector random_dual_vector(int dim, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    DualVector v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = dist(rng);
    return v;
}

int symbolic_kirillov_rank(const LieAlgebra& g) {
    // One variable per basis element that occurs in some bracket.
    std::vector<int> var(static_cast<std::size_t>(g.dim()), -1);
    int vars = 0;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j)
            for (const auto& [k, c] : g.bracket(i, j))
                if (var[k] < 0) var[k] = vars++;
    if (static_cast<std::size_t>(vars) > Polynomial::kMaxVariables)
        throw Error(ErrorKind::SizeBound, "too many variables for a symbolic rank");
    const auto n = static_cast<std::size_t>(g.dim());
    Matrix<Polynomial> m(n, n);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            Polynomial v;
            for (const auto& [k, c] : g.bracket(i, j)) v = v + Polynomial::variable(var[k]) * c;
            m(i, j) = v;
            m(j, i) = Polynomial(0) - v;
        }
    return static_cast<int>(bareiss_reduce(m));
}

IndexReport index(const LieAlgebra& g, int trials, std::uint64_t seed, long bound, std::optional<bool> certify) {
    if (trials < 1) throw Error(ErrorKind::OutOfRange, "index needs at least one trial");
    std::mt19937_64 rng(seed);
    IndexReport report;
    report.trials = trials;
    report.sample_bound = bound;
    for (int t = 0; t < trials; ++t) {
        const int r = static_cast<int>(rank(kirillov_matrix(g, random_dual_vector(g.dim(), rng, bound))));
        report.max_rank = std::max(report.max_rank, r);
    }
    report.index = g.dim() - report.max_rank;
    // A nonzero r-minor of B_x has degree r; a uniform point from a set of
    // size 2B+1 is a root with probability at most r / (2B + 1).
    const double set_size = 2.0 * static_cast<double>(bound) + 1.0;
    report.per_trial_failure = std::min(1.0, static_cast<double>(g.dim()) / set_size);
    report.failure_bound = std::pow(report.per_trial_failure, trials);
    const bool do_certify = certify.value_or(g.dim() <= kSymbolicIndexDim);
    if (do_certify) {
        const int generic = symbolic_kirillov_rank(g);
        report.max_rank = generic;
        report.index = g.dim() - generic;
        report.certified = true;
        report.failure_bound = 0.0;
    }
    return report;
}

int index_formula_h2(const Poset& p) {
    if (p.height() > 2) throw Error(ErrorKind::HeightBound, "index formula needs height <= 2");
    const ExtremalData ext = extremal_data(p);
    int total = static_cast<int>(ext.rel_e.size()) - p.size() + 2 * p.components() - 1;
    for (Element j : ext.interior) total += up_down(p, j).ud;
    return total;
}

bool is_frobenius_h2(const Poset& p) {
    if (p.height() > 2) throw Error(ErrorKind::HeightBound, "Frobenius test needs height <= 2");
    const ExtremalData ext = extremal_data(p);
    for (Element i : ext.interior) {
        const Poset nb = interior_neighborhood(p, i);
        if (extremal_data(nb).ext.size() != 3) return false;
    }
    const ForestCheck forest = is_forest(p, true);
    // A tree: acyclic and connected. P_Ext is connected exactly when P is.
    return forest.is_forest && p.is_connected();
}

std::vector<RationalVector> center(const LieAlgebra& g) {
    // z = Σ z_k b_k with [z, b_i] = 0: rows (i, out), columns k.
    const auto n = static_cast<std::size_t>(g.dim());
    RationalMatrix m(n * n, n);
    for (int i = 0; i < g.dim(); ++i)
        for (int k = 0; k < g.dim(); ++k)
            for (const auto& [o, c] : g.bracket(k, i)) m(static_cast<std::size_t>(i) * n + o, k) += c;
    return kernel(m);
}

CohomologyDims ce_cohomology_dims(const LieAlgebra& g) {
    const int d = g.dim();
    if (d > kCohomologyDimBound)
        throw Error(ErrorKind::SizeBound, "cohomology limited to dimension " + std::to_string(kCohomologyDimBound));
    // Rank of d^k : Hom(Λ^k g, g) -> Hom(Λ^{k+1} g, g), one sparse row per
    // output coordinate (T, o); columns are (S, l) with S a k-subset.
    auto differential_rank = [&](int k) -> std::size_t {
        const std::size_t ncols_s = choose(static_cast<std::size_t>(d), static_cast<std::size_t>(k));
        (void)ncols_s;
        std::vector<SparseRow> rows;
        for_each_subset(d, k + 1, [&](const std::vector<int>& t) {
            std::vector<std::map<std::size_t, Rational>> acc(static_cast<std::size_t>(d));
            auto col = [&](const std::vector<int>& s, int l) {
                return subset_rank(s) * static_cast<std::size_t>(d) + static_cast<std::size_t>(l);
            };
            // Σ_i (-1)^i [x_i, ω(..x̂_i..)]
            for (int i = 0; i <= k; ++i) {
                std::vector<int> s;
                for (int a = 0; a <= k; ++a)
                    if (a != i) s.push_back(t[a]);
                const int sign = (i % 2 == 0) ? 1 : -1;
                for (int l = 0; l < d; ++l)
                    for (const auto& [o, c] : g.bracket(t[i], l)) acc[o][col(s, l)] += sign * c;
            }
            // Σ_{i<j} (-1)^{i+j} ω([x_i, x_j], ..x̂_i..x̂_j..)
            for (int i = 0; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j) {
                    std::vector<int> rest;
                    for (int a = 0; a <= k; ++a)
                        if (a != i && a != j) rest.push_back(t[a]);
                    const int sign_ij = ((i + j) % 2 == 0) ? 1 : -1;
                    for (const auto& [m, c] : g.bracket(t[i], t[j])) {
                        if (std::find(rest.begin(), rest.end(), m) != rest.end()) continue;
                        std::vector<int> s = rest;
                        const auto pos = std::lower_bound(s.begin(), s.end(), m) - s.begin();
                        s.insert(s.begin() + pos, m);
                        const int sign_m = (pos % 2 == 0) ? 1 : -1;
                        for (int o = 0; o < d; ++o) acc[o][col(s, o)] += sign_ij * sign_m * c;
                    }
                }
            for (int o = 0; o < d; ++o) {
                SparseRow row;
                for (auto& [c, v] : acc[o])
                    if (sgn(v) != 0) row.emplace_back(c, v);
                if (!row.empty()) rows.push_back(std::move(row));
            }
        });
        return sparse_rank(std::move(rows));
    };
    const auto ud = static_cast<std::size_t>(d);
    const std::size_t r0 = differential_rank(0);
    const std::size_t r1 = differential_rank(1);
    const std::size_t r2 = d >= 2 ? differential_rank(2) : 0;
    CohomologyDims dims;
    dims.h0 = static_cast<int>(ud - r0);
    dims.h1 = static_cast<int>(ud * ud - r1 - r0);
    dims.h2 = static_cast<int>(ud * choose(ud, 2) - r2 - r1);
    return dims;
}

}  // namespace lieposet
