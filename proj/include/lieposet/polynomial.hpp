#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieposet/rational.hpp"

namespace lieposet {

/// Sparse multivariate polynomial over the rationals in at most
/// kMaxVariables variables, with lexicographic monomial order. Only what the
/// symbolic rank and Pfaffian certificates need: ring operations and exact
/// division.
class Polynomial {
public:
    static constexpr std::size_t kMaxVariables = 24;
    using Monomial = std::array<std::uint8_t, kMaxVariables>;

    Polynomial() = default;
    Polynomial(int constant);  // NOLINT: implicit, so Matrix<Polynomial> can write T(0)
    explicit Polynomial(const Rational& constant);

    static Polynomial variable(std::size_t index);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    int total_degree() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    /// Exact quotient; throws std::domain_error if `divisor` does not divide.
    Polynomial divided_by(const Polynomial& divisor) const;

    /// Evaluates at a rational point (values for the first k variables).
    Rational evaluate(const std::vector<Rational>& point) const;

    std::string to_string() const;

private:
    // Descending lex order: the first element is the leading term.
    struct Greater {
        bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
    };
    std::map<Monomial, Rational, Greater> terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) { return a.divided_by(b); }

}  // namespace lieposet
