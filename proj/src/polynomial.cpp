#include "lieposet/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace lieposet {

Polynomial::Polynomial(int constant) {
    if (constant != 0) terms_.emplace(Monomial{}, Rational(constant));
}

Polynomial::Polynomial(const Rational& constant) {
    if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t index) {
    if (index >= kMaxVariables) throw std::out_of_range("too many polynomial variables");
    Polynomial p;
    Monomial m{};
    m[index] = 1;
    p.terms_.emplace(m, Rational(1));
    return p;
}

int Polynomial::total_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (auto e : m) d += e;
        best = std::max(best, d);
    }
    return best;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out;
    if (sgn(scalar) == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * scalar);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m;
            for (std::size_t k = 0; k < kMaxVariables; ++k) m[k] = static_cast<std::uint8_t>(ma[k] + mb[k]);
            auto [it, inserted] = out.terms_.try_emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (sgn(it->second) == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial Polynomial::divided_by(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [lead_m, lead_c] = *divisor.terms_.begin();
    Polynomial quotient;
    Polynomial rest = *this;
    while (!rest.is_zero()) {
        const auto& [m, c] = *rest.terms_.begin();
        Monomial q{};
        for (std::size_t k = 0; k < kMaxVariables; ++k) {
            if (m[k] < lead_m[k]) throw std::domain_error("polynomial division is not exact");
            q[k] = static_cast<std::uint8_t>(m[k] - lead_m[k]);
        }
        Polynomial term;
        term.terms_.emplace(q, c / lead_c);
        quotient = quotient + term;
        rest = rest - term * divisor;
    }
    return quotient;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < kMaxVariables; ++k) {
            if (m[k] == 0) continue;
            const Rational& x = k < point.size() ? point[k] : Rational(0);
            for (int e = 0; e < m[k]; ++e) t *= x;
        }
        total += t;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        for (std::size_t k = 0; k < kMaxVariables; ++k)
            if (m[k]) out << "*x" << (k + 1) << (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
    }
    return out.str();
}

}  // namespace lieposet
