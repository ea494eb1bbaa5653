#include "lgcy/polynomial.hpp"

#include <stdexcept>

namespace lgcy {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, Rational c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m[i] = 1;
    return monomial(m);
}

std::optional<std::uint64_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // grevlex is graded: the last stored term has maximal total degree
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

const Rational& Polynomial::coeff(const Monomial& m) const {
    static const Rational kZero(0);
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(long(m[var])));
    }
    return r;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    // print leading (grevlex-largest) term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c.sign() < 0;
        Rational a = c.abs();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (m.is_one()) {
            out += a.str();
        } else {
            if (a != Rational(1)) out += a.str() + "*";
            out += m.str(vars);
        }
    }
    return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    const std::size_t nvars = m[0][0].nvars();
    // minors[mask] = det of rows [popcount..n) x columns in mask
    std::map<std::uint32_t, Polynomial> memo;
    // recursive lambda over column mask
    auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
        std::size_t row = n - k;
        Polynomial det(nvars);
        if (k == 0) {
            det = Polynomial::constant(nvars, Rational(1));
        } else {
            int s = 1;
            for (std::size_t j = 0, seen = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                Polynomial sub = self(self, mask & ~(1u << j));
                Polynomial contrib = m[row][j] * sub;
                det += (s > 0) ? contrib : -contrib;
                s = -s;
                ++seen;
            }
        }
        memo.emplace(mask, det);
        return det;
    };
    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    if (n >= 32) throw std::invalid_argument("determinant: matrix too large");
    return rec(rec, full);
}

Polynomial hessian_determinant(const Polynomial& f) {
    const std::size_t n = f.nvars();
    std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial di = f.derivative(i);
        for (std::size_t j = 0; j < n; ++j) h[i][j] = di.derivative(j);
    }
    return determinant(h);
}

}  // namespace lgcy
