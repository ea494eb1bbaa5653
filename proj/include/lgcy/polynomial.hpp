#ifndef LGCY_POLYNOMIAL_HPP
#define LGCY_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgcy/monomial.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

// Sparse multivariate polynomial over Q. Terms are stored in canonical
// grevlex-ascending order with no zero coefficients; immutable value type in
// spirit (all mutators are private to the arithmetic).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial monomial(Monomial m, Rational c = Rational(1));
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Total degree; nullopt for the zero polynomial.
    std::optional<std::uint64_t> degree() const;
    bool is_homogeneous() const;

    const Rational& coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& s) const;

    // Adds c * m in place; used by builders.
    void add_term(const Monomial& m, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(std::size_t var) const;

    // Canonical printing, grevlex-descending terms. parse(print(p)) == p.
    std::string str(const std::vector<std::string>& vars) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// Determinant of the matrix of second partials, exact (minor expansion with
// column-mask memoization; fine up to the desk-scale ~8 variables).
Polynomial hessian_determinant(const Polynomial& f);

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace lgcy

#endif
