#ifndef LGCY_GROEBNER_HPP
#define LGCY_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "lgcy/errors.hpp"
#include "lgcy/monomial.hpp"
#include "lgcy/polynomial.hpp"

namespace lgcy {

inline constexpr std::uint64_t kDefaultReductionBudget = 200000;

// Reduced Groebner basis: monic generators, auto-reduced, sorted by ascending
// leading term. Every S-polynomial reduces to zero (property-tested).
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order,
                  std::vector<Polynomial> source);

    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& source() const { return source_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Monomial>& leading_monomials() const { return lead_; }
    std::size_t nvars() const { return nvars_; }

private:
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    std::vector<Polynomial> source_;
    std::vector<Monomial> lead_;
    std::size_t nvars_;
};

// Buchberger with normal-strategy pair selection and both elimination
// criteria. Throws BudgetExceeded when the reduction-step budget runs out.
GroebnerBasis groebner(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                       std::uint64_t budget = kDefaultReductionBudget);

// Fully reduced normal form: no term of the result is divisible by any
// leading monomial of gb; p - result lies in the ideal; linear in p.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// S-polynomial, for the Buchberger-criterion property tests.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Memoizing normal-form evaluator keyed by monomial. Reduction of one
// monomial recurses only into strictly order-smaller monomials of the same
// total degree (homogeneous ideals), so the cache makes the Gram/Higgs
// assembly loops cheap.
class NormalFormCache {
public:
    explicit NormalFormCache(const GroebnerBasis& gb) : gb_(gb) {}

    const Polynomial& monomial_nf(const Monomial& m);
    Polynomial nf(const Polynomial& p);

private:
    const GroebnerBasis& gb_;
    std::map<Monomial, Polynomial> memo_;
};

}  // namespace lgcy

#endif
