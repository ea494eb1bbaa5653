#ifndef LGCY_WEIGHTS_HPP
#define LGCY_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "lgcy/polynomial.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

// Weight system (q_1,...,q_N) of a quasi-homogeneous polynomial, with d the
// common denominator so q_i = w_i/d. For homogeneous degree-d input every
// q_i = 1/d.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<Rational> q);
    static WeightSystem homogeneous(std::size_t nvars, std::int64_t degree);

    std::size_t nvars() const { return q_.size(); }
    const std::vector<Rational>& weights() const { return q_; }
    const Rational& weight(std::size_t i) const { return q_[i]; }
    std::int64_t common_degree() const { return d_; }

    // All weights equal (q_i = 1/d); the homogeneous case.
    bool is_homogeneous() const;
    // Calabi-Yau condition in the homogeneous case: degree = variable count.
    bool is_calabi_yau() const;

    // sum q_i I_i
    Rational weighted_degree(const Monomial& m) const;
    // charge of z^I dz: sum q_i (I_i + 1)
    Rational charge(const Monomial& m) const;
    // c-hat = sum (1 - 2 q_i) over the variables
    Rational central_charge() const;

    // Every term of f has weighted degree exactly 1.
    bool is_quasi_homogeneous(const Polynomial& f) const;
    // All terms share one weighted degree; returns it (zero polynomial -> nullopt).
    std::optional<Rational> uniform_weighted_degree(const Polynomial& f) const;

private:
    std::vector<Rational> q_;
    std::int64_t d_;
};

}  // namespace lgcy

#endif
