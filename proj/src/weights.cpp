#include "lgcy/weights.hpp"

#include <stdexcept>

namespace lgcy {

WeightSystem::WeightSystem(std::vector<Rational> q) : q_(std::move(q)) {
    if (q_.empty()) throw std::invalid_argument("WeightSystem: no variables");
    mpz_class l(1);
    for (const auto& w : q_) {
        if (w.sign() <= 0) throw std::invalid_argument("WeightSystem: weights must be positive");
        mpz_class g;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.den().get_mpz_t());
    }
    if (!l.fits_slong_p()) throw std::invalid_argument("WeightSystem: denominator too large");
    d_ = l.get_si();
}

WeightSystem WeightSystem::homogeneous(std::size_t nvars, std::int64_t degree) {
    if (degree <= 0) throw std::invalid_argument("WeightSystem: degree must be positive");
    std::vector<Rational> q(nvars, Rational(1, static_cast<unsigned long>(degree)));
    return WeightSystem(std::move(q));
}

bool WeightSystem::is_homogeneous() const {
    for (const auto& w : q_)
        if (w != q_[0]) return false;
    return true;
}

bool WeightSystem::is_calabi_yau() const {
    return is_homogeneous() && q_[0] == Rational(1, static_cast<unsigned long>(q_.size()));
}

Rational WeightSystem::weighted_degree(const Monomial& m) const {
    if (m.nvars() != q_.size()) throw std::invalid_argument("weighted_degree: length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < q_.size(); ++i)
        if (m[i]) s += q_[i] * Rational(long(m[i]));
    return s;
}

Rational WeightSystem::charge(const Monomial& m) const {
    if (m.nvars() != q_.size()) throw std::invalid_argument("charge: length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < q_.size(); ++i)
        s += q_[i] * Rational(long(m[i]) + 1);
    return s;
}

Rational WeightSystem::central_charge() const {
    Rational s(0);
    for (const auto& w : q_) s += Rational(1) - Rational(2) * w;
    return s;
}

bool WeightSystem::is_quasi_homogeneous(const Polynomial& f) const {
    for (const auto& [m, c] : f.terms())
        if (weighted_degree(m) != Rational(1)) return false;
    return true;
}

std::optional<Rational> WeightSystem::uniform_weighted_degree(const Polynomial& f) const {
    if (f.is_zero()) return std::nullopt;
    auto it = f.terms().begin();
    Rational d = weighted_degree(it->first);
    for (++it; it != f.terms().end(); ++it)
        if (weighted_degree(it->first) != d) return std::nullopt;
    return d;
}

}  // namespace lgcy
