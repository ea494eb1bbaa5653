#include "lgcy/residue.hpp"

namespace lgcy {

ResiduePairing::ResiduePairing(std::shared_ptr<const MilnorRing> ring)
    : ring_(std::move(ring)), cache_(ring_->gb) {
    socle_wdeg_ = ring_->weights.central_charge();
    if (ring_->weights.is_homogeneous()) {
        const std::uint64_t N = ring_->f.nvars();
        const std::uint64_t d = static_cast<std::uint64_t>(ring_->weights.common_degree());
        socle_deg_ = N * (d - 2);
    }
    hessian_class_ = cache_.nf(hessian_determinant(ring_->f));
    if (hessian_class_.is_zero())
        throw ProportionalityViolation("hessian class vanishes in the Milnor ring");
    for (const auto& [m, c] : hessian_class_.terms()) {
        if (ring_->weights.weighted_degree(m) != socle_wdeg_)
            throw ProportionalityViolation("hessian class not concentrated in the socle degree");
    }
}

Rational ResiduePairing::grothendieck_residue(const Polynomial& g) const {
    Polynomial nf = cache_.nf(g);
    // socle component: terms of weighted degree c-hat
    Polynomial socle(nf.nvars());
    for (const auto& [m, c] : nf.terms())
        if (ring_->weights.weighted_degree(m) == socle_wdeg_) socle.add_term(m, c);
    if (socle.is_zero()) return Rational(0);
    // solve socle = lambda * hessian_class; the socle is 1-dimensional
    const auto& [hm, hc] = *hessian_class_.terms().begin();
    Rational lambda = socle.coeff(hm) / hc;
    if (socle != hessian_class_ * lambda)
        throw ProportionalityViolation(
            "socle component is not a scalar multiple of the hessian class");
    return lambda * Rational(long(ring_->mu));
}

Rational ResiduePairing::residue_of_monomial(const Monomial& m) const {
    auto it = residue_memo_.find(m);
    if (it != residue_memo_.end()) return it->second;
    Rational r = grothendieck_residue(Polynomial::monomial(m));
    residue_memo_.emplace(m, r);
    return r;
}

Rational ResiduePairing::residue_pairing(const Polynomial& a, const Polynomial& b) const {
    // expand the product through the memoized per-monomial residues
    Rational acc(0);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) acc += ca * cb * residue_of_monomial(ma * mb);
    return acc;
}

GramBlock gram_block(const ResiduePairing& rp, std::uint64_t deg_a, std::uint64_t deg_b) {
    GramBlock blk;
    blk.deg_a = deg_a;
    blk.deg_b = deg_b;
    for (const auto& m : rp.ring().basis.monomials) {
        if (m.degree() == deg_a) blk.rows.push_back(m);
        if (m.degree() == deg_b) blk.cols.push_back(m);
    }
    blk.matrix = RationalMatrix(blk.rows.size(), blk.cols.size());
    for (std::size_t i = 0; i < blk.rows.size(); ++i)
        for (std::size_t j = 0; j < blk.cols.size(); ++j)
            blk.matrix.at(i, j) = rp.residue_of_monomial(blk.rows[i] * blk.cols[j]);
    return blk;
}

}  // namespace lgcy
