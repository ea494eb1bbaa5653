#ifndef LGCY_RESIDUE_HPP
#define LGCY_RESIDUE_HPP

#include <memory>

#include "lgcy/matrix.hpp"
#include "lgcy/milnor.hpp"

namespace lgcy {

// Exact Grothendieck residue on a Milnor ring, computed through the socle:
// the top weighted-degree piece of R_f is one-dimensional and generated by
// the class of hess(f), whose normalized residue equals mu. All values carry
// the unit normalization (1/2\pi i)^N; the classical Res_f differs by the
// (2\pi i)^N factor recorded in `convention`.
class ResiduePairing {
public:
    explicit ResiduePairing(std::shared_ptr<const MilnorRing> ring);

    const MilnorRing& ring() const { return *ring_; }
    std::shared_ptr<const MilnorRing> ring_ptr() const { return ring_; }
    const Polynomial& hessian_class() const { return hessian_class_; }
    // weighted socle degree: sum (1 - 2 q_i)
    const Rational& socle_weighted_degree() const { return socle_wdeg_; }
    // total socle degree N(d-2), defined in the homogeneous case
    std::optional<std::uint64_t> socle_total_degree() const { return socle_deg_; }
    static constexpr const char* convention = "Res_f = (2*pi*i)^N * value";

    // (1/2 pi i)^N - normalized residue of g dz / (d_1 f ... d_N f).
    Rational grothendieck_residue(const Polynomial& g) const;
    Rational residue_of_monomial(const Monomial& m) const;

    // Res_f(A, B) up to the convention factor: residue of A*B.
    Rational residue_pairing(const Polynomial& a, const Polynomial& b) const;

    NormalFormCache& nf_cache() const { return cache_; }

private:
    std::shared_ptr<const MilnorRing> ring_;
    Polynomial hessian_class_;
    Rational socle_wdeg_;
    std::optional<std::uint64_t> socle_deg_;
    mutable NormalFormCache cache_;
    mutable std::map<Monomial, Rational> residue_memo_;
};

// Residue pairing restricted to a pair of total degrees (homogeneous case).
// Nonzero only when deg_a + deg_b equals the socle degree.
struct GramBlock {
    std::uint64_t deg_a = 0, deg_b = 0;
    std::vector<Monomial> rows, cols;  // standard monomials of each degree
    RationalMatrix matrix;
};

GramBlock gram_block(const ResiduePairing& rp, std::uint64_t deg_a, std::uint64_t deg_b);

}  // namespace lgcy

#endif
