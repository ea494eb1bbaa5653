#include "lgcy/milnor.hpp"

namespace lgcy {

bool has_mixed_quadratic_term(const Polynomial& f) {
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != 2) continue;
        std::size_t support = 0;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i]) ++support;
        if (support == 2) return true;
    }
    return false;
}

std::shared_ptr<const MilnorRing> build_milnor_ring(const Polynomial& f, const WeightSystem& w,
                                                    const MonomialOrder& order,
                                                    std::uint64_t budget) {
    if (f.is_zero()) throw DegenerateSingularity("zero polynomial");
    if (f.nvars() != w.nvars())
        throw std::invalid_argument("build_milnor_ring: variable count mismatch");
    if (!w.is_quasi_homogeneous(f))
        throw NotQuasiHomogeneous("f is not quasi-homogeneous for the given weights");

    std::vector<Polynomial> jac;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Polynomial d = f.derivative(i);
        if (!d.is_zero()) any_nonzero = true;
        jac.push_back(std::move(d));
    }
    if (!any_nonzero) throw DegenerateSingularity("all partial derivatives vanish");
    // a variable missing from f makes the critical locus positive-dimensional
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (jac[i].is_zero())
            throw DegenerateSingularity("critical locus is not isolated (df/dz_" +
                                        std::to_string(i) + " = 0)");

    GroebnerBasis gb = groebner(jac, order, budget);
    if (!quotient_is_finite(gb))
        throw DegenerateSingularity("critical locus is not isolated (infinite Milnor ring)");
    QuotientBasis qb = standard_monomials(gb);

    std::uint64_t mu = qb.monomials.size();
    auto dims = graded_dimensions(qb);
    return std::make_shared<MilnorRing>(MilnorRing{f, w, std::move(gb), std::move(qb), mu,
                                                   std::move(dims),
                                                   !has_mixed_quadratic_term(f)});
}

std::string to_string(DeformationKind k) {
    switch (k) {
        case DeformationKind::Relevant: return "relevant";
        case DeformationKind::Marginal: return "marginal";
        default: return "irrelevant";
    }
}

DeformationClass classify_deformation(const Polynomial& phi, const WeightSystem& w) {
    auto wd = w.uniform_weighted_degree(phi);
    if (!wd)
        throw NotQuasiHomogeneous("deformation is zero or of mixed weighted degree");
    Rational pw = Rational(1) - *wd;
    DeformationKind kind = pw.sign() > 0   ? DeformationKind::Relevant
                           : pw.sign() < 0 ? DeformationKind::Irrelevant
                                           : DeformationKind::Marginal;
    return DeformationClass{kind, pw};
}

ModuliReport moduli_numbers(int n, std::int64_t d, const MilnorRing& ring) {
    if (n < 0 || d < 1) throw std::invalid_argument("moduli_numbers: bad (n, d)");
    if (ring.f.nvars() != static_cast<std::size_t>(n) + 2)
        throw std::invalid_argument("moduli_numbers: ring must have n+2 variables");
    if (!ring.weights.is_homogeneous() ||
        ring.weights.weight(0) != Rational(1, static_cast<unsigned long>(d)))
        throw NotHomogeneous("moduli_numbers: f must be homogeneous of degree d");

    ModuliReport r;
    r.n = n;
    r.d = d;
    r.formula_value = binomial(static_cast<unsigned long>(n + 1 + d), static_cast<unsigned long>(d)) -
                      Rational(long(n + 2) * long(n + 2));
    auto it = ring.graded_dims.find(static_cast<std::uint64_t>(d));
    r.marginal_dimension = it == ring.graded_dims.end() ? 0 : it->second;
    r.match = r.formula_value == Rational(long(r.marginal_dimension));
    r.k3_exception = (n == 2 && d == 4);
    if (r.k3_exception) r.complex_deformation_dim = 20;
    return r;
}

SteenbrinkReport steenbrink_levels(const MilnorRing& ring) {
    if (!ring.weights.is_homogeneous())
        throw NotHomogeneous("steenbrink_levels: f must be homogeneous");
    const long N = static_cast<long>(ring.f.nvars());
    const Rational d(ring.weights.common_degree());
    SteenbrinkReport rep;
    for (const auto& m : ring.basis.monomials) {
        Rational h = (Rational(long(m.degree())) + Rational(N)) / d;
        bool integral = h.is_integer();
        rep.entries.push_back({m, h, integral});
        if (integral)
            ++rep.dim_w_quotient;
        else
            ++rep.dim_w_lower;
    }
    return rep;
}

}  // namespace lgcy
