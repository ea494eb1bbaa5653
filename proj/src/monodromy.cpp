#include "lgcy/monodromy.hpp"

#include <algorithm>
#include <map>

namespace lgcy {

MonodromySpectrum monodromy_spectrum(const MilnorRing& ring) {
    MonodromySpectrum spec;
    for (const auto& m : ring.basis.monomials) {
        MonodromyEntry e;
        e.monomial = m;
        Rational charge = ring.weights.charge(m);  // <alpha+1, w>
        e.exponent = charge - Rational(1);
        e.angle = charge.frac();
        e.invariant = e.angle.is_zero();
        if (e.invariant) ++spec.invariant_dimension;
        spec.entries.push_back(std::move(e));
    }
    return spec;
}

Rational spectrum_duality_point(const MilnorRing& ring) {
    return Rational(long(ring.f.nvars())) - Rational(2);
}

bool spectrum_symmetric_about(const MonodromySpectrum& spec, const Rational& reflection) {
    std::map<Rational, long> count;
    for (const auto& e : spec.entries) {
        count[e.exponent] += 1;
        count[reflection - e.exponent] -= 1;
    }
    for (const auto& [v, c] : count)
        if (c != 0) return false;
    return true;
}

InvarianceReport invariance_realness_report(const MilnorRing& ring, const GradedSubring& sub) {
    InvarianceReport rep;
    auto spec = monodromy_spectrum(ring);
    rep.invariant_dim = spec.invariant_dimension;

    std::vector<Monomial> invariant;
    for (const auto& e : spec.entries)
        if (e.invariant) invariant.push_back(e.monomial);
    std::vector<Monomial> subring;
    for (const auto& lvl : sub.levels()) subring.insert(subring.end(), lvl.begin(), lvl.end());
    rep.subring_dim = subring.size();

    std::sort(invariant.begin(), invariant.end());
    std::sort(subring.begin(), subring.end());
    rep.sets_equal = invariant == subring;
    rep.realness_note =
        "invariant subspace spans a real subspace: eigenvalue-1 eigenspace of a real "
        "monodromy operator (classical fact, not re-derived here)";
    return rep;
}

}  // namespace lgcy
