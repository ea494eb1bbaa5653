#include "lgcy/quotient.hpp"

#include <algorithm>

namespace lgcy {

namespace {

// Minimal exponent b_i with z_i^{b_i} among the leading monomials, if any.
std::vector<std::optional<std::uint32_t>> pure_power_bounds(const GroebnerBasis& gb) {
    const std::size_t n = gb.nvars();
    std::vector<std::optional<std::uint32_t>> bound(n);
    for (const auto& lm : gb.leading_monomials()) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm[i]) {
                ++support;
                var = i;
            }
        }
        if (support == 1) {
            if (!bound[var] || lm[var] < *bound[var]) bound[var] = lm[var];
        }
        if (support == 0) bound.assign(n, std::uint32_t(0));  // unit ideal
    }
    return bound;
}

bool reducible(const Monomial& m, const std::vector<Monomial>& leads) {
    for (const auto& l : leads)
        if (l.divides(m)) return true;
    return false;
}

void sort_basis(std::vector<Monomial>& v) {
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(v.begin(), v.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ord.less(a, b);
    });
}

}  // namespace

bool quotient_is_finite(const GroebnerBasis& gb) {
    for (const auto& b : pure_power_bounds(gb))
        if (!b) return false;
    return true;
}

QuotientBasis standard_monomials(const GroebnerBasis& gb, std::optional<std::uint64_t> degree_cap) {
    QuotientBasis out;
    out.finite = quotient_is_finite(gb);
    const std::size_t n = gb.nvars();
    const auto& leads = gb.leading_monomials();

    if (out.finite) {
        auto bound = pure_power_bounds(gb);
        for (const auto& b : bound)
            if (*b == 0) return out;  // unit ideal: no standard monomials
        // odometer over the exponent box [0, b_i)
        Monomial m(n);
        for (;;) {
            if (!reducible(m, leads)) out.monomials.push_back(m);
            std::size_t i = 0;
            while (i < n) {
                if (m[i] + 1 < *bound[i]) {
                    m[i] += 1;
                    break;
                }
                m[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
        sort_basis(out.monomials);
        return out;
    }

    if (!degree_cap)
        throw InfiniteQuotient("standard_monomials: infinite quotient and no degree cap requested");
    out.cap = degree_cap;
    // enumerate degree by degree
    for (std::uint64_t d = 0; d <= *degree_cap; ++d) {
        // all monomials of total degree d via odometer with degree filter
        std::vector<std::uint32_t> e(n, 0);
        e[0] = static_cast<std::uint32_t>(d);
        // iterate compositions of d into n parts
        for (;;) {
            Monomial m{std::vector<std::uint32_t>(e)};
            if (!reducible(m, leads)) out.monomials.push_back(m);
            // next composition (colex)
            if (n == 1) break;
            if (e[0] > 0) {
                e[0] -= 1;
                e[1] += 1;
            } else {
                std::size_t i = 1;
                while (i < n && e[i] == 0) ++i;
                if (i + 1 >= n) break;
                std::uint32_t v = e[i];
                e[i] = 0;
                e[0] = v - 1;
                e[i + 1] += 1;
            }
        }
    }
    sort_basis(out.monomials);
    return out;
}

std::map<std::uint64_t, std::uint64_t> graded_dimensions(const QuotientBasis& qb) {
    if (!qb.finite)
        throw InfiniteQuotient("graded_dimensions: quotient basis is not finite");
    std::map<std::uint64_t, std::uint64_t> dims;
    for (const auto& m : qb.monomials) dims[m.degree()] += 1;
    return dims;
}

}  // namespace lgcy
