#include "lgcy/oracles.hpp"

#include <cmath>
#include <vector>

namespace lgcy {

namespace {

// dense coefficient list of a univariate polynomial
std::vector<double> dense_coeffs(const Polynomial& p) {
    std::size_t deg = p.degree() ? static_cast<std::size_t>(*p.degree()) : 0;
    std::vector<double> c(deg + 1, 0.0);
    for (const auto& [m, r] : p.terms()) c[m[0]] = r.to_double();
    return c;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> v(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

}  // namespace

std::complex<double> contour_residue_oracle_1d(const Polynomial& f, const Polynomial& g,
                                               double radius, int samples) {
    if (f.nvars() != 1 || g.nvars() != 1)
        throw std::invalid_argument("contour_residue_oracle_1d: univariate input required");
    auto fp = dense_coeffs(f.derivative(0));
    auto gc = dense_coeffs(g);
    // (1/2 pi i) \oint g/f' dz = (1/2 pi) \int_0^{2 pi} g(z) z / f'(z) dtheta
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < samples; ++k) {
        double th = 2.0 * M_PI * k / samples;
        std::complex<double> z = std::polar(radius, th);
        acc += horner(gc, z) * z / horner(fp, z);
    }
    return acc / double(samples);
}

Rational separable_residue_oracle(const Polynomial& f, const Monomial& g) {
    const std::size_t n = f.nvars();
    if (g.nvars() != n)
        throw std::invalid_argument("separable_residue_oracle: variable count mismatch");
    // each term must be a pure power of a single variable, one term per variable
    std::vector<Rational> coeff(n, Rational(0));
    std::vector<std::uint32_t> power(n, 0);
    for (const auto& [m, c] : f.terms()) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) {
                ++support;
                var = i;
            }
        if (support != 1)
            throw NonSeparable("separable_residue_oracle: mixed or constant term");
        if (power[var] != 0)
            throw NonSeparable("separable_residue_oracle: repeated variable part");
        if (m[var] < 2)
            throw NonSeparable("separable_residue_oracle: linear part has no critical point");
        power[var] = m[var];
        coeff[var] = c;
    }
    Rational out(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (power[i] == 0)
            throw NonSeparable("separable_residue_oracle: variable missing from f");
        // 1-variable residue of z^k dz / (c d z^{d-1}): nonzero only for k = d-2
        if (g[i] != power[i] - 2) return Rational(0);
        out *= (coeff[i] * Rational(long(power[i]))).inverse();
    }
    return out;
}

}  // namespace lgcy
