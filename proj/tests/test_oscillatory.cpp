#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lgcy/oscillatory.hpp"

using namespace lgcy;

TEST_CASE("gamma factors") {
    // Gamma(1)/2 and Gamma(2)/4
    CHECK(gamma_factor(2, 2, 0).value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gamma_factor(5, 5, 5).value == doctest::Approx(0.25).epsilon(1e-12));
    double g13 = std::tgamma(1.0 / 3.0) / std::cbrt(2.0);
    CHECK(gamma_factor(1, 3, 0).value == doctest::Approx(g13).epsilon(1e-12));
    CHECK_THROWS(gamma_factor(1, 1, 0));
}

TEST_CASE("closed form: -sqrt(pi) at m=2") {
    auto v = oscillatory_closed_form(2, 1, 0);
    CHECK(std::abs(v - std::complex<double>(-std::sqrt(M_PI), 0.0)) < 1e-12);
}

TEST_CASE("closed form: j-ratio is the monodromy phase") {
    for (int m = 2; m <= 7; ++m)
        for (int k = 1; k < m; ++k)
            for (int j = 0; j < m; ++j) {
                auto r = oscillatory_closed_form(m, k, j) / oscillatory_closed_form(m, k, 0);
                auto expect = std::polar(1.0, 2.0 * M_PI * j * k / m);
                CHECK(std::abs(r - expect) < 1e-12);
            }
}

TEST_CASE("quadrature matches the closed form") {
    for (auto [m, k, j] : std::vector<std::array<int, 3>>{
             {2, 1, 0}, {3, 1, 1}, {5, 3, 2}, {7, 6, 4}}) {
        auto t = oscillatory_quadrature(m, k, j);
        CHECK(t.relative_error < 1e-6);
    }
    auto sqrtpi = oscillatory_quadrature(2, 1, 0);
    CHECK(std::abs(sqrtpi.quadrature - std::complex<double>(-std::sqrt(M_PI), 0.0)) < 1e-6);
}

TEST_CASE("full sweep m <= 7") {
    for (int m = 2; m <= 7; ++m)
        for (int k = 1; k < m; ++k)
            for (int j = 0; j < m; ++j)
                CHECK(oscillatory_quadrature(m, k, j).relative_error < 1e-6);
}

TEST_CASE("j-equivariance of the quadrature values") {
    // I_j(k) = e^{2 pi i j k / m} I_0(k), the monodromy action on thimble labels
    for (int m = 2; m <= 7; ++m)
        for (int k = 1; k < m; ++k) {
            auto base = oscillatory_quadrature(m, k, 0).quadrature;
            for (int j = 1; j < m; ++j) {
                auto v = oscillatory_quadrature(m, k, j).quadrature;
                auto expect = std::polar(1.0, 2.0 * M_PI * j * k / m) * base;
                CHECK(std::abs(v - expect) < 1e-8);
            }
        }
}

TEST_CASE("gamma factor at N=1 reduces to the closed form's Gamma(k/m)") {
    // value = Gamma(k/m) / 2^{k/m}: the 2-power is the only residual constant
    // against the Gamma(k/m)/m of the thimble closed form (whose remaining
    // factor is the explicit phase difference)
    for (int m = 2; m <= 7; ++m)
        for (int k = 1; k < m; ++k) {
            double lhs = gamma_factor(1, m, k - 1).value * std::pow(2.0, double(k) / m);
            CHECK(lhs == doctest::Approx(std::tgamma(double(k) / m)).epsilon(1e-12));
        }
}

TEST_CASE("straight segment at m=2 is the known-different erf value") {
    // int_{1}^{-1} e^{-x^2} dx = -erf(1) sqrt(pi)
    auto seg = straight_segment_integral(2, 1, 0);
    double expect = -std::erf(1.0) * std::sqrt(M_PI);
    CHECK(std::abs(seg - std::complex<double>(expect, 0.0)) < 1e-9);
    // differs from the descent-contour value
    CHECK(std::abs(seg - oscillatory_closed_form(2, 1, 0)) > 0.2);
}

TEST_CASE("realness probe") {
    auto r3 = realness_probe(3);
    CHECK(r3.pass());
    // rho for (k=1) equals Gamma(1/3)/Gamma(2/3), same for all j
    double expect = std::tgamma(1.0 / 3.0) / std::tgamma(2.0 / 3.0);
    for (const auto& s : r3.samples)
        if (s.k == 1) CHECK(std::abs(s.rho.real() - expect) < 1e-6);

    auto r4 = realness_probe(4);
    CHECK(r4.pass());
    for (const auto& s : r4.samples)
        if (s.k == 2) CHECK(std::abs(s.rho - std::complex<double>(1.0, 0.0)) < 1e-8);

    auto r5 = realness_probe(5);
    CHECK(r5.pass());

    CHECK_THROWS(realness_probe(2));
}

TEST_CASE("argument validation") {
    CHECK_THROWS(oscillatory_quadrature(1, 1, 0));
    CHECK_THROWS(oscillatory_quadrature(3, 0, 0));
    CHECK_THROWS(oscillatory_quadrature(3, 3, 0));
    CHECK_THROWS(oscillatory_quadrature(3, 1, 3));
}
