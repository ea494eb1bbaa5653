#include "lgcy/oscillatory.hpp"

#include <cmath>
#include <stdexcept>

namespace lgcy {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 16-point Gauss-Legendre nodes/weights on [-1, 1]
const double kGLNode[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                           0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                           0.9445750230732326, 0.9894009349916499};
const double kGLWeight[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                             0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                             0.0622535239386479, 0.0271524594117541};

// composite 16-point Gauss-Legendre of fn over [0, R] with ~nodes points
template <typename F>
std::complex<double> integrate(F&& fn, double lo, double hi, int nodes) {
    int panels = std::max(1, nodes / 16);
    double h = (hi - lo) / panels;
    std::complex<double> acc(0.0, 0.0);
    for (int p = 0; p < panels; ++p) {
        double mid = lo + (p + 0.5) * h;
        double half = 0.5 * h;
        for (int q = 0; q < 8; ++q) {
            acc += kGLWeight[q] * half *
                   (fn(mid + half * kGLNode[q]) + fn(mid - half * kGLNode[q]));
        }
    }
    return acc;
}

void check_mkj(int m, int k, int j) {
    if (m < 2) throw std::invalid_argument("oscillatory: m >= 2 required");
    if (k < 1 || k > m - 1) throw std::invalid_argument("oscillatory: 1 <= k <= m-1 required");
    if (j < 0 || j > m - 1) throw std::invalid_argument("oscillatory: 0 <= j <= m-1 required");
}

}  // namespace

GammaFactor gamma_factor(int N, int m, int k) {
    if (m < 2) throw std::invalid_argument("gamma_factor: m >= 2 required");
    if (k < 0) throw std::invalid_argument("gamma_factor: k >= 0 required");
    double s = double(N + k) / double(m);
    return GammaFactor{N, m, k, std::tgamma(s) / std::pow(2.0, s)};
}

std::complex<double> oscillatory_closed_form(int m, int k, int j) {
    check_mkj(m, k, j);
    auto phase = [&](double t) { return std::polar(1.0, 2.0 * kPi * t); };
    std::complex<double> diff =
        phase(double((j + 1)) * k / m) - phase(double(j) * k / m);
    return diff * std::tgamma(double(k) / m) / double(m);
}

ThimbleIntegral oscillatory_quadrature(int m, int k, int j, double radius, int nodes) {
    check_mkj(m, k, j);
    ThimbleIntegral out;
    out.m = m;
    out.k = k;
    out.j = j;
    out.closed_form = oscillatory_closed_form(m, k, j);

    // ray at angle theta: x = t e^{i theta}, t in [0, R]; е^{-x^m} = e^{-t^m}
    // since e^{i m theta} = 1 on thimble rays
    auto ray = [&](int ray_index) {
        double theta = 2.0 * kPi * ray_index / m;
        std::complex<double> phase_k = std::polar(1.0, theta * k);  // dir^k from dx = dir dt
        return integrate(
            [&](double t) {
                return std::exp(-std::pow(t, m)) * std::pow(t, k - 1) * phase_k;
            },
            0.0, radius, nodes);
    };
    out.quadrature = ray(j + 1) - ray(j);
    out.truncation_bound = std::exp(-std::pow(radius, m));
    out.relative_error = std::abs(out.quadrature - out.closed_form) / std::abs(out.closed_form);
    return out;
}

std::complex<double> straight_segment_integral(int m, int k, int j, int nodes) {
    check_mkj(m, k, j);
    std::complex<double> a = std::polar(1.0, 2.0 * kPi * j / m);
    std::complex<double> b = std::polar(1.0, 2.0 * kPi * (j + 1) / m);
    std::complex<double> dz = b - a;
    return integrate(
               [&](double t) {
                   std::complex<double> z = a + dz * t;
                   return std::exp(-std::pow(z, m)) * std::pow(z, k - 1);
               },
               0.0, 1.0, nodes) *
           dz;
}

RealnessReport realness_probe(int m, double tol_structure, double tol_match, int nodes) {
    if (m < 3) throw std::invalid_argument("realness_probe: m >= 3 required");
    RealnessReport rep;
    rep.m = m;
    rep.tol_structure = tol_structure;
    rep.tol_match = tol_match;
    rep.real_positive = true;
    rep.j_independent = true;
    rep.matches_gamma_ratio = true;

    for (int k = 1; k <= m - 1; ++k) {
        double predicted = std::tgamma(double(k) / m) / std::tgamma(1.0 - double(k) / m);
        std::complex<double> first;
        for (int j = 0; j <= m - 1; ++j) {
            std::complex<double> num =
                std::conj(oscillatory_quadrature(m, k, j, 12.0, nodes).quadrature);
            std::complex<double> den = oscillatory_quadrature(m, m - k, j, 12.0, nodes).quadrature;
            std::complex<double> rho = num / den;
            rep.samples.push_back({k, j, rho, predicted});
            if (std::abs(rho.imag()) > tol_structure || rho.real() <= 0.0)
                rep.real_positive = false;
            if (j == 0)
                first = rho;
            else if (std::abs(rho - first) > tol_structure)
                rep.j_independent = false;
            if (std::abs(rho.real() - predicted) > tol_match) rep.matches_gamma_ratio = false;
        }
    }
    return rep;
}

}  // namespace lgcy
