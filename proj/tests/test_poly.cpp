#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lgcy/parse.hpp"
#include "lgcy/polynomial.hpp"
#include "lgcy/weights.hpp"

using namespace lgcy;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial{std::move(e)}; }

// seeded random polynomial, <= 5 vars, degree <= 6
Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, 3);
    std::uniform_int_distribution<long> coef(-9, 9);
    Polynomial p(nvars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(nvars);
        for (std::size_t v = 0; v < nvars; ++v) m[v] = expd(rng);
        p.add_term(m, Rational(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic is canonical") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational::from_string("7/21") == Rational(1, 3));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(7, 5).frac() == Rational(2, 5));
    CHECK(Rational(-1, 5).frac() == Rational(4, 5));
    CHECK_THROWS(Rational(1, 1) / Rational(0));
}

TEST_CASE("gauss rationals: i^2 = -1") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    CHECK(GaussRational::i_pow(-1) == GaussRational(Rational(0), Rational(-1)));
    CHECK(GaussRational::i_pow(6) == GaussRational(-1));
    GaussRational z(Rational(1, 2), Rational(-3, 4));
    CHECK(z * z.conj() == GaussRational(Rational(13, 16), Rational(0)));
    CHECK(z.str() == "1/2-3/4*i");
}

TEST_CASE("grevlex order facts") {
    MonomialOrder g = MonomialOrder::grevlex();
    // z0^4 beats the mixed product, but a pure power of the last variable loses
    CHECK(g.greater(mono({4, 0, 0, 0, 0}), mono({0, 1, 1, 1, 1})));
    CHECK(g.less(mono({0, 0, 0, 0, 4}), mono({1, 1, 1, 1, 0})));
    // among degree 2 in two vars: x^2 > xy > y^2
    CHECK(g.greater(mono({2, 0}), mono({1, 1})));
    CHECK(g.greater(mono({1, 1}), mono({0, 2})));
    MonomialOrder lx = MonomialOrder::lex();
    CHECK(lx.greater(mono({1, 0}), mono({0, 5})));
    MonomialOrder gl = MonomialOrder::grlex();
    CHECK(gl.greater(mono({0, 5}), mono({1, 0})));
    CHECK(gl.greater(mono({2, 0}), mono({1, 1})));
}

TEST_CASE("orders are multiplicative and graded kinds refine degree") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint32_t> expd(0, 5);
    std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::grlex(),
                                      MonomialOrder::lex()};
    for (int it = 0; it < 300; ++it) {
        Monomial a(4), b(4), m(4);
        for (int v = 0; v < 4; ++v) {
            a[v] = expd(rng);
            b[v] = expd(rng);
            m[v] = expd(rng);
        }
        for (const auto& ord : orders) {
            if (ord.less(a, b)) CHECK(ord.less(m * a, m * b));
            if (ord.kind != OrderKind::Lex && a.degree() < b.degree()) CHECK(ord.less(a, b));
        }
    }
}

TEST_CASE("parse: spec examples") {
    auto p = parse_polynomial("z0^5+z1^5", {"z0", "z1"});
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(mono({5, 0})) == Rational(1));
    CHECK(p.coeff(mono({0, 5})) == Rational(1));

    auto z = parse_polynomial("0", {"x"});
    CHECK(z.is_zero());

    auto q = parse_polynomial("3*x^2*y - 1/2*y^3", {"x", "y"});
    CHECK(q.term_count() == 2);
    CHECK(q.coeff(mono({2, 1})) == Rational(3));
    CHECK(q.coeff(mono({0, 3})) == Rational(-1, 2));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial("x + ", {"x"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x*w", {"x", "y"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^2147483649", {"x"}), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", {"x", "y"}), ParseError);  // no implicit product
    try {
        parse_polynomial("x + w^2", {"x"});
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
    // exponent exactly 2^31 is still accepted
    CHECK(parse_polynomial("x^2147483648", {"x"}).term_count() == 1);
}

TEST_CASE("parse/print round trip is a fixed point") {
    std::vector<std::string> vars{"x", "y", "z"};
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
        Polynomial p = random_poly(rng, 3);
        std::string s = p.str(vars);
        Polynomial q = parse_polynomial(s, vars);
        CHECK(q == p);
        CHECK(q.str(vars) == s);
    }
}

TEST_CASE("ring axioms, exact") {
    std::mt19937_64 rng(999);
    for (int it = 0; it < 60; ++it) {
        Polynomial a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a - a == Polynomial::zero(4));
    }
}

TEST_CASE("hessian determinants") {
    auto f1 = parse_polynomial("x^3", {"x"});
    CHECK(hessian_determinant(f1) == parse_polynomial("6*x", {"x"}));

    auto f2 = parse_polynomial("x^2+y^2", {"x", "y"});
    CHECK(hessian_determinant(f2) == parse_polynomial("4", {"x", "y"}));

    auto f3 = parse_polynomial("x^3+y^3", {"x", "y"});
    CHECK(hessian_determinant(f3) == parse_polynomial("36*x*y", {"x", "y"}));
}

TEST_CASE("hessian commutes with variable permutation") {
    // permuting the variables of f permutes the variables of hess(f)
    std::vector<std::string> v{"x", "y", "z"};
    auto f = parse_polynomial("x^4+2*y^4+3*z^4+x*y*z^2", v);
    auto fp = parse_polynomial("y^4+2*z^4+3*x^4+y*z*x^2", v);  // x->y->z->x
    auto h = hessian_determinant(f);
    auto hp = hessian_determinant(fp);
    // apply the same cycle to h and compare
    Polynomial expected(3);
    for (const auto& [m, c] : h.terms()) {
        Monomial pm(3);
        pm[1] = m[0];
        pm[2] = m[1];
        pm[0] = m[2];
        expected.add_term(pm, c);
    }
    CHECK(hp == expected);
}

TEST_CASE("weighted degree, charge, central charge") {
    WeightSystem q5 = WeightSystem::homogeneous(5, 5);
    CHECK(q5.weighted_degree(mono({5, 0, 0, 0, 0})) == Rational(1));
    CHECK(q5.weighted_degree(mono({0, 0, 0, 0, 0})) == Rational(0));
    CHECK(q5.weighted_degree(mono({1, 1, 1, 1, 1})) == Rational(1));
    CHECK(q5.charge(mono({0, 0, 0, 0, 0})) == Rational(1));
    CHECK(q5.charge(mono({3, 3, 3, 3, 3})) == Rational(4));
    CHECK(q5.central_charge() == Rational(3));

    WeightSystem q3 = WeightSystem::homogeneous(3, 3);
    CHECK(q3.central_charge() == Rational(1));
    WeightSystem q2({Rational(1, 2), Rational(1, 2)});
    CHECK(q2.central_charge() == Rational(0));

    // one variable, I = k-1, q = 1/m -> charge k/m
    WeightSystem qm = WeightSystem::homogeneous(1, 7);
    CHECK(qm.charge(mono({2})) == Rational(3, 7));

    // quasi-homogeneity of each suite member
    auto quintic = parse_polynomial("z0^5+z1^5+z2^5+z3^5+z4^5",
                                    {"z0", "z1", "z2", "z3", "z4"});
    CHECK(q5.is_quasi_homogeneous(quintic));
    WeightSystem qw({Rational(1, 3), Rational(2, 9)});
    auto g = parse_polynomial("x^3 + x*y^3", {"x", "y"});
    CHECK(qw.is_quasi_homogeneous(g));
    CHECK(qw.common_degree() == 9);
    CHECK_FALSE(qw.is_homogeneous());
}
