#include "lgcy/rational.hpp"

namespace lgcy {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: malformed '" + s + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), n);
    mpq_class r(pn);
    r /= mpq_class(pd);
    return Rational(r);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

GaussRational GaussRational::i_pow(long k) {
    long r = ((k % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussRational(1);
        case 1: return GaussRational(Rational(0), Rational(1));
        case 2: return GaussRational(-1);
        default: return GaussRational(Rational(0), Rational(-1));
    }
}

std::string GaussRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string is = im_.abs().str();
    std::string tail = (is == "1") ? "i" : is + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + tail;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + tail;
}

}  // namespace lgcy
