#ifndef LGCY_RATIONAL_HPP
#define LGCY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgcy {

// Exact rational scalar, always reduced, denominator > 0. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, unsigned long d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
    static Rational from_string(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // Floor of the rational as an exact integer.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    // x mod 1, result in [0,1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational pow(long e) const;

    double to_double() const { return v_.get_d(); }

    // Canonical form: "p" for integers, "p/q" otherwise.
    std::string str() const;

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

Rational factorial(unsigned n);
Rational binomial(unsigned long n, unsigned long k);

// Element of Q[i], componentwise reduced.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussRational(long re) : re_(re), im_(0) {}
    explicit GaussRational(const Rational& re) : re_(re), im_(0) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }
    // i^k for any integer k (k may be negative).
    static GaussRational i_pow(long k);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussRational conj() const { return GaussRational(re_, -im_); }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return GaussRational(a.re_ * b.re_ - a.im_ * b.im_,
                             a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussRational operator*(const Rational& s) const {
        return GaussRational(re_ * s, im_ * s);
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace lgcy

#endif
