#pragma once

// Exact rational numbers over Integer, kept in canonical form at all times:
// denominator > 0 and gcd(|num|, den) = 1, so equality is structural.

#include <gmp.h>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "dsc/integer.hpp"

namespace dsc {

class Rational {
public:
    Rational() { mpq_init(v_); }

    Rational(long long n) {
        mpq_init(v_);
        mpq_set_si(v_, static_cast<long>(n), 1);
    }
    Rational(int n) : Rational(static_cast<long long>(n)) {}

    Rational(long long num, long long den) {
        mpq_init(v_);
        if (den == 0) {
            mpq_clear(v_);
            throw std::domain_error("Rational: zero denominator");
        }
        mpq_set_si(v_, static_cast<long>(num), 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, static_cast<long>(den), 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }

    Rational(const Integer& n) {
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }

    Rational(const Integer& num, const Integer& den) {
        mpq_init(v_);
        if (den.is_zero()) {
            mpq_clear(v_);
            throw std::domain_error("Rational: zero denominator");
        }
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }

    // Parses "num", "num/den", with optional leading '-'.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    }

    Rational(const Rational& other) {
        mpq_init(v_);
        mpq_set(v_, other.v_);
    }
    Rational(Rational&& other) noexcept {
        mpq_init(v_);
        mpq_swap(v_, other.v_);
    }
    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(v_, other.v_);
        return *this;
    }
    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(v_, other.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    Integer num() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(v_));
        return n;
    }
    Integer den() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(v_));
        return d;
    }
    mpq_srcptr raw() const noexcept { return v_; }

    int sign() const noexcept { return mpq_sgn(v_); }
    bool is_zero() const noexcept { return mpq_sgn(v_) == 0; }
    bool is_integer() const noexcept { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    std::string to_string() const {
        std::string s = num().to_string();
        if (!is_integer()) s += "/" + den().to_string();
        return s;
    }

    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        mpq_neg(r.v_, a.v_);
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.v_, v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        const int c = mpq_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.to_string();
    }

private:
    mpq_t v_;
};

inline Rational pow(const Rational& base, long long exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Rational r(Integer(pow(base.num(), static_cast<unsigned long>(exp))),
               Integer(pow(base.den(), static_cast<unsigned long>(exp))));
    return r;
}

// (-1)^k as a rational, used all over the alternating sums.
inline Rational alternating_sign(long long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace dsc
