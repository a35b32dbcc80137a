#pragma once

// Arbitrary-precision signed integer, a thin value-semantic wrapper over
// GMP's mpz_t.  Exact at any magnitude that fits in memory.

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dsc {

class Integer {
public:
    Integer() noexcept { mpz_init(v_); }

    Integer(long long n) { mpz_init_set_si(v_, static_cast<long>(n)); }
    Integer(int n) : Integer(static_cast<long long>(n)) {}
    Integer(unsigned long n) { mpz_init_set_ui(v_, n); }

    explicit Integer(const std::string& decimal) {
        if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("Integer: cannot parse \"" + decimal + "\"");
        }
    }

    Integer(const Integer& other) { mpz_init_set(v_, other.v_); }
    Integer(Integer&& other) noexcept {
        mpz_init(v_);
        mpz_swap(v_, other.v_);
    }
    Integer& operator=(const Integer& other) {
        if (this != &other) mpz_set(v_, other.v_);
        return *this;
    }
    Integer& operator=(Integer&& other) noexcept {
        mpz_swap(v_, other.v_);
        return *this;
    }
    ~Integer() { mpz_clear(v_); }

    mpz_srcptr raw() const noexcept { return v_; }
    mpz_ptr raw() noexcept { return v_; }

    int sign() const noexcept { return mpz_sgn(v_); }
    bool is_zero() const noexcept { return mpz_sgn(v_) == 0; }
    bool is_odd() const noexcept { return mpz_odd_p(v_) != 0; }

    bool fits_longlong() const noexcept { return mpz_fits_slong_p(v_) != 0; }
    long long to_longlong() const {
        if (!fits_longlong()) throw std::overflow_error("Integer: value exceeds long long");
        return mpz_get_si(v_);
    }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    Integer& operator+=(const Integer& o) { mpz_add(v_, v_, o.v_); return *this; }
    Integer& operator-=(const Integer& o) { mpz_sub(v_, v_, o.v_); return *this; }
    Integer& operator*=(const Integer& o) { mpz_mul(v_, v_, o.v_); return *this; }

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }
    friend Integer operator-(const Integer& a) {
        Integer r;
        mpz_neg(r.v_, a.v_);
        return r;
    }

    // Truncating division, like built-in integers.
    friend Integer operator/(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw std::domain_error("Integer: division by zero");
        Integer r;
        mpz_tdiv_q(r.v_, a.v_, b.v_);
        return r;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw std::domain_error("Integer: division by zero");
        Integer r;
        mpz_tdiv_r(r.v_, a.v_, b.v_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) noexcept {
        return mpz_cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
        const int c = mpz_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a) {
        return os << a.to_string();
    }

private:
    mpz_t v_;
};

inline Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.raw(), a.raw());
    return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.raw(), base.raw(), exp);
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.raw(), a.raw(), b.raw());
    return r;
}

// Remainder normalized into [0, |m|).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
    if (m.is_zero()) throw std::domain_error("Integer: modulus is zero");
    Integer r;
    mpz_mod(r.raw(), a.raw(), m.raw());
    return r;
}

// Quotient when b is known to divide a exactly.
inline Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("Integer: division by zero");
    Integer r;
    mpz_divexact(r.raw(), a.raw(), b.raw());
    return r;
}

inline Integer powmod(const Integer& base, const Integer& exp, const Integer& mod) {
    if (exp.sign() < 0) throw std::domain_error("powmod: negative exponent");
    Integer r;
    mpz_powm(r.raw(), base.raw(), exp.raw(), mod.raw());
    return r;
}

}  // namespace dsc
