#pragma once

// p-adic valuation and reduction: the bridge from exact rationals to
// canonical residues in [0, p^k).  Every "≡ (mod p^k)" statement the
// library verifies goes through reduce_mod.

#include <cassert>
#include <optional>
#include <string>

#include "dsc/errors.hpp"
#include "dsc/integer.hpp"
#include "dsc/primes.hpp"
#include "dsc/rational.hpp"

namespace dsc {

// v_p of a nonzero integer; nullopt (= +infinity) for zero.
inline std::optional<long long> vp(const Integer& n, long long p) {
    assert(p >= 2);
    if (n.is_zero()) return std::nullopt;
    Integer reduced;
    const Integer prime(p);
    const unsigned long count = mpz_remove(reduced.raw(), n.raw(), prime.raw());
    return static_cast<long long>(count);
}

// v_p(num) - v_p(den); nullopt (= +infinity) for q = 0.
inline std::optional<long long> vp(const Rational& q, long long p) {
    if (q.is_zero()) return std::nullopt;
    const auto vn = vp(q.num(), p);
    const auto vd = vp(q.den(), p);
    return *vn - *vd;
}

// b in [1, m) with a*b ≡ 1 (mod m).
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    if (m < Integer(2)) throw NotInvertibleError("mod_inverse: modulus must be >= 2");
    Integer r;
    if (mpz_invert(r.raw(), a.raw(), m.raw()) == 0) {
        throw NotInvertibleError("mod_inverse: gcd(" + a.to_string() + ", " + m.to_string() + ") != 1");
    }
    return r;
}

struct PrimePowerModulus {
    long long p;
    int k;
    Integer pk;

    PrimePowerModulus(long long p_, int k_) : p(p_), k(k_), pk(pow(Integer(p_), static_cast<unsigned long>(k_))) {
        if (!is_prime(p_)) throw CheckDomainError("PrimePowerModulus: " + std::to_string(p_) + " is not prime");
        if (k_ < 1) throw CheckDomainError("PrimePowerModulus: exponent must be >= 1");
    }

    friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
        return a.p == b.p && a.k == b.k;
    }
};

struct Residue {
    Integer value;  // in [0, p^k)
    PrimePowerModulus modulus;

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus == b.modulus && a.value == b.value;
    }
};

// Canonical residue of a p-adically integral rational: with q = p^v * a/b,
// gcd(ab, p) = 1, returns p^v * a * b^{-1} mod p^k (0 when v >= k).
inline Residue reduce_mod(const Rational& q, const PrimePowerModulus& m) {
    if (q.is_zero()) return Residue{Integer(0), m};
    const long long v = *vp(q, m.p);
    if (v < 0) {
        throw NegativeValuationError("reduce_mod: v_" + std::to_string(m.p) + "(" + q.to_string() +
                                     ") = " + std::to_string(v) + " < 0");
    }
    if (v >= m.k) return Residue{Integer(0), m};
    const Integer prime(m.p);
    Integer unit_num;
    mpz_remove(unit_num.raw(), q.num().raw(), prime.raw());
    // q canonical and v >= 0, so the denominator is coprime to p already.
    const Integer den_inv = mod_inverse(q.den(), m.pk);
    Integer r = mod_nonneg(unit_num * den_inv, m.pk);
    r = mod_nonneg(r * pow(prime, static_cast<unsigned long>(v)), m.pk);
    return Residue{r, m};
}

inline Residue reduce_mod(const Rational& q, long long p, int k) {
    return reduce_mod(q, PrimePowerModulus(p, k));
}

// Euler-criterion value of a^{(p-1)/2} mod p, mapped to {-1, 0, +1}.
inline int legendre_symbol(const Integer& a, long long p) {
    if (p == 2 || !is_prime(p)) throw CheckDomainError("legendre_symbol: p must be an odd prime");
    const Integer prime(p);
    return mpz_legendre(a.raw(), prime.raw());
}

inline int legendre_symbol(long long a, long long p) { return legendre_symbol(Integer(a), p); }

}  // namespace dsc
