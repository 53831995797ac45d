/**
 * @file arith.hpp
 * @brief Exact integer primitives shared by every module.
 *
 * All domain arithmetic runs on GMP's mpz_class; nothing here ever
 * touches floating point. The helpers wrap the handful of mpz_* calls
 * the rest of the library needs behind value-semantic functions.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace expdioph {

/// Arbitrary-precision signed integer used for all domain values.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }
inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }

inline bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// a^e for a nonnegative exponent that must fit a machine word.
inline Int pow(const Int& base, const Int& exp) {
    if (exp < 0) throw std::domain_error("pow: negative exponent");
    if (!exp.fits_ulong_p()) throw std::domain_error("pow: exponent too large");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return r;
}

inline Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// base^exp mod m, least nonnegative residue.
inline Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Modular inverse of a mod m; throws if gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: " + a.get_str() + " is not invertible mod " +
                                m.get_str());
    return r;
}

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& a) {
    if (a < 0) throw std::domain_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Exact quotient a / d; throws if d does not divide a.
inline Int exact_div(const Int& a, const Int& d) {
    if (!divides(d, a)) throw std::domain_error("exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Binomial coefficient C(n, k) for machine-word n, k.
inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Deterministic primality by trial division; fine at desk scale.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (is_even(n)) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (divides(d, n)) return false;
    return true;
}

/// Narrow an Int to unsigned long, throwing when it cannot fit.
inline unsigned long to_ulong(const Int& a, const char* what) {
    if (a < 0 || !a.fits_ulong_p())
        throw std::domain_error(std::string(what) + ": value out of range: " + a.get_str());
    return a.get_ui();
}

}  // namespace expdioph
