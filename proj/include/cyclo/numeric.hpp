#pragma once

/**
 * @file numeric.hpp
 * @brief Shared integer utilities: exact big integers and small modular helpers.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cyclo {

/// Arbitrary-precision integer. Everything in this library is exact.
using Int = mpz_class;

/// Raised when an identity the theory guarantees fails to hold.
/// Always indicates a bug in this library, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    Int n(p);
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

/// Least non-negative residue of v modulo p.
inline unsigned long mod_p(const Int& v, unsigned long p) {
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

inline unsigned long inv_mod(unsigned long a, unsigned long p) {
    Int r, av(a), pv(p);
    if (mpz_invert(r.get_mpz_t(), av.get_mpz_t(), pv.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: " + std::to_string(a) +
                                " is not invertible modulo " + std::to_string(p));
    return r.get_ui();
}

/// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_squarefree(unsigned long d) {
    if (d == 0) return false;
    for (unsigned long q = 2; q * q <= d; ++q) {
        if (d % q == 0) {
            d /= q;
            if (d % q == 0) return false;
        }
    }
    return true;
}

inline bool divisible(const Int& n, const Int& d) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient n/d; requires d | n.
inline Int exact_div(const Int& n, const Int& d) {
    if (!divisible(n, d)) throw internal_error("exact_div: inexact division");
    Int q;
    mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// n^e for a possibly negative base and non-negative exponent.
inline Int int_pow(const Int& n, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), e);
    return r;
}

}  // namespace cyclo
