#pragma once

/**
 * @file quadratic.hpp
 * @brief Quadratic residue machinery for an odd prime p: the Legendre
 *        character, the signed discriminant p* = (-1)^((p-1)/2) * p, and the
 *        explicit square root of p* inside Z[zeta_p].
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/numeric.hpp"

namespace cyclo {

/// Legendre symbol (a/p) in {-1, 0, +1}, computed by Euler's criterion
/// a^((p-1)/2) mod p.
inline int legendre(long a, unsigned long p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    const unsigned long r = mod_p(Int(a), p);
    if (r == 0) return 0;
    Int e;
    mpz_powm_ui(e.get_mpz_t(), Int(r).get_mpz_t(), (p - 1) / 2, Int(p).get_mpz_t());
    return e == 1 ? 1 : -1;
}

/// p* = (-1)^((p-1)/2) * p, the discriminant of the quadratic subfield of
/// the p-th cyclotomic field: +p for p = 1 (mod 4), -p for p = 3 (mod 4).
inline long p_star(unsigned long p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("p_star: argument must be an odd prime");
    const long sp = static_cast<long>(p);
    return (p % 4 == 1) ? sp : -sp;
}

/// The quadratic character table of p: chi[k] = (k/p) for 0 <= k < p.
struct QuadChar {
    unsigned long p;
    std::vector<int> chi;
};

inline QuadChar quad_char(unsigned long p) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("quad_char: modulus must be an odd prime");
    QuadChar q{p, std::vector<int>(p, -1)};
    q.chi[0] = 0;
    // Mark the residues by squaring; everything unmarked is a non-residue.
    for (unsigned long k = 1; k <= (p - 1) / 2; ++k) q.chi[(k * k) % p] = 1;
    return q;
}

/// Least quadratic non-residue modulo p.
inline unsigned long least_nonresidue(unsigned long p) {
    const QuadChar q = quad_char(p);
    for (unsigned long n = 2; n < p; ++n)
        if (q.chi[n] == -1) return n;
    throw internal_error("least_nonresidue: no non-residue below p");
}

/// An element theta of Z[zeta_p] with theta^2 = p*: the character sum
/// theta = sum_{k=1}^{p-1} (k/p) zeta^k. The square is verified before
/// returning.
inline CycInt sqrt_p_star(unsigned long p) {
    const QuadChar q = quad_char(p);
    std::vector<Int> raw(p);
    for (unsigned long k = 1; k < p; ++k) raw[k] = q.chi[k];
    CycInt theta(p, raw);
    const CycInt sq = theta * theta;
    if (sq != CycInt::integer(p, p_star(p)))
        throw internal_error("sqrt_p_star: character sum squared to the wrong value");
    return theta;
}

}  // namespace cyclo
