#pragma once

/**
 * @file fermat.hpp
 * @brief Executable identities around x^p + y^p: the cyclotomic
 *        factorization of the sum of p-th powers, the Frobenius congruence
 *        modulo p, and the norm of differences of roots of unity.
 */

#include <stdexcept>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/numeric.hpp"

namespace cyclo {

/// A would-be solution of x0^p + y0^p = z0^p, used at the residue level.
struct FermatTriple {
    Int x0;
    Int y0;
    Int z0;
    unsigned long p;
};

/// Checks prod_{i=0}^{p-1} (x + zeta^i y) == x^p + y^p as elements of
/// Z[zeta_p]. Exact; a false return would mean an arithmetic bug.
inline bool factor_product_check(const Int& x, const Int& y, unsigned long p) {
    CycInt acc = CycInt::integer(p, x + y);  // the i = 0 factor
    const CycInt xc = CycInt::integer(p, x);
    for (unsigned long i = 1; i < p; ++i) {
        CycInt factor = xc + CycInt::zeta_pow(p, static_cast<long>(i)) * CycInt::integer(p, y);
        acc = acc * factor;
    }
    return acc == CycInt::integer(p, int_pow(x, p) + int_pow(y, p));
}

/// Checks the Frobenius congruence alpha^p == sum(a_i^p) (mod p), a rational
/// integer modulo p, plus the corollary alpha^p == conjugate(alpha)^p (mod p).
inline bool frobenius_check(const CycInt& alpha) {
    const unsigned long p = alpha.modulus();
    const Int P(p);
    const CycInt ap = pow(alpha, p);
    Int s;
    for (std::size_t k = 0; k + 1 < p; ++k) s += int_pow(alpha.coeff(k), p);
    const CycInt diff = ap - CycInt::integer(p, s);
    for (std::size_t k = 0; k + 1 < p; ++k)
        if (!divisible(diff.coeff(k), P)) return false;
    const CycInt cross = ap - pow(conjugate(alpha), p);
    for (std::size_t k = 0; k + 1 < p; ++k)
        if (!divisible(cross.coeff(k), P)) return false;
    return true;
}

/// norm(zeta^i - zeta^j); equals p whenever i != j (mod p), because the
/// difference is a unit multiple of 1 - zeta.
inline Int norm_gap(long i, long j, unsigned long p) {
    const CycInt d = CycInt::zeta_pow(p, i) - CycInt::zeta_pow(p, j);
    if (d.is_zero())
        throw std::invalid_argument("norm_gap: exponents coincide mod p, difference is zero");
    return norm(d);
}

/// Fermat's little theorem transfers x0^p + y0^p == z0^p (mod p) down to
/// x0 + y0 - z0 == 0 (mod p). Requires the residue-level premise; returns
/// the truth of the conclusion.
inline bool fermat_congruence_check(const FermatTriple& t) {
    const unsigned long p = t.p;
    if (!is_odd_prime(p))
        throw std::invalid_argument("fermat_congruence_check: p must be an odd prime");
    const Int lhs = int_pow(t.x0, p) + int_pow(t.y0, p) - int_pow(t.z0, p);
    if (mod_p(lhs, p) != 0)
        throw std::invalid_argument(
            "fermat_congruence_check: triple fails x0^p + y0^p == z0^p (mod p)");
    return mod_p(t.x0 + t.y0 - t.z0, p) == 0;
}

}  // namespace cyclo
