#pragma once

/**
 * @file gauss_split.hpp
 * @brief The two-genus factorization of 1 + x + ... + x^(p-1).
 *
 * Let q1(x) = 2 * prod(x - zeta^k) over the quadratic residues k mod p.
 * Every coefficient of q1 lies in the quadratic subring Z + Z*theta, where
 * theta^2 = p*, so q1 = f + theta*g with f, g in Z[x]. Multiplying q1 by its
 * twist (the same product over non-residues) gives
 *
 *     f(x)^2 - p* g(x)^2 = 4 * (1 + x + ... + x^(p-1)).
 *
 * split_fg computes f and g exactly and verifies that identity before
 * returning.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/int_poly.hpp"
#include "cyclo/numeric.hpp"
#include "cyclo/quadratic.hpp"

namespace cyclo {

/// 1 + x + x^2 + ... + x^(p-1).
inline IntPoly m_poly(unsigned long p) {
    return IntPoly(std::vector<Int>(p, Int(1)));
}

/// Coefficients (in Z[zeta_p], ascending) of 2 * prod(x - zeta^k) over the
/// (p-1)/2 exponents k with (k/p) = sign: the residue product for sign=+1,
/// the non-residue product for sign=-1.
inline std::vector<CycInt> build_q(unsigned long p, int sign = 1) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("build_q: sign must be +1 or -1");
    const QuadChar q = quad_char(p);
    std::vector<CycInt> c{CycInt::integer(p, 2)};
    c.reserve((p + 1) / 2);
    for (unsigned long k = 1; k < p; ++k) {
        if (q.chi[k] != sign) continue;
        // Multiply the accumulated polynomial by (x - zeta^k).
        std::vector<CycInt> next(c.size() + 1, CycInt::zero(p));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] = next[j + 1] + c[j];
            next[j] = next[j] - c[j].times_zeta(static_cast<long>(k));
        }
        c = std::move(next);
    }
    return c;
}

struct GaussSplit {
    unsigned long p;
    long p_star;
    IntPoly f;  ///< degree (p-1)/2, leading coefficient 2
    IntPoly g;  ///< degree < (p-1)/2
};

/// Exact computation of f and g. Throws internal_error if any coefficient
/// fails to land in Z or if the defining identity does not check out.
inline GaussSplit split_fg(unsigned long p) {
    const CycInt theta = sqrt_p_star(p);
    const Int ps(p_star(p));
    const std::vector<CycInt> c = build_q(p);
    const long tau = static_cast<long>(least_nonresidue(p));

    std::vector<Int> fc(c.size()), gc(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        const CycInt tc = galois_apply(c[j], tau);
        // c_j = f_j + theta*g_j, and tau negates theta, so:
        //   f_j = (c_j + tau c_j)/2,  g_j = (c_j - tau c_j)*theta / (2 p*).
        const CycInt s = c[j] + tc;
        const CycInt d = (c[j] - tc) * theta;
        if (!s.is_rational() || !d.is_rational())
            throw internal_error("split_fg: coefficient left the quadratic subring");
        fc[j] = exact_div(s.rational_value(), 2);
        gc[j] = exact_div(d.rational_value(), 2 * ps);
    }

    GaussSplit out{p, p_star(p), IntPoly(std::move(fc)), IntPoly(std::move(gc))};

    if (out.f.degree() != static_cast<long>((p - 1) / 2) || out.f.coeff((p - 1) / 2) != 2)
        throw internal_error("split_fg: f has the wrong shape");
    if (out.g.degree() >= static_cast<long>((p - 1) / 2))
        throw internal_error("split_fg: g has excessive degree");
    const IntPoly lhs = out.f * out.f - ps * (out.g * out.g);
    if (lhs != Int(4) * m_poly(p))
        throw internal_error("split_fg: f^2 - p* g^2 != 4(1 + x + ... + x^(p-1))");
    return out;
}

}  // namespace cyclo
