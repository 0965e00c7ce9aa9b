#pragma once

/**
 * @file pell.hpp
 * @brief Two independent solvers for x^2 - d y^2 = 1.
 *
 * solve_cf is the classical continued-fraction method and works for any
 * squarefree d >= 2; it returns the fundamental solution.
 *
 * solve_dirichlet works for prime p > 3 and derives a solution from the
 * factorization f^2 - p* g^2 = 4(1 + x + ... + x^(p-1)) of the cyclotomic
 * polynomial, evaluated at x = 1 (p = 1 mod 4) or x = i (p = 3 mod 4).
 * Every division along the way is provably exact; inexactness or a failed
 * identity raises internal_error. The result need not be fundamental, so it
 * is classified as a power of the fundamental solution.
 */

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cyclo/gauss_split.hpp"
#include "cyclo/int_poly.hpp"
#include "cyclo/numeric.hpp"
#include "cyclo/quadratic.hpp"

namespace cyclo {

struct PellSolution {
    unsigned long d;
    Int a;
    Int b;

    bool valid() const { return b >= 1 && a * a - Int(d) * b * b == 1; }

    friend bool operator==(const PellSolution& s, const PellSolution& t) {
        return s.d == t.d && s.a == t.a && s.b == t.b;
    }
};

enum class PellCase { one_mod_8, five_mod_8, three_mod_4 };

inline const char* to_string(PellCase c) {
    switch (c) {
        case PellCase::one_mod_8: return "1mod8";
        case PellCase::five_mod_8: return "5mod8";
        case PellCase::three_mod_4: return "3mod4";
    }
    return "?";
}

/// Every intermediate of the cyclotomic construction, for inspection and
/// for checking the two invariants
///   4p = f1^2 - p* g1^2        (at x = 1)
///   p xi1^2 - (-1)^((p-1)/2) g1^2 = 4.
struct DirichletTrace {
    unsigned long p;
    PellCase tag;
    Int f1;   ///< f(1)  (x1 in the classical notation)
    Int g1;   ///< g(1)  (y1)
    Int xi1;  ///< f(1)/p, always exact
    Int y2;   ///< halved / cubed / extracted-at-i intermediate
    Int xi2;
    std::optional<Int> y3;   ///< p = 5 (mod 8) only: y2/8
    std::optional<Int> xi3;  ///< p = 5 (mod 8) only: xi2/8
    int i_star;              ///< +1 or -1 (meaning +i / -i) when tag is 3mod4, else 0
};

class not_in_group_error : public std::runtime_error {
public:
    explicit not_in_group_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
// (a1 + b1 sqrt(d)) * (a2 + b2 sqrt(d))
inline PellSolution pell_mul(const PellSolution& s, const PellSolution& t) {
    return {s.d, s.a * t.a + Int(s.d) * s.b * t.b, s.a * t.b + s.b * t.a};
}
}  // namespace detail

/// Fundamental solution by the continued-fraction expansion of sqrt(d):
/// the first convergent h/k with h^2 - d k^2 = 1.
inline PellSolution solve_cf(unsigned long d) {
    if (d < 2)
        throw std::invalid_argument("solve_cf: d must be at least 2");
    if (!is_squarefree(d))
        throw std::invalid_argument("solve_cf: d must be squarefree");
    const Int D(d);
    const Int a0 = isqrt(D);
    if (a0 * a0 == D)
        throw std::invalid_argument("solve_cf: d must not be a perfect square");

    // Periodic continued fraction of sqrt(d): terms a, state (m, q) with
    // sqrt(d) ~ (m + sqrt(d))/q at each step; convergents h/k.
    Int m(0), q(1), a(a0);
    Int h_prev(1), h(a0);  // h_{-1} = 1, h_0 = a0
    Int k_prev(0), k(1);   // k_{-1} = 0, k_0 = 1
    for (unsigned long steps = 0; steps < 10000000UL; ++steps) {
        if (h * h - D * k * k == 1) return {d, h, k};
        m = a * q - m;
        q = exact_div(D - m * m, q);
        a = (a0 + m) / q;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = std::move(h_next);
        k = std::move(k_next);
    }
    throw internal_error("solve_cf: no solution within the step bound");
}

/// (a + b sqrt(d))^n by binary exponentiation.
inline PellSolution power_solution(const PellSolution& s, unsigned long n) {
    if (n < 1)
        throw std::invalid_argument("power_solution: exponent must be positive");
    PellSolution r{s.d, Int(1), Int(0)};
    PellSolution base = s;
    while (n > 0) {
        if (n & 1) r = detail::pell_mul(r, base);
        n >>= 1;
        if (n > 0) base = detail::pell_mul(base, base);
    }
    return r;
}

/// The n with s = fund^n in the solution group. Powers of fund grow strictly
/// in the a-component, so the search stops as soon as it passes s.a.
inline unsigned long classify(const PellSolution& s, const PellSolution& fund) {
    if (s.d != fund.d)
        throw std::invalid_argument("classify: solutions live over different d");
    PellSolution cur = fund;
    unsigned long n = 1;
    while (cur.a < s.a) {
        cur = detail::pell_mul(cur, fund);
        ++n;
    }
    if (cur.a == s.a && cur.b == s.b) return n;
    throw not_in_group_error("classify: solution is not a power of the fundamental one");
}

/// Pell solution for a prime p > 3 out of the cyclotomic factorization.
inline std::pair<PellSolution, DirichletTrace> solve_dirichlet(unsigned long p) {
    if (p <= 3 || !is_odd_prime(p))
        throw std::invalid_argument("solve_dirichlet: p must be a prime greater than 3");

    const GaussSplit s = split_fg(p);
    const Int P(p);
    const Int ps(s.p_star);

    DirichletTrace tr;
    tr.p = p;
    tr.f1 = s.f.eval_at_one();
    tr.g1 = s.g.eval_at_one();
    if (4 * P != tr.f1 * tr.f1 - ps * tr.g1 * tr.g1)
        throw internal_error("solve_dirichlet: evaluation at 1 violates 4p = f1^2 - p* g1^2");
    tr.xi1 = exact_div(tr.f1, P);
    {
        const long sign = (p % 4 == 1) ? 1 : -1;
        if (P * tr.xi1 * tr.xi1 - sign * tr.g1 * tr.g1 != 4)
            throw internal_error("solve_dirichlet: xi1 identity failed");
    }
    tr.i_star = 0;

    Int a, b;
    if (p % 8 == 1) {
        tr.tag = PellCase::one_mod_8;
        // g1 and xi1 are both even; their halves solve y^2 - p xi^2 = -1.
        tr.y2 = exact_div(tr.g1, 2);
        tr.xi2 = exact_div(tr.xi1, 2);
        if (tr.y2 * tr.y2 - P * tr.xi2 * tr.xi2 != -1)
            throw internal_error("solve_dirichlet: halving step failed");
        a = tr.y2 * tr.y2 + P * tr.xi2 * tr.xi2;
        b = 2 * tr.y2 * tr.xi2;
    } else if (p % 8 == 5) {
        tr.tag = PellCase::five_mod_8;
        // Cube y1 + xi1 sqrt(p) (norm -4 each factor, so norm -64), then the
        // coordinates are divisible by 8 and the eighths have norm -1.
        const Int& y1 = tr.g1;
        const Int& x1 = tr.xi1;
        tr.y2 = y1 * y1 * y1 + 3 * P * x1 * x1 * y1;
        tr.xi2 = P * x1 * x1 * x1 + 3 * y1 * y1 * x1;
        if (tr.y2 * tr.y2 - P * tr.xi2 * tr.xi2 != -64)
            throw internal_error("solve_dirichlet: cubing step failed");
        tr.y3 = exact_div(tr.y2, 8);
        tr.xi3 = exact_div(tr.xi2, 8);
        if (*tr.y3 * *tr.y3 - P * *tr.xi3 * *tr.xi3 != -1)
            throw internal_error("solve_dirichlet: eighth step failed");
        a = *tr.y3 * *tr.y3 + P * *tr.xi3 * *tr.xi3;
        b = 2 * *tr.y3 * *tr.xi3;
    } else {
        tr.tag = PellCase::three_mod_4;
        // Evaluate at i. f(i) = y2 (1 + i*), g(i) = xi2 (1 - i*), where
        // i* = -i for p = 3 (mod 8) and +i for p = 7 (mod 8).
        tr.i_star = (p % 8 == 3) ? -1 : 1;
        const GaussianInt zf = eval_at_i(s.f);
        const GaussianInt zg = eval_at_i(s.g);
        if (zf.im != tr.i_star * zf.re || zg.im != -tr.i_star * zg.re)
            throw internal_error("solve_dirichlet: evaluation at i has the wrong shape");
        tr.y2 = zf.re;
        tr.xi2 = zg.re;
        // 4 m_p(i) = 4i forces y2^2 - p xi2^2 = 2 i / i* = +-2.
        const long rhs = (tr.i_star == 1) ? 2 : -2;
        if (tr.y2 * tr.y2 - P * tr.xi2 * tr.xi2 != rhs)
            throw internal_error("solve_dirichlet: extraction at i failed");
        if (mpz_even_p(tr.y2.get_mpz_t()) || mpz_even_p(tr.xi2.get_mpz_t()))
            throw internal_error("solve_dirichlet: y2, xi2 should be odd");
        a = exact_div(tr.y2 * tr.y2 + P * tr.xi2 * tr.xi2, 2);
        b = tr.y2 * tr.xi2;
    }

    PellSolution sol{p, abs(a), abs(b)};
    if (!sol.valid())
        throw internal_error("solve_dirichlet: constructed pair fails the defining equation");
    return {sol, tr};
}

}  // namespace cyclo
