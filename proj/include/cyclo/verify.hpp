#pragma once

/**
 * @file verify.hpp
 * @brief Self-contained invariant suite over all odd primes up to a bound.
 *
 * Each prime gets a fixed battery of checks: ring axioms on pseudo-random
 * elements, Galois/norm behavior, the lambda-adic digit extraction against a
 * division oracle, uniqueness of the primary twist, the square root of p*,
 * the f/g factorization, a unit battery for the primary/real equivalence,
 * cross-validated Pell solutions, and the sum-of-p-th-powers identities.
 * Deterministic seeding makes every run reproducible; output is ordered by
 * prime. Runs sequentially: the whole point of the report is a stable,
 * readable transcript.
 */

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/fermat.hpp"
#include "cyclo/gauss_split.hpp"
#include "cyclo/int_poly.hpp"
#include "cyclo/numeric.hpp"
#include "cyclo/pell.hpp"
#include "cyclo/quadratic.hpp"

namespace cyclo {

namespace detail {

class Reporter {
public:
    Reporter(std::ostream& out, unsigned long p) : out_(out), p_(p) {}

    /// Prints one aligned line per named check.
    void check(const std::string& name, bool ok) {
        out_ << "p=" << p_ << ' ' << name;
        for (std::size_t i = name.size(); i < 24; ++i) out_ << '.';
        out_ << (ok ? " ok" : " FAIL") << '\n';
        if (!ok) ++failures_;
    }

    unsigned long failures() const { return failures_; }

private:
    std::ostream& out_;
    unsigned long p_;
    unsigned long failures_ = 0;
};

inline CycInt random_element(unsigned long p, std::mt19937_64& rng, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Int> c(p - 1);
    for (Int& v : c) v = coeff(rng);
    return CycInt(p, c);
}

/// zeta^j * prod of a few cyclotomic units with small random exponents.
inline CycInt random_unit(unsigned long p, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> pick_k(1, p - 1);
    std::uniform_int_distribution<unsigned long> pick_e(0, 2);
    std::uniform_int_distribution<long> pick_j(0, static_cast<long>(p) - 1);
    CycInt u = CycInt::zeta_pow(p, pick_j(rng));
    for (int f = 0; f < 2; ++f) u = u * pow(cyclotomic_unit(p, pick_k(rng)), pick_e(rng));
    return u;
}

inline unsigned long verify_prime(unsigned long p, std::ostream& out) {
    Reporter rep(out, p);
    std::mt19937_64 rng(0xC0FFEEUL * p + 17);

    // --- ring axioms on random elements ---
    {
        bool ok = true;
        for (int round = 0; round < 4 && ok; ++round) {
            const CycInt x = random_element(p, rng);
            const CycInt y = random_element(p, rng);
            const CycInt z = random_element(p, rng);
            ok = ok && (x + y) * z == x * z + y * z;
            ok = ok && x * y == y * x;
            ok = ok && (x * y) * z == x * (y * z);
            ok = ok && x.times_zeta(1) == x * CycInt::zeta_pow(p, 1);
            ok = ok && x.times_zeta(static_cast<long>(p)) == x;
        }
        rep.check("ring-axioms", ok);
    }

    // --- Galois action and norm ---
    {
        bool ok = true;
        std::uniform_int_distribution<long> pick_k(1, static_cast<long>(p) - 1);
        for (int round = 0; round < 4 && ok; ++round) {
            const CycInt x = random_element(p, rng);
            const CycInt y = random_element(p, rng);
            const long a = pick_k(rng), b = pick_k(rng);
            ok = ok && galois_apply(galois_apply(x, a), b) == galois_apply(x, a * b);
            ok = ok && galois_apply(x + y, a) == galois_apply(x, a) + galois_apply(y, a);
            ok = ok && galois_apply(x * y, a) == galois_apply(x, a) * galois_apply(y, a);
            ok = ok && norm(x * y) == norm(x) * norm(y);
            ok = ok && conjugate(conjugate(x)) == x;
        }
        rep.check("galois-norm", ok);
    }

    // --- lambda digits against the division oracle ---
    {
        const CycInt lambda = CycInt::integer(p, 1) - CycInt::zeta_pow(p, 1);
        bool ok = norm(lambda) == p;
        for (int round = 0; round < 6 && ok; ++round) {
            const CycInt x = random_element(p, rng);
            const LambdaDigits d = lambda_digits(x);
            // Divide out the digits one at a time; each step must be exact.
            auto q0 = divide_exact(x - CycInt::integer(p, d.a0), lambda);
            ok = ok && q0.has_value();
            if (ok) {
                auto q1 = divide_exact(*q0 - CycInt::integer(p, d.a1), lambda);
                ok = ok && q1.has_value();
            }
            ok = ok && (is_prime_to_lambda(x) == !divide_exact(x, lambda).has_value());
        }
        rep.check("lambda-digits", ok);
    }

    // --- uniqueness of the primary twist ---
    {
        bool ok = true;
        for (int round = 0; round < 6 && ok; ++round) {
            CycInt x = random_element(p, rng);
            if (!is_prime_to_lambda(x)) x = x + CycInt::integer(p, 1 + lambda_digits(x).a0);
            if (!is_prime_to_lambda(x)) continue;  // extremely defensive
            const unsigned long c = primary_exponent(x);
            unsigned long hits = 0;
            for (unsigned long k = 0; k < p; ++k)
                if (is_primary(x.times_zeta(static_cast<long>(k)))) ++hits;
            ok = ok && hits == 1 && is_primary(x.times_zeta(static_cast<long>(c)));
        }
        rep.check("primary-unique", ok);
    }

    // --- square root of p* and its Galois behavior ---
    {
        const CycInt theta = sqrt_p_star(p);
        const QuadChar q = quad_char(p);
        bool ok = theta * theta == CycInt::integer(p, p_star(p));
        for (unsigned long k = 1; k < p && ok; ++k) {
            const CycInt img = galois_apply(theta, static_cast<long>(k));
            ok = ok && img == (q.chi[k] == 1 ? theta : -theta);
        }
        rep.check("sqrt-p-star", ok);
    }

    // --- f/g factorization, reconstruction, and case structure ---
    {
        const GaussSplit s = split_fg(p);  // internally asserts the identity
        const CycInt theta = sqrt_p_star(p);
        const std::vector<CycInt> q1 = build_q(p);
        bool ok = q1.size() == (p + 1) / 2;
        for (std::size_t j = 0; j < q1.size() && ok; ++j) {
            const CycInt want =
                CycInt::integer(p, s.f.coeff(j)) + CycInt::integer(p, s.g.coeff(j)) * theta;
            ok = ok && want == q1[j];
        }
        if (p % 4 == 3 && p > 3) {
            const long l = static_cast<long>((p - 1) / 2);
            ok = ok && s.f.eval_at_one() == 0;
            ok = ok && s.f.coeff(0) == -2 && s.f.coeff(static_cast<std::size_t>(l)) == 2;
            for (long k = 0; k <= l && ok; ++k)
                ok = ok && s.f.coeff(static_cast<std::size_t>(l - k)) == -s.f.coeff(static_cast<std::size_t>(k));
        }
        rep.check("fg-split", ok);
    }

    // --- unit battery: primary exponent exists and lands on a real unit ---
    {
        bool ok = true;
        for (int round = 0; round < 16 && ok; ++round) {
            const CycInt u = random_unit(p, rng);
            const Int n = norm(u);
            ok = ok && (n == 1 || n == -1) && is_unit(u);
            const unsigned long c = primary_exponent(u);
            const CycInt v = u.times_zeta(static_cast<long>(c));
            ok = ok && is_primary(v) && is_real(v);
        }
        rep.check("unit-battery", ok);
    }

    // --- Pell cross-validation (construction vs continued fractions) ---
    if (p > 3) {
        bool ok = true;
        auto [sol, trace] = solve_dirichlet(p);
        ok = ok && sol.valid();
        const PellSolution fund = solve_cf(p);
        ok = ok && fund.valid();
        try {
            ok = ok && classify(sol, fund) >= 1;
        } catch (const not_in_group_error&) {
            ok = false;
        }
        const Int P(p);
        ok = ok && 4 * P == trace.f1 * trace.f1 - Int(p_star(p)) * trace.g1 * trace.g1;
        rep.check("pell-cross", ok);
    }

    // --- sum-of-p-th-powers identities (kept to small p: p factors each) ---
    if (p <= 13) {
        bool ok = true;
        std::uniform_int_distribution<long> side(-6, 6);
        for (int round = 0; round < 4 && ok; ++round)
            ok = ok && factor_product_check(Int(side(rng)), Int(side(rng)), p);
        for (int round = 0; round < 4 && ok; ++round)
            ok = ok && frobenius_check(random_element(p, rng));
        ok = ok && norm_gap(0, 1, p) == p && norm_gap(1, 2, p) == p;
        rep.check("power-sum-identities", ok);
    }

    return rep.failures();
}

}  // namespace detail

/// Runs the whole suite for every odd prime p <= p_max, writing one line per
/// check. Returns true iff everything passed.
inline bool run_verify(unsigned long p_max, std::ostream& out) {
    unsigned long failures = 0;
    unsigned long checked = 0;
    for (unsigned long p = 3; p <= p_max; ++p) {
        if (!is_odd_prime(p)) continue;
        failures += detail::verify_prime(p, out);
        ++checked;
    }
    out << "verify: " << checked << " primes";
    if (failures == 0)
        out << ", all checks passed\n";
    else
        out << ", " << failures << " check(s) FAILED\n";
    return failures == 0;
}

}  // namespace cyclo
