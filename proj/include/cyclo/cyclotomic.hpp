#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[zeta_p] for an odd prime p.
 *
 * Elements are stored on the power basis {1, zeta, ..., zeta^(p-2)}, which is
 * an integral basis, so the coefficient vector of an element is unique and
 * equality is coefficient-wise. zeta^(p-1) is always eliminated through
 * zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
 *
 * On top of the ring structure this header provides the lambda-adic digit
 * extraction (lambda = 1 - zeta), the primary test and primary exponent, and
 * the unit predicates (is_unit, is_real, unit_ratio_exponent).
 */

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/numeric.hpp"

namespace cyclo {

/// First two digits of the (1-zeta)-adic expansion, both in [0, p).
struct LambdaDigits {
    unsigned long a0;
    unsigned long a1;
};

class CycInt {
public:
    /// Canonicalizes an arbitrary coefficient list: raw[j] is the coefficient
    /// of zeta^j, for any length; exponents are reduced mod p.
    CycInt(unsigned long p, const std::vector<Int>& raw) {
        require_odd_prime(p);
        *this = reduce(p, raw);
    }

    static CycInt zero(unsigned long p) {
        require_odd_prime(p);
        return CycInt(p);
    }

    static CycInt integer(unsigned long p, Int n) {
        require_odd_prime(p);
        CycInt x(p);
        x.c_[0] = std::move(n);
        return x;
    }

    static CycInt zeta_pow(unsigned long p, long k) {
        require_odd_prime(p);
        return integer(p, 1).times_zeta(k);
    }

    unsigned long modulus() const { return p_; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(std::size_t k) const { return c_.at(k); }

    bool is_zero() const {
        for (const Int& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// True iff all non-constant canonical coefficients vanish.
    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != 0) return false;
        return true;
    }

    const Int& rational_value() const {
        if (!is_rational())
            throw internal_error("rational_value: element is not a rational integer");
        return c_[0];
    }

    /// Multiplication by zeta^k (any k, reduced mod p). O(p).
    CycInt times_zeta(long k) const {
        const unsigned long s = norm_exp(k, p_);
        std::vector<Int> raw(p_);
        for (std::size_t j = 0; j + 1 < p_; ++j) raw[(j + s) % p_] = c_[j];
        return reduce(p_, raw);
    }

    CycInt operator-() const {
        CycInt r(*this);
        for (Int& x : r.c_) x = -x;
        return r;
    }

    friend CycInt operator+(const CycInt& a, const CycInt& b) {
        require_same_modulus(a, b);
        CycInt r(a);
        for (std::size_t k = 0; k + 1 < r.p_; ++k) r.c_[k] += b.c_[k];
        return r;
    }

    friend CycInt operator-(const CycInt& a, const CycInt& b) {
        require_same_modulus(a, b);
        CycInt r(a);
        for (std::size_t k = 0; k + 1 < r.p_; ++k) r.c_[k] -= b.c_[k];
        return r;
    }

    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        require_same_modulus(a, b);
        const unsigned long p = a.p_;
        // Schoolbook convolution, then exponent reduction.
        std::vector<Int> raw(2 * p - 3);
        for (std::size_t i = 0; i + 1 < p; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j + 1 < p; ++j) raw[i + j] += a.c_[i] * b.c_[j];
        }
        return reduce(p, raw);
    }

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const CycInt& x) {
        bool first = true;
        for (std::size_t k = 0; k + 1 < x.p_; ++k) {
            const Int& c = x.c_[k];
            if (c == 0) continue;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            Int a = abs(c);
            if (k == 0) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << '*';
                os << 'z';
                if (k > 1) os << '^' << k;
            }
            first = false;
        }
        if (first) os << '0';
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    explicit CycInt(unsigned long p) : p_(p), c_(p - 1) {}

    static void require_odd_prime(unsigned long p) {
        if (!is_odd_prime(p))
            throw std::invalid_argument("CycInt: modulus " + std::to_string(p) +
                                        " is not an odd prime");
    }

    static void require_same_modulus(const CycInt& a, const CycInt& b) {
        if (a.p_ != b.p_)
            throw std::invalid_argument("CycInt: modulus mismatch (" + std::to_string(a.p_) +
                                        " vs " + std::to_string(b.p_) + ")");
    }

    static unsigned long norm_exp(long k, unsigned long p) {
        long r = k % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<unsigned long>(r);
    }

    // Fold a raw coefficient list (any length) into canonical form.
    static CycInt reduce(unsigned long p, const std::vector<Int>& raw) {
        CycInt x(p);
        Int wrap;  // total landing on zeta^(p-1)
        for (std::size_t j = 0; j < raw.size(); ++j) {
            const unsigned long e = j % p;
            if (e == p - 1)
                wrap += raw[j];
            else
                x.c_[e] += raw[j];
        }
        if (wrap != 0)
            for (Int& v : x.c_) v -= wrap;
        return x;
    }

    unsigned long p_;
    std::vector<Int> c_;  // length p-1, c_[k] multiplies zeta^k
};

/// The automorphism sigma_k: zeta -> zeta^k, for k prime to p.
inline CycInt galois_apply(const CycInt& x, long k) {
    const unsigned long p = x.modulus();
    long r = k % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    if (r == 0)
        throw std::invalid_argument("galois_apply: exponent divisible by " + std::to_string(p) +
                                    " is not an automorphism");
    std::vector<Int> raw(p);
    for (std::size_t j = 0; j + 1 < p; ++j)
        raw[(j * static_cast<unsigned long>(r)) % p] += x.coeff(j);
    return CycInt(p, raw);
}

/// Complex conjugation, sigma_(p-1): zeta -> zeta^(-1).
inline CycInt conjugate(const CycInt& x) {
    return galois_apply(x, static_cast<long>(x.modulus()) - 1);
}

/// Product of all Galois conjugates; always a rational integer.
inline Int norm(const CycInt& x) {
    const unsigned long p = x.modulus();
    CycInt acc = x;
    for (unsigned long k = 2; k < p; ++k) acc = acc * galois_apply(x, static_cast<long>(k));
    if (!acc.is_rational())
        throw internal_error("norm: conjugate product is not rational");
    return acc.rational_value();
}

inline CycInt pow(const CycInt& x, unsigned long e) {
    CycInt r = CycInt::integer(x.modulus(), 1);
    CycInt base = x;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

/// a0 = sum(c_k) mod p and a1 = -sum(k*c_k) mod p: the first two digits of
/// x = a0 + a1*lambda (mod lambda^2), obtained by substituting zeta = 1 - lambda.
inline LambdaDigits lambda_digits(const CycInt& x) {
    const unsigned long p = x.modulus();
    Int s0, s1;
    for (std::size_t k = 0; k + 1 < p; ++k) {
        s0 += x.coeff(k);
        s1 += Int(k) * x.coeff(k);
    }
    return {mod_p(s0, p), mod_p(-s1, p)};
}

/// True iff lambda = 1 - zeta does not divide x; equivalently x is prime to p.
inline bool is_prime_to_lambda(const CycInt& x) {
    return lambda_digits(x).a0 != 0;
}

/// True iff x is congruent to a rational integer modulo lambda^2.
/// Defined only for x prime to lambda.
inline bool is_primary(const CycInt& x) {
    const LambdaDigits d = lambda_digits(x);
    if (d.a0 == 0)
        throw std::domain_error("is_primary: element is divisible by lambda");
    return d.a1 == 0;
}

/// The unique k in [0, p) for which zeta^k * x is primary,
/// solving a1 - k*a0 = 0 (mod p).
inline unsigned long primary_exponent(const CycInt& x) {
    const unsigned long p = x.modulus();
    const LambdaDigits d = lambda_digits(x);
    if (d.a0 == 0)
        throw std::domain_error("primary_exponent: element is divisible by lambda");
    return mod_p(Int(d.a1) * Int(inv_mod(d.a0, p)), p);
}

inline bool is_unit(const CycInt& x) {
    const Int n = norm(x);
    return n == 1 || n == -1;
}

inline bool is_real(const CycInt& x) { return x == conjugate(x); }

/// The t with u = zeta^t * conjugate(u). Exists for every unit.
inline unsigned long unit_ratio_exponent(const CycInt& u) {
    if (!is_unit(u))
        throw std::domain_error("unit_ratio_exponent: element is not a unit");
    const CycInt cu = conjugate(u);
    for (unsigned long t = 0; t < u.modulus(); ++t)
        if (u == cu.times_zeta(static_cast<long>(t))) return t;
    throw internal_error("unit_ratio_exponent: no exponent found for a unit");
}

/// (1 - zeta^k)/(1 - zeta) = 1 + zeta + ... + zeta^(k-1), a unit for 1 <= k <= p-1.
inline CycInt cyclotomic_unit(unsigned long p, unsigned long k) {
    if (k < 1 || k > p - 1)
        throw std::invalid_argument("cyclotomic_unit: k must lie in 1..p-1");
    std::vector<Int> raw(k, Int(1));
    CycInt u(p, raw);
    const Int n = norm(u);
    if (n != 1 && n != -1)
        throw internal_error("cyclotomic_unit: norm is not a unit norm");
    return u;
}

/// Exact ring division: x/y if y divides x, nullopt otherwise.
/// Multiplies x by the conjugates of y and divides by norm(y); the quotient
/// lies in the ring exactly when every canonical coordinate is an integer.
inline std::optional<CycInt> divide_exact(const CycInt& x, const CycInt& y) {
    if (x.modulus() != y.modulus())
        throw std::invalid_argument("divide_exact: modulus mismatch");
    if (y.is_zero())
        throw std::invalid_argument("divide_exact: division by zero");
    const unsigned long p = x.modulus();
    CycInt adj = CycInt::integer(p, 1);
    for (unsigned long k = 2; k < p; ++k) adj = adj * galois_apply(y, static_cast<long>(k));
    const CycInt denom = y * adj;
    const Int n = denom.rational_value();  // = norm(y)
    const CycInt num = x * adj;
    std::vector<Int> q(p - 1);
    for (std::size_t k = 0; k + 1 < p; ++k) {
        if (!divisible(num.coeff(k), n)) return std::nullopt;
        q[k] = exact_div(num.coeff(k), n);
    }
    return CycInt(p, q);
}

}  // namespace cyclo
