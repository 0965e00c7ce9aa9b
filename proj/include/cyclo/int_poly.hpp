#pragma once

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials over Z, plus Gaussian-integer values
 *        for evaluation at x = i.
 */

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/numeric.hpp"

namespace cyclo {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }

    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^k, zero beyond the degree.
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        if (s == 0) return IntPoly();
        std::vector<Int> r(a.c_);
        for (Int& v : r) v *= s;
        return IntPoly(std::move(r));
    }

    IntPoly operator-() const {
        std::vector<Int> r(c_);
        for (Int& v : r) v = -v;
        return IntPoly(std::move(r));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    Int eval(const Int& x) const {
        Int r;
        for (std::size_t k = c_.size(); k-- > 0;) {
            r *= x;
            r += c_[k];
        }
        return r;
    }

    Int eval_at_one() const {
        Int s;
        for (const Int& v : c_) s += v;
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
        if (f.is_zero()) return os << '0';
        bool first = true;
        for (std::size_t k = f.c_.size(); k-- > 0;) {
            const Int& c = f.c_[k];
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
                os << 'x';
                if (k > 1) os << '^' << k;
            }
            first = false;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;  // c_[k] multiplies x^k; invariant: back() != 0
};

/// Element re + im*i of Z[i].
struct GaussianInt {
    Int re;
    Int im;

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
        return os << '(' << z.re.get_str() << (z.im < 0 ? " - " : " + ")
                  << Int(abs(z.im)).get_str() << "i)";
    }
};

/// f(i), using i^2 = -1: even-index coefficients alternate into the real
/// part, odd-index into the imaginary part.
inline GaussianInt eval_at_i(const IntPoly& f) {
    GaussianInt z{Int(0), Int(0)};
    const std::vector<Int>& c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        switch (k % 4) {
            case 0: z.re += c[k]; break;
            case 1: z.im += c[k]; break;
            case 2: z.re -= c[k]; break;
            case 3: z.im -= c[k]; break;
        }
    }
    return z;
}

}  // namespace cyclo
