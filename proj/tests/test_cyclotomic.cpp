#include <random>
#include <sstream>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cyclo/cyclotomic.hpp"

using namespace cyclo;

namespace {

CycInt rand_elem(unsigned long p, std::mt19937_64& rng, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    std::vector<Int> c(p - 1);
    for (Int& v : c) v = coeff(rng);
    return CycInt(p, c);
}

}  // namespace

TEST_CASE("canonical form folds exponents and eliminates the top power") {
    // zeta^5 = 1 and zeta^6 = zeta when p = 5
    CHECK(CycInt(5, {0, 0, 0, 0, 0, 1}) == CycInt::integer(5, 1));
    CHECK(CycInt(5, {0, 0, 0, 0, 0, 0, 1}) == CycInt::zeta_pow(5, 1));
    // zeta^4 = -(1 + zeta + zeta^2 + zeta^3), so zeta + zeta^4 = [-1,0,-1,-1]
    CHECK(CycInt(5, {0, 1, 0, 0, 1}).coeffs() == std::vector<Int>{-1, 0, -1, -1});
    // negative powers through the factory
    CHECK(CycInt::zeta_pow(5, -1) == CycInt::zeta_pow(5, 4));
    CHECK(CycInt::zeta_pow(7, 13) == CycInt::zeta_pow(7, 6));
    // a shorter-than-basis list is fine
    CHECK(CycInt(5, {3}) == CycInt::integer(5, 3));
    CHECK(CycInt::zero(11).is_zero());
}

TEST_CASE("modulus must be an odd prime") {
    CHECK_THROWS_AS(CycInt::zero(1), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::zero(2), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::zero(4), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::zero(9), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::zero(91), std::invalid_argument);  // 7 * 13
    CHECK_NOTHROW(CycInt::zero(97));
}

TEST_CASE("mixing moduli is rejected") {
    CHECK_THROWS_AS(CycInt::zero(5) + CycInt::zero(7), std::invalid_argument);
    CHECK_THROWS_AS(CycInt::zero(5) * CycInt::zero(7), std::invalid_argument);
    CHECK_THROWS_AS(divide_exact(CycInt::integer(5, 1), CycInt::integer(7, 1)),
                    std::invalid_argument);
}

TEST_CASE("product example in Z[zeta_5]") {
    CycInt u(5, {1, 1});  // 1 + zeta
    CycInt v = CycInt::integer(5, 1) + CycInt::zeta_pow(5, 4);
    CHECK((u * v).coeffs() == std::vector<Int>{1, 0, -1, -1});
}

TEST_CASE("ring axioms hold on pseudo-random elements") {
    std::mt19937_64 rng(12345);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (int round = 0; round < 8; ++round) {
            CycInt x = rand_elem(p, rng), y = rand_elem(p, rng), z = rand_elem(p, rng);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK((x + y) * z == x * z + y * z);
            CHECK(x - x == CycInt::zero(p));
            CHECK(x * CycInt::integer(p, 1) == x);
            CHECK(x + (-x) == CycInt::zero(p));
        }
    }
}

TEST_CASE("times_zeta agrees with multiplication by the basis monomial") {
    std::mt19937_64 rng(777);
    for (unsigned long p : {3ul, 5ul, 11ul}) {
        for (long k = -5; k <= static_cast<long>(2 * p); ++k) {
            CycInt x = rand_elem(p, rng);
            CHECK(x.times_zeta(k) == x * CycInt::zeta_pow(p, k));
        }
    }
}

TEST_CASE("Galois action: composition, ring maps, conjugation") {
    std::mt19937_64 rng(31337);
    for (unsigned long p : {5ul, 7ul, 13ul}) {
        CycInt x = rand_elem(p, rng), y = rand_elem(p, rng);
        CHECK(galois_apply(x, 1) == x);
        for (long a = 1; a < static_cast<long>(p); ++a) {
            for (long b = 1; b < static_cast<long>(p); ++b)
                CHECK(galois_apply(galois_apply(x, a), b) == galois_apply(x, a * b));
            CHECK(galois_apply(x + y, a) == galois_apply(x, a) + galois_apply(y, a));
            CHECK(galois_apply(x * y, a) == galois_apply(x, a) * galois_apply(y, a));
        }
        CHECK(conjugate(conjugate(x)) == x);
        CHECK(galois_apply(CycInt::integer(p, 42), 3) == CycInt::integer(p, 42));
    }
    CHECK_THROWS_AS(galois_apply(CycInt::zero(5), 0), std::invalid_argument);
    CHECK_THROWS_AS(galois_apply(CycInt::zero(5), 10), std::invalid_argument);
}

TEST_CASE("norms of standard elements") {
    // norm(1 - zeta) = p: the ramified prime
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul}) {
        CycInt lambda = CycInt::integer(p, 1) - CycInt::zeta_pow(p, 1);
        CHECK(norm(lambda) == p);
    }
    // norm of a rational integer m is m^(p-1)
    CHECK(norm(CycInt::integer(5, 3)) == 81);
    CHECK(norm(CycInt::integer(3, -2)) == 4);
    // 4 + 3*zeta at p = 3: norm = 4^2 - 4*3 + 3^2 = 13
    CHECK(norm(CycInt(3, {4, 3})) == 13);
    // roots of unity are units of norm 1
    CHECK(norm(CycInt::zeta_pow(7, 3)) == 1);
    CHECK(norm(CycInt::zero(5)) == 0);
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(999);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        for (int round = 0; round < 4; ++round) {
            CycInt x = rand_elem(p, rng), y = rand_elem(p, rng);
            CHECK(norm(x * y) == norm(x) * norm(y));
        }
    }
}

TEST_CASE("lambda digits: frozen values") {
    // zeta at p=5: a0 = 1, a1 = -1 mod 5 = 4
    LambdaDigits d = lambda_digits(CycInt::zeta_pow(5, 1));
    CHECK(d.a0 == 1);
    CHECK(d.a1 == 4);
    // rational integers have a1 = 0
    d = lambda_digits(CycInt::integer(7, 10));
    CHECK(d.a0 == 3);
    CHECK(d.a1 == 0);
    // lambda itself: a0 = 0, a1 = 1
    d = lambda_digits(CycInt::integer(5, 1) - CycInt::zeta_pow(5, 1));
    CHECK(d.a0 == 0);
    CHECK(d.a1 == 1);
}

TEST_CASE("lambda digits match the division oracle") {
    // Independent oracle: a0 and a1 are digits precisely when
    // x - a0 = lambda * q0 and q0 - a1 = lambda * q1 with exact divisions.
    std::mt19937_64 rng(2024);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
        const CycInt lambda = CycInt::integer(p, 1) - CycInt::zeta_pow(p, 1);
        for (int round = 0; round < 12; ++round) {
            CycInt x = rand_elem(p, rng, -30, 30);
            LambdaDigits d = lambda_digits(x);
            auto q0 = divide_exact(x - CycInt::integer(p, d.a0), lambda);
            REQUIRE(q0.has_value());
            auto q1 = divide_exact(*q0 - CycInt::integer(p, d.a1), lambda);
            REQUIRE(q1.has_value());
            // digits are unique in [0, p): any other residue breaks exactness
            for (unsigned long wrong = 0; wrong < p; ++wrong) {
                if (wrong == d.a0) continue;
                CHECK_FALSE(divide_exact(x - CycInt::integer(p, wrong), lambda).has_value());
            }
        }
    }
}

TEST_CASE("divisibility by lambda vs the a0 digit") {
    std::mt19937_64 rng(555);
    for (unsigned long p : {3ul, 5ul, 7ul}) {
        const CycInt lambda = CycInt::integer(p, 1) - CycInt::zeta_pow(p, 1);
        for (int round = 0; round < 10; ++round) {
            CycInt x = rand_elem(p, rng);
            CHECK(is_prime_to_lambda(x) == !divide_exact(x, lambda).has_value());
        }
    }
}

TEST_CASE("primary predicate and exponent: frozen values") {
    // rational integers prime to p are primary
    CHECK(is_primary(CycInt::integer(5, 1)));
    CHECK(is_primary(CycInt::integer(5, -7)));
    // zeta is not primary
    CHECK_FALSE(is_primary(CycInt::zeta_pow(5, 1)));
    // 7*zeta^2 at p=5 has primary exponent 3: zeta^3 * 7*zeta^2 = 7
    CycInt e(5, {0, 0, 7});
    CHECK(primary_exponent(e) == 3);
    CHECK(is_primary(e.times_zeta(3)));
    // elements divisible by lambda are outside the domain
    CycInt lam = CycInt::integer(5, 1) - CycInt::zeta_pow(5, 1);
    CHECK_THROWS_AS(is_primary(lam), std::domain_error);
    CHECK_THROWS_AS(primary_exponent(lam), std::domain_error);
}

TEST_CASE("the primary twist is unique: brute-force oracle") {
    std::mt19937_64 rng(424242);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        for (int round = 0; round < 10; ++round) {
            CycInt x = rand_elem(p, rng);
            if (!is_prime_to_lambda(x)) x = x + CycInt::integer(p, 1);
            REQUIRE(is_prime_to_lambda(x));
            unsigned long c = primary_exponent(x);
            unsigned long hits = 0, where = p;
            for (unsigned long k = 0; k < p; ++k) {
                if (is_primary(x.times_zeta(static_cast<long>(k)))) {
                    ++hits;
                    where = k;
                }
            }
            CHECK(hits == 1);
            CHECK(where == c);
        }
    }
}

TEST_CASE("units: cyclotomic units, ratio exponent, reality") {
    // (1 - zeta^k)/(1 - zeta) is a unit for every k in 2..p-1
    for (unsigned long p : {5ul, 7ul, 11ul}) {
        for (unsigned long k = 2; k < p; ++k) {
            CycInt u = cyclotomic_unit(p, k);
            Int n = norm(u);
            CHECK((n == 1 || n == -1));
            CHECK(is_unit(u));
        }
    }
    // u = 1 + zeta at p=5: u / conj(u) = zeta
    CycInt u = cyclotomic_unit(5, 2);
    CHECK(u == CycInt(5, {1, 1}));
    unsigned long t = unit_ratio_exponent(u);
    CHECK(t == 1);
    CHECK(u == conjugate(u).times_zeta(static_cast<long>(t)));
    // the ratio exponent is defined only for units
    CHECK_THROWS_AS(unit_ratio_exponent(CycInt::integer(5, 2)), std::domain_error);
    CHECK_THROWS_AS(cyclotomic_unit(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_unit(5, 5), std::invalid_argument);
    // reality
    CHECK(is_real(CycInt(5, {0, 1, 0, 0, 1})));  // zeta + zeta^-1
    CHECK_FALSE(is_real(CycInt::zeta_pow(5, 1)));
    CHECK(is_real(CycInt::integer(7, 12)));
}

TEST_CASE("every unit's primary twist is real") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<unsigned long> pick_k(2, 6);
    std::uniform_int_distribution<long> pick_j(0, 6);
    for (unsigned long p : {7ul, 11ul, 13ul}) {
        for (int round = 0; round < 8; ++round) {
            CycInt u = CycInt::zeta_pow(p, pick_j(rng));
            u = u * cyclotomic_unit(p, 2 + pick_k(rng) % (p - 2));
            u = u * cyclotomic_unit(p, 2 + pick_k(rng) % (p - 2));
            REQUIRE(is_unit(u));
            unsigned long c = primary_exponent(u);
            CycInt v = u.times_zeta(static_cast<long>(c));
            CHECK(is_primary(v));
            CHECK(is_real(v));
        }
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(31415);
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
        for (int round = 0; round < 8; ++round) {
            CycInt x = rand_elem(p, rng), y = rand_elem(p, rng);
            if (y.is_zero()) continue;
            auto q = divide_exact(x * y, y);
            REQUIRE(q.has_value());
            CHECK(*q == x);
        }
    }
    // 3 / 2 is not integral
    CHECK_FALSE(divide_exact(CycInt::integer(5, 3), CycInt::integer(5, 2)).has_value());
    // (1 + zeta) does not divide 1 at p=5 (it is a unit, so it does!)
    auto inv = divide_exact(CycInt::integer(5, 1), CycInt(5, {1, 1}));
    REQUIRE(inv.has_value());
    CHECK(*inv * CycInt(5, {1, 1}) == CycInt::integer(5, 1));
    CHECK_THROWS_AS(divide_exact(CycInt::integer(5, 1), CycInt::zero(5)),
                    std::invalid_argument);
}

TEST_CASE("powers") {
    CycInt x(5, {1, 2, 0, -1});
    CHECK(pow(x, 0) == CycInt::integer(5, 1));
    CHECK(pow(x, 1) == x);
    CycInt by_hand = x * x * x * x * x;
    CHECK(pow(x, 5) == by_hand);
}

TEST_CASE("pretty printing") {
    CHECK(CycInt(5, {1, 0, -1, -1}).str() == "1 - z^2 - z^3");
    CHECK(CycInt::zero(5).str() == "0");
    CHECK(CycInt(5, {0, 2}).str() == "2*z");
    CHECK(CycInt(5, {-3, 0, 0, 1}).str() == "-3 + z^3");
    std::ostringstream os;
    os << CycInt::integer(3, -11);
    CHECK(os.str() == "-11");
}
