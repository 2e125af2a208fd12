#include <doctest.h>

#include <random>

#include "dbent/cyclo.hpp"
#include "dbent/error.hpp"

using namespace dbent;

namespace {

CyclotomicInt make(std::uint32_t p, std::vector<int> c)
{
    std::vector<BigInt> b(c.begin(), c.end());
    return CyclotomicInt(p, b);
}

CyclotomicInt random_elem(std::uint32_t p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-6, 6);
    std::vector<int> c(p - 1);
    for (auto& x : c) x = d(rng);
    return make(p, c);
}

}  // namespace

TEST_CASE("ring arithmetic")
{
    const auto z3 = CyclotomicInt::zeta_power(3, 1);
    CHECK(z3 * z3 == make(3, {-1, -1}));
    CHECK(make(3, {1, 1}) + make(3, {-1, -1}) == CyclotomicInt(3));
    CHECK(CyclotomicInt::zeta_power(5, 2) * CyclotomicInt::zeta_power(5, 3) == CyclotomicInt::integer(5, 1));
    CHECK(CyclotomicInt::zeta_power(5, -1) == CyclotomicInt::zeta_power(5, 4));
    CHECK_THROWS_AS(CyclotomicInt(3) + CyclotomicInt(5), Error);
    CHECK((-make(3, {2, -1})) == make(3, {-2, 1}));
}

TEST_CASE("automorphisms")
{
    const auto z = CyclotomicInt::zeta_power(3, 1);
    CHECK(automorphism(2, z) == make(3, {-1, -1}));
    CHECK(automorphism(2, make(3, {1, 2})) == make(3, {-1, -2}));
    CHECK(automorphism(1, make(3, {4, 7})) == make(3, {4, 7}));
    CHECK_THROWS_AS(automorphism(0, z), Error);
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (int i = 0; i < 30; ++i) {
            const auto a = random_elem(p, rng), b = random_elem(p, rng);
            for (std::uint32_t beta = 1; beta < p; ++beta) {
                CHECK(automorphism(beta, a * b) == automorphism(beta, a) * automorphism(beta, b));
                CHECK(automorphism(beta, a + b) == automorphism(beta, a) + automorphism(beta, b));
            }
        }
        // the automorphisms form a group of order p-1 acting faithfully on ζ
        const auto z = CyclotomicInt::zeta_power(p, 1);
        for (std::uint32_t b1 = 1; b1 < p; ++b1)
            for (std::uint32_t b2 = b1 + 1; b2 < p; ++b2) CHECK_FALSE(automorphism(b1, z) == automorphism(b2, z));
    }
}

TEST_CASE("Gauss sums")
{
    CHECK(gauss_sum(3) == make(3, {1, 2}));
    CHECK(gauss_sum(3) * gauss_sum(3) == CyclotomicInt::integer(3, -3));
    CHECK(gauss_sum(5) * gauss_sum(5) == CyclotomicInt::integer(5, 5));
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const int star = (p % 4 == 1) ? static_cast<int>(p) : -static_cast<int>(p);
        CHECK(gauss_sum(p) * gauss_sum(p) == CyclotomicInt::integer(p, star));
    }
}

TEST_CASE("conjugate norm")
{
    CHECK(conj_norm(CyclotomicInt(3)) == BigInt(0));
    CHECK(conj_norm(make(3, {1, 2})) == BigInt(3));
    CHECK(conj_norm(make(3, {0, 3})) == BigInt(9));
    std::mt19937_64 rng(2);
    int integral = 0;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_elem(p, rng), b = random_elem(p, rng);
            const auto na = conj_norm(a), nb = conj_norm(b);
            if (na && nb) {
                ++integral;
                CHECK(conj_norm(a * b) == *na * *nb);
            }
        }
    }
    CHECK(integral > 0);  // every element of Z[ζ_3] has an integral norm
}

TEST_CASE("exact division and integer view")
{
    CHECK(make(3, {6, -9}).divide_exact(3) == make(3, {2, -3}));
    CHECK_FALSE(make(3, {6, -8}).divide_exact(3).has_value());
    CHECK(make(5, {7, 0, 0, 0}).as_integer() == BigInt(7));
    CHECK_FALSE(make(5, {7, 1, 0, 0}).as_integer().has_value());
    CHECK(make(3, {1, -2}).to_string() == "1 - 2*z");
}
