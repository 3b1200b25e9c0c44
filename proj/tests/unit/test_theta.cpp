#include <stdexcept>
#include <vector>

#include <catch_amalgamated.hpp>

#include <opsome/theta.hpp>

#include "generators.hpp"

using namespace opsome;
using namespace opsome::theta;
using opsome_test::make;

namespace
{

// Coefficient of q^k in sum_m q^m/(1+q^m)^2, straight from the divisor sum.
long lambert_all_divisor_oracle(long k)
{
    long s = 0;
    for (long d = 1; d <= k; ++d) {
        if (k % d == 0) {
            s += (d % 2 == 1) ? d : -d;
        }
    }
    return s;
}

} // namespace

TEST_CASE("pochhammer products")
{
    REQUIRE(pochhammer({Sign::plus, 1, 1}, 7) == make({1, -1, -1, 0, 0, 1, 0, 1}));
    // (1+q)(1+q^2)(1+q^3) expanded by hand.
    REQUIRE(pochhammer({Sign::minus, 1, 1}, 3) == make({1, 1, 1, 2}));
    REQUIRE(pochhammer({Sign::plus, 2, 2}, 40) == substitute_power(pochhammer({Sign::plus, 1, 1}, 40), 2));
    REQUIRE(pochhammer({Sign::plus, 5, 1}, 4) == Series::one(4));
    REQUIRE_THROWS_AS(pochhammer({Sign::plus, 0, 1}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(pochhammer({Sign::plus, 1, 0}, 4), std::invalid_argument);
}

TEST_CASE("theta_f special cases")
{
    REQUIRE(theta_f({1, 3}, 10) == make({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    REQUIRE(theta_f({1, 1}, 9) == make({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    REQUIRE(theta_f({1, 2, Sign::minus, Sign::minus}, 100) == pochhammer({Sign::plus, 1, 1}, 100));
    REQUIRE(euler(100) == theta_f({1, 2, Sign::minus, Sign::minus}, 100));
    REQUIRE_THROWS_AS(theta_f({0, 0}, 5), std::invalid_argument);
    // f(1, q) = 2 psi(q), a degenerate but valid instance with i = 0.
    REQUIRE(theta_f({0, 1}, 30) == scale(2, psi(30)));
}

TEST_CASE("phi and psi")
{
    REQUIRE(phi(Sign::plus, 9) == make({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    REQUIRE(phi(Sign::minus, 9) == make({1, -2, 0, 0, 2, 0, 0, 0, 0, -2}));
    REQUIRE(phi_product(200) == phi(Sign::plus, 200));

    REQUIRE(psi(15) == make({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
    REQUIRE(psi(0) == Series::one(0));
    REQUIRE(psi_product(200) == psi(200));
}

TEST_CASE("square-indexed sum")
{
    REQUIRE(sum_k2_qk2(10) == make({0, 1, 0, 0, 4, 0, 0, 0, 0, 9, 0}));
    REQUIRE(sum_k2_qk2(0).is_zero());
    REQUIRE(sum_k2_qk2(16)[16] == 16);
}

TEST_CASE("Lambert-type sums")
{
    REQUIRE(lambert_odd(4) == make({0, 1, -2, 4, -4}));
    REQUIRE(lambert_odd(1) == make({0, 1}));
    REQUIRE(scale(2, lambert_odd(200)) == log_derivative(phi(Sign::plus, 200)));

    REQUIRE(lambert_all(1) == make({0, 1}));
    const auto la = lambert_all(50);
    REQUIRE(la[2] == -1);
    REQUIRE(la[3] == 4);
    for (long k = 1; k <= 50; ++k) {
        REQUIRE(la[static_cast<std::size_t>(k)] == lambert_all_divisor_oracle(k));
    }
}

TEST_CASE("Jacobi triple product instances")
{
    const std::vector<ThetaSpec> specs{
        {1, 3, Sign::plus, Sign::plus},   {1, 1, Sign::plus, Sign::plus},   {1, 2, Sign::minus, Sign::minus},
        {3, 15, Sign::plus, Sign::plus},  {6, 30, Sign::minus, Sign::minus}, {2, 5, Sign::plus, Sign::minus},
        {1, 4, Sign::minus, Sign::plus},
    };
    for (const auto &s : specs) {
        INFO("f(" << value(s.si) << " q^" << s.i << ", " << value(s.sj) << " q^" << s.j << ")");
        REQUIRE(theta_f(s, 300) == theta_f_product(s, 300));
    }
    REQUIRE_THROWS_AS(theta_f_product({0, 1}, 10), std::invalid_argument);
}

TEST_CASE("classical theta identities at moderate order")
{
    constexpr std::size_t n = 200;
    const auto p = phi(Sign::plus, n);
    const auto m = phi(Sign::minus, n);
    const auto m2 = substitute_power(m, 2);
    REQUIRE(m2 * m2 == p * m);
    REQUIRE(p == substitute_power(p, 4) + scale(2, shift(substitute_power(psi(n), 8), 1)));
    const auto p2 = substitute_power(p, 2);
    const auto s4 = substitute_power(psi(n), 4);
    REQUIRE(p * p == p2 * p2 + scale(4, shift(s4 * s4, 1)));
    REQUIRE(log_derivative(p) == div(scale(2, sum_k2_qk2(n)), p));
}
