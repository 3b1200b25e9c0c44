#ifndef OPSOME_TEST_GENERATORS_HPP
#define OPSOME_TEST_GENERATORS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include <opsome/series.hpp>

namespace opsome_test
{

inline opsome::Series make(std::initializer_list<long> coeffs)
{
    std::vector<opsome::Integer> v;
    for (const auto c : coeffs) {
        v.emplace_back(c);
    }
    return opsome::Series(std::move(v));
}

// Small coefficients with roughly a third of them zero.
inline opsome::Series random_series(std::mt19937_64 &rng, std::size_t order)
{
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::bernoulli_distribution zero(0.3);
    std::vector<opsome::Integer> v(order + 1u);
    for (auto &c : v) {
        c = zero(rng) ? 0 : coeff(rng);
    }
    return opsome::Series(std::move(v));
}

// Like random_series but with constant term +1 (or +-1).
inline opsome::Series random_unit_series(std::mt19937_64 &rng, std::size_t order, bool positive_constant = false)
{
    auto f = random_series(rng, order);
    std::vector<opsome::Integer> v(f.coeffs().begin(), f.coeffs().end());
    v[0] = (positive_constant || std::bernoulli_distribution(0.5)(rng)) ? 1 : -1;
    return opsome::Series(std::move(v));
}

} // namespace opsome_test

#endif
