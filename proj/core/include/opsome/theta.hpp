#ifndef OPSOME_THETA_HPP
#define OPSOME_THETA_HPP

#include <cstddef>

#include <opsome/series.hpp>

// Builders for the infinite products and theta series the overpartition
// generating functions are assembled from. Everything is truncated at the
// requested order N and exact.
namespace opsome::theta
{

enum class Sign : int { plus = 1, minus = -1 };

constexpr int value(Sign s) noexcept
{
    return static_cast<int>(s);
}

// (sign * q^start; q^step)_inf = prod_{j >= 0} (1 - sign * q^{start + j*step}).
struct PochSpec {
    Sign sign;
    std::size_t start;
    std::size_t step;
};

// Ramanujan's f(si * q^i, sj * q^j).
struct ThetaSpec {
    std::size_t i;
    std::size_t j;
    Sign si = Sign::plus;
    Sign sj = Sign::plus;
};

// Multiplies in exactly the factors whose exponent is <= N.
// Throws std::invalid_argument if start or step is 0.
Series pochhammer(const PochSpec &spec, std::size_t order);

// Bilateral sum over n of a^{n(n+1)/2} b^{n(n-1)/2}.
// Throws std::invalid_argument if i + j == 0.
Series theta_f(const ThetaSpec &spec, std::size_t order);

// The triple-product side (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf of f(a, b).
// Requires i, j >= 1.
Series theta_f_product(const ThetaSpec &spec, std::size_t order);

// phi(q) = 1 + 2 sum q^{n^2}; Sign::minus gives phi(-q).
Series phi(Sign sign, std::size_t order);
// phi(q) as (-q;q^2)(q^2;q^2) / ((q;q^2)(-q^2;q^2)).
Series phi_product(std::size_t order);

// psi(q) = sum_{n >= 0} q^{n(n+1)/2}.
Series psi(std::size_t order);
// psi(q) as (q^2;q^2) / (q;q^2).
Series psi_product(std::size_t order);

// Euler's f(-q) = (q;q)_inf.
Series euler(std::size_t order);

// sum_{k >= 1} k^2 q^{k^2}.
Series sum_k2_qk2(std::size_t order);

// sum_{m >= 1} q^{2m-1} / (1 + q^{2m-1})^2, expanded as
// sum_{m, n >= 1} (-1)^{n-1} n q^{(2m-1) n}.
Series lambert_odd(std::size_t order);

// sum_{m >= 1} q^m / (1 + q^m)^2 = sum_{m, n >= 1} (-1)^{n-1} n q^{mn}.
Series lambert_all(std::size_t order);

} // namespace opsome::theta

#endif
