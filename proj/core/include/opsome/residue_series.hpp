#ifndef OPSOME_RESIDUE_SERIES_HPP
#define OPSOME_RESIDUE_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace opsome
{

// Truncated power series with coefficients in Z/MZ, 2 <= M <= 2^32.
//
// Coefficients are stored as canonical representatives in [0, M). The
// reduction map Series -> ResidueSeries is a ring homomorphism, so any
// congruence modulo a divisor of M can be read off a ResidueSeries that was
// computed along the same route as the exact series.
class ResidueSeries
{
public:
    static constexpr std::uint64_t max_modulus = std::uint64_t(1) << 32;

    // Zero series. Throws std::invalid_argument if the modulus is out of range.
    ResidueSeries(std::size_t order, std::uint64_t modulus);
    // Signed input values are normalised into [0, M).
    ResidueSeries(std::span<const std::int64_t> coeffs, std::uint64_t modulus);
    static ResidueSeries from_integers(std::span<const mpz_class> coeffs, std::uint64_t modulus);

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1u;
    }
    std::uint64_t modulus() const noexcept
    {
        return m_modulus;
    }
    std::uint64_t operator[](std::size_t i) const
    {
        return m_coeffs[i];
    }
    std::span<const std::uint64_t> coeffs() const noexcept
    {
        return m_coeffs;
    }

    ResidueSeries truncated(std::size_t new_order) const;

    friend bool operator==(const ResidueSeries &, const ResidueSeries &) = default;

    friend ResidueSeries add(const ResidueSeries &, const ResidueSeries &);
    friend ResidueSeries sub(const ResidueSeries &, const ResidueSeries &);
    friend ResidueSeries negate(const ResidueSeries &);
    friend ResidueSeries scale(std::int64_t, const ResidueSeries &);
    friend ResidueSeries mul(const ResidueSeries &, const ResidueSeries &);
    friend ResidueSeries div(const ResidueSeries &, const ResidueSeries &);
    friend ResidueSeries substitute_power(const ResidueSeries &, std::size_t);
    friend ResidueSeries dissect(const ResidueSeries &, std::size_t, std::size_t);
    friend ResidueSeries derivative_q(const ResidueSeries &);
    friend ResidueSeries inverse(const ResidueSeries &);

private:
    ResidueSeries(std::vector<std::uint64_t> coeffs, std::uint64_t modulus, int);

    std::vector<std::uint64_t> m_coeffs;
    std::uint64_t m_modulus;
};

// Operands must share a modulus (std::invalid_argument otherwise); orders
// follow the same min-order rule as Series.
ResidueSeries add(const ResidueSeries &f, const ResidueSeries &g);
ResidueSeries sub(const ResidueSeries &f, const ResidueSeries &g);
ResidueSeries negate(const ResidueSeries &f);
ResidueSeries scale(std::int64_t c, const ResidueSeries &f);
ResidueSeries mul(const ResidueSeries &f, const ResidueSeries &g);
// Requires g[0] to be 1 or M-1.
ResidueSeries div(const ResidueSeries &f, const ResidueSeries &g);
ResidueSeries inverse(const ResidueSeries &f);
ResidueSeries substitute_power(const ResidueSeries &f, std::size_t k);
ResidueSeries dissect(const ResidueSeries &f, std::size_t m, std::size_t r);
ResidueSeries derivative_q(const ResidueSeries &f);

// Reduces every coefficient to a smaller modulus that divides the current one.
ResidueSeries reduce_mod(const ResidueSeries &f, std::uint64_t modulus);

ResidueSeries operator+(const ResidueSeries &f, const ResidueSeries &g);
ResidueSeries operator-(const ResidueSeries &f, const ResidueSeries &g);
ResidueSeries operator*(const ResidueSeries &f, const ResidueSeries &g);

} // namespace opsome

#endif
