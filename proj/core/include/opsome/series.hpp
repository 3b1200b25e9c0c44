#ifndef OPSOME_SERIES_HPP
#define OPSOME_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace opsome
{

using Integer = mpz_class;

class ResidueSeries;

// Truncated power series in q with exact integer coefficients.
//
// A Series of order N stores the N+1 coefficients of q^0 .. q^N and
// carries no information about higher exponents. Binary operations on
// operands of different order produce a result of the smaller order, so a
// value never claims more precision than was actually computed.
//
// Values are immutable once built; every operation returns a new Series.
class Series
{
public:
    // The zero series of the given order.
    explicit Series(std::size_t order);
    // Takes ownership of the coefficient vector; order = coeffs.size() - 1.
    // Throws std::invalid_argument on an empty vector.
    explicit Series(std::vector<Integer> coeffs);

    static Series zero(std::size_t order);
    static Series one(std::size_t order);
    // c * q^e. Throws std::invalid_argument if e > order.
    static Series monomial(const Integer &c, std::size_t e, std::size_t order);

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1u;
    }
    const Integer &operator[](std::size_t i) const
    {
        return m_coeffs[i];
    }
    // Bounds-checked access.
    const Integer &at(std::size_t i) const
    {
        return m_coeffs.at(i);
    }
    std::span<const Integer> coeffs() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const;

    // Drops every coefficient above new_order. Throws if new_order > order().
    Series truncated(std::size_t new_order) const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    std::vector<Integer> m_coeffs;
};

Series add(const Series &f, const Series &g);
Series sub(const Series &f, const Series &g);
Series negate(const Series &f);
Series scale(const Integer &c, const Series &f);

// Schoolbook truncated convolution. Zero coefficients of the sparser
// operand are skipped, which makes products with theta-type series cheap.
Series mul(const Series &f, const Series &g);

// Multiplicative inverse. Requires f[0] == +1 or -1 so the result stays
// integral; throws std::domain_error otherwise.
Series inverse(const Series &f);
// f * inverse(g), computed by a single triangular solve.
Series div(const Series &f, const Series &g);
Series pow(const Series &f, unsigned k);

// f(q^k). Throws std::invalid_argument for k == 0.
Series substitute_power(const Series &f, std::size_t k);

// Coefficients f[m*n + r], n = 0, 1, ... (the terms q^{mn+r} with q^m -> q).
// The result has order floor((N - r) / m). Requires 0 <= r < m and r <= N.
Series dissect(const Series &f, std::size_t m, std::size_t r);

// Multiplies f by q^s, dropping terms above the order.
Series shift(const Series &f, std::size_t s);

// The theta operator q d/dq: coefficient i becomes i * f[i].
Series derivative_q(const Series &f);
// q d/dq log f = derivative_q(f) / f. Requires f[0] == 1.
Series log_derivative(const Series &f);

ResidueSeries reduce_mod(const Series &f, std::uint64_t modulus);

// Coefficientwise comparison on exponents 0..upto. Throws
// std::invalid_argument if upto exceeds either order.
bool equal_upto(const Series &f, const Series &g, std::size_t upto);
bool congruent_upto(const Series &f, const Series &g, const Integer &modulus, std::size_t upto);

Series operator+(const Series &f, const Series &g);
Series operator-(const Series &f, const Series &g);
Series operator-(const Series &f);
Series operator*(const Series &f, const Series &g);
Series operator*(const Integer &c, const Series &f);

// Human-readable form such as "1 - 2*q + 2*q^4", mostly for test output.
std::string to_string(const Series &f);
std::ostream &operator<<(std::ostream &os, const Series &f);

} // namespace opsome

#endif
