#include <opsome/theta.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace opsome::theta
{

namespace
{

// v <- v * (1 + c q^e), truncated at v.size() - 1.
void mul_binomial(std::vector<Integer> &v, long c, std::size_t e)
{
    const auto n = v.size() - 1u;
    if (e == 0u || e > n) {
        return;
    }
    for (std::size_t k = n; k >= e; --k) {
        if (sgn(v[k - e]) != 0) {
            if (c >= 0) {
                mpz_addmul_ui(v[k].get_mpz_t(), v[k - e].get_mpz_t(), static_cast<unsigned long>(c));
            } else {
                mpz_submul_ui(v[k].get_mpz_t(), v[k - e].get_mpz_t(), static_cast<unsigned long>(-c));
            }
        }
    }
}

std::vector<Integer> unit(std::size_t order)
{
    std::vector<Integer> v(order + 1u);
    v[0] = 1;
    return v;
}

Series from_small(const std::vector<std::int64_t> &c)
{
    std::vector<Integer> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        v[i] = static_cast<long>(c[i]);
    }
    return Series(std::move(v));
}

int parity_sign(Sign s, std::size_t exponent)
{
    return (s == Sign::minus && (exponent & 1u) != 0u) ? -1 : 1;
}

} // namespace

Series pochhammer(const PochSpec &spec, std::size_t order)
{
    if (spec.start == 0u || spec.step == 0u) {
        throw std::invalid_argument("pochhammer: start and step must be >= 1");
    }
    auto v = unit(order);
    for (std::size_t e = spec.start; e <= order; e += spec.step) {
        mul_binomial(v, -value(spec.sign), e);
    }
    return Series(std::move(v));
}

Series theta_f(const ThetaSpec &spec, std::size_t order)
{
    if (spec.i + spec.j == 0u) {
        throw std::invalid_argument("theta_f: need i + j >= 1");
    }
    std::vector<std::int64_t> c(order + 1u);
    // n >= 0: exponents i*T(n) + j*T(n-1) with T the triangular numbers;
    // n = -m, m >= 1: i*T(m-1) + j*T(m). Both are nondecreasing.
    for (std::size_t n = 0;; ++n) {
        const auto a = n * (n + 1u) / 2u;
        const auto b = n == 0u ? 0u : n * (n - 1u) / 2u;
        const auto e = spec.i * a + spec.j * b;
        if (e > order) {
            break;
        }
        c[e] += parity_sign(spec.si, a) * parity_sign(spec.sj, b);
    }
    for (std::size_t m = 1;; ++m) {
        const auto a = m * (m - 1u) / 2u;
        const auto b = m * (m + 1u) / 2u;
        const auto e = spec.i * a + spec.j * b;
        if (e > order) {
            break;
        }
        c[e] += parity_sign(spec.si, a) * parity_sign(spec.sj, b);
    }
    return from_small(c);
}

Series theta_f_product(const ThetaSpec &spec, std::size_t order)
{
    if (spec.i == 0u || spec.j == 0u) {
        throw std::invalid_argument("theta_f_product: need i, j >= 1");
    }
    const auto period = spec.i + spec.j;
    const int s = value(spec.si) * value(spec.sj);
    auto v = unit(order);
    int sk = 1;
    for (std::size_t k = 0;; ++k) {
        const auto ea = spec.i + k * period;
        const auto eb = spec.j + k * period;
        const auto ep = (k + 1u) * period;
        if (ea > order && eb > order && ep > order) {
            break;
        }
        mul_binomial(v, value(spec.si) * sk, ea);
        mul_binomial(v, value(spec.sj) * sk, eb);
        sk *= s;
        mul_binomial(v, -sk, ep);
    }
    return Series(std::move(v));
}

Series phi(Sign sign, std::size_t order)
{
    std::vector<std::int64_t> c(order + 1u);
    c[0] = 1;
    for (std::size_t n = 1; n * n <= order; ++n) {
        c[n * n] = 2 * parity_sign(sign, n);
    }
    return from_small(c);
}

Series phi_product(std::size_t order)
{
    const auto num = mul(pochhammer({Sign::minus, 1, 2}, order), pochhammer({Sign::plus, 2, 2}, order));
    const auto den = mul(pochhammer({Sign::plus, 1, 2}, order), pochhammer({Sign::minus, 2, 2}, order));
    return div(num, den);
}

Series psi(std::size_t order)
{
    std::vector<std::int64_t> c(order + 1u);
    for (std::size_t n = 0; n * (n + 1u) / 2u <= order; ++n) {
        c[n * (n + 1u) / 2u] = 1;
    }
    return from_small(c);
}

Series psi_product(std::size_t order)
{
    return div(pochhammer({Sign::plus, 2, 2}, order), pochhammer({Sign::plus, 1, 2}, order));
}

Series euler(std::size_t order)
{
    return pochhammer({Sign::plus, 1, 1}, order);
}

Series sum_k2_qk2(std::size_t order)
{
    std::vector<std::int64_t> c(order + 1u);
    for (std::size_t k = 1; k * k <= order; ++k) {
        c[k * k] = static_cast<std::int64_t>(k * k);
    }
    return from_small(c);
}

namespace
{

// sum over periods p of sum_{n >= 1} (-1)^{n-1} n q^{pn}.
Series lambert(std::size_t order, std::size_t first_period, std::size_t period_step)
{
    std::vector<std::int64_t> c(order + 1u);
    for (std::size_t p = first_period; p <= order; p += period_step) {
        for (std::size_t n = 1; p * n <= order; ++n) {
            const auto term = static_cast<std::int64_t>(n);
            c[p * n] += (n % 2u == 1u) ? term : -term;
        }
    }
    return from_small(c);
}

} // namespace

Series lambert_odd(std::size_t order)
{
    return lambert(order, 1, 2);
}

Series lambert_all(std::size_t order)
{
    return lambert(order, 1, 1);
}

} // namespace opsome::theta
