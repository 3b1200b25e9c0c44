#include <opsome/residue_series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace opsome
{

namespace
{

// Products of two residues fit in 64 bits; sums of up to 2^64 of them do not.
__extension__ typedef unsigned __int128 wide_t;

void check_modulus(std::uint64_t m)
{
    if (m < 2u || m > ResidueSeries::max_modulus) {
        throw std::invalid_argument("ResidueSeries: modulus " + std::to_string(m) + " outside [2, 2^32]");
    }
}

void check_same_modulus(const ResidueSeries &f, const ResidueSeries &g)
{
    if (f.modulus() != g.modulus()) {
        throw std::invalid_argument("ResidueSeries: mismatched moduli " + std::to_string(f.modulus()) + " and "
                                    + std::to_string(g.modulus()));
    }
}

std::uint64_t normalise(std::int64_t v, std::uint64_t m)
{
    const auto sm = static_cast<std::int64_t>(m);
    auto r = v % sm;
    if (r < 0) {
        r += sm;
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace

ResidueSeries::ResidueSeries(std::vector<std::uint64_t> coeffs, std::uint64_t modulus, int)
    : m_coeffs(std::move(coeffs)), m_modulus(modulus)
{
}

ResidueSeries::ResidueSeries(std::size_t order, std::uint64_t modulus) : m_coeffs(order + 1u), m_modulus(modulus)
{
    check_modulus(modulus);
}

ResidueSeries::ResidueSeries(std::span<const std::int64_t> coeffs, std::uint64_t modulus) : m_modulus(modulus)
{
    check_modulus(modulus);
    if (coeffs.empty()) {
        throw std::invalid_argument("ResidueSeries: coefficient list must not be empty");
    }
    m_coeffs.reserve(coeffs.size());
    for (const auto c : coeffs) {
        m_coeffs.push_back(normalise(c, modulus));
    }
}

ResidueSeries ResidueSeries::from_integers(std::span<const mpz_class> coeffs, std::uint64_t modulus)
{
    check_modulus(modulus);
    if (coeffs.empty()) {
        throw std::invalid_argument("ResidueSeries: coefficient list must not be empty");
    }
    std::vector<std::uint64_t> v;
    v.reserve(coeffs.size());
    // mpz_fdiv_ui returns the non-negative remainder.
    for (const auto &c : coeffs) {
        v.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(modulus)));
    }
    return ResidueSeries(std::move(v), modulus, 0);
}

ResidueSeries ResidueSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw std::invalid_argument("ResidueSeries::truncated: cannot extend order");
    }
    return ResidueSeries(std::vector<std::uint64_t>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(new_order + 1u)),
                         m_modulus, 0);
}

ResidueSeries add(const ResidueSeries &f, const ResidueSeries &g)
{
    check_same_modulus(f, g);
    const auto n = std::min(f.order(), g.order());
    const auto m = f.m_modulus;
    std::vector<std::uint64_t> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = (f[i] + g[i]) % m;
    }
    return ResidueSeries(std::move(v), m, 0);
}

ResidueSeries sub(const ResidueSeries &f, const ResidueSeries &g)
{
    check_same_modulus(f, g);
    const auto n = std::min(f.order(), g.order());
    const auto m = f.m_modulus;
    std::vector<std::uint64_t> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = (f[i] + m - g[i]) % m;
    }
    return ResidueSeries(std::move(v), m, 0);
}

ResidueSeries negate(const ResidueSeries &f)
{
    const auto m = f.m_modulus;
    std::vector<std::uint64_t> v(f.order() + 1u);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        v[i] = (m - f[i]) % m;
    }
    return ResidueSeries(std::move(v), m, 0);
}

ResidueSeries scale(std::int64_t c, const ResidueSeries &f)
{
    const auto m = f.m_modulus;
    const auto cm = normalise(c, m);
    std::vector<std::uint64_t> v(f.order() + 1u);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        v[i] = cm * f[i] % m;
    }
    return ResidueSeries(std::move(v), m, 0);
}

ResidueSeries mul(const ResidueSeries &f, const ResidueSeries &g)
{
    check_same_modulus(f, g);
    const auto n = std::min(f.order(), g.order());
    const auto m = f.m_modulus;
    // Products are < 2^64 and at most n+1 of them are summed per slot, so a
    // 128-bit accumulator never overflows for any realistic order.
    std::vector<wide_t> acc(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        const auto a = f[i];
        if (a == 0u) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            acc[i + j] += static_cast<wide_t>(a * g[j]);
        }
    }
    std::vector<std::uint64_t> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = static_cast<std::uint64_t>(acc[i] % m);
    }
    return ResidueSeries(std::move(v), m, 0);
}

ResidueSeries div(const ResidueSeries &f, const ResidueSeries &g)
{
    check_same_modulus(f, g);
    const auto m = g.m_modulus;
    if (g[0] != 1u && g[0] != m - 1u) {
        throw std::domain_error("ResidueSeries div: constant term must be +1 or -1");
    }
    const auto n = std::min(f.order(), g.order());
    std::vector<std::size_t> gi;
    for (std::size_t i = 1; i <= n; ++i) {
        if (g[i] != 0u) {
            gi.push_back(i);
        }
    }
    std::vector<std::uint64_t> h(n + 1u);
    for (std::size_t k = 0; k <= n; ++k) {
        wide_t s = 0;
        for (const auto i : gi) {
            if (i > k) {
                break;
            }
            s += static_cast<wide_t>(g[i] * h[k - i]);
        }
        auto r = (f[k] + m - static_cast<std::uint64_t>(s % m)) % m;
        if (g[0] != 1u) {
            r = (m - r) % m;
        }
        h[k] = r;
    }
    return ResidueSeries(std::move(h), m, 0);
}

ResidueSeries inverse(const ResidueSeries &f)
{
    std::vector<std::uint64_t> one(f.order() + 1u);
    one[0] = 1u;
    return div(ResidueSeries(std::move(one), f.m_modulus, 0), f);
}

ResidueSeries substitute_power(const ResidueSeries &f, std::size_t k)
{
    if (k == 0u) {
        throw std::invalid_argument("substitute_power: k must be positive");
    }
    std::vector<std::uint64_t> v(f.order() + 1u);
    for (std::size_t i = 0; i * k <= f.order(); ++i) {
        v[i * k] = f[i];
    }
    return ResidueSeries(std::move(v), f.m_modulus, 0);
}

ResidueSeries dissect(const ResidueSeries &f, std::size_t m, std::size_t r)
{
    if (m == 0u || r >= m || r > f.order()) {
        throw std::invalid_argument("dissect: need 0 <= r < m and r <= order");
    }
    const auto n = (f.order() - r) / m;
    std::vector<std::uint64_t> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = f[m * i + r];
    }
    return ResidueSeries(std::move(v), f.m_modulus, 0);
}

ResidueSeries derivative_q(const ResidueSeries &f)
{
    const auto m = f.m_modulus;
    std::vector<std::uint64_t> v(f.order() + 1u);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        v[i] = static_cast<std::uint64_t>(static_cast<wide_t>(i % m) * f[i] % m);
    }
    return ResidueSeries(std::move(v), m, 0);
}

ResidueSeries reduce_mod(const ResidueSeries &f, std::uint64_t modulus)
{
    check_modulus(modulus);
    if (f.modulus() % modulus != 0u) {
        throw std::invalid_argument("reduce_mod: " + std::to_string(modulus) + " does not divide "
                                    + std::to_string(f.modulus()));
    }
    std::vector<std::int64_t> v(f.order() + 1u);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        v[i] = static_cast<std::int64_t>(f[i] % modulus);
    }
    return ResidueSeries(v, modulus);
}

ResidueSeries operator+(const ResidueSeries &f, const ResidueSeries &g)
{
    return add(f, g);
}

ResidueSeries operator-(const ResidueSeries &f, const ResidueSeries &g)
{
    return sub(f, g);
}

ResidueSeries operator*(const ResidueSeries &f, const ResidueSeries &g)
{
    return mul(f, g);
}

} // namespace opsome
