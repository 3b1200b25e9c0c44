#include <opsome/series.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <opsome/residue_series.hpp>

namespace opsome
{

namespace
{

std::vector<std::size_t> nonzero_indices(const Series &f, std::size_t upto)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= upto; ++i) {
        if (sgn(f[i]) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

void require_unit_constant(const Series &f, const char *what)
{
    if (f[0] != 1 && f[0] != -1) {
        throw std::domain_error(std::string(what) + ": constant term must be +1 or -1, got " + f[0].get_str());
    }
}

} // namespace

Series::Series(std::size_t order) : m_coeffs(order + 1u) {}

Series::Series(std::vector<Integer> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw std::invalid_argument("Series: coefficient vector must not be empty");
    }
}

Series Series::zero(std::size_t order)
{
    return Series(order);
}

Series Series::one(std::size_t order)
{
    return monomial(1, 0, order);
}

Series Series::monomial(const Integer &c, std::size_t e, std::size_t order)
{
    if (e > order) {
        throw std::invalid_argument("Series::monomial: exponent " + std::to_string(e) + " exceeds order "
                                    + std::to_string(order));
    }
    std::vector<Integer> v(order + 1u);
    v[e] = c;
    return Series(std::move(v));
}

bool Series::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Integer &c) { return sgn(c) == 0; });
}

Series Series::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw std::invalid_argument("Series::truncated: cannot extend order " + std::to_string(order()) + " to "
                                    + std::to_string(new_order));
    }
    return Series(std::vector<Integer>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(new_order + 1u)));
}

Series add(const Series &f, const Series &g)
{
    const auto n = std::min(f.order(), g.order());
    std::vector<Integer> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = f[i] + g[i];
    }
    return Series(std::move(v));
}

Series sub(const Series &f, const Series &g)
{
    const auto n = std::min(f.order(), g.order());
    std::vector<Integer> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = f[i] - g[i];
    }
    return Series(std::move(v));
}

Series negate(const Series &f)
{
    std::vector<Integer> v(f.order() + 1u);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        v[i] = -f[i];
    }
    return Series(std::move(v));
}

Series scale(const Integer &c, const Series &f)
{
    std::vector<Integer> v(f.order() + 1u);
    for (std::size_t i = 0; i <= f.order(); ++i) {
        v[i] = c * f[i];
    }
    return Series(std::move(v));
}

Series mul(const Series &f, const Series &g)
{
    const auto n = std::min(f.order(), g.order());
    auto fi = nonzero_indices(f, n);
    auto gi = nonzero_indices(g, n);
    const bool swap = gi.size() < fi.size();
    const Series &outer = swap ? g : f;
    const Series &inner = swap ? f : g;
    const auto &idx = swap ? gi : fi;

    std::vector<Integer> v(n + 1u);
    for (const auto i : idx) {
        const auto &a = outer[i];
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(inner[j]) != 0) {
                mpz_addmul(v[i + j].get_mpz_t(), a.get_mpz_t(), inner[j].get_mpz_t());
            }
        }
    }
    return Series(std::move(v));
}

Series div(const Series &f, const Series &g)
{
    require_unit_constant(g, "div");
    const auto n = std::min(f.order(), g.order());
    const auto gi = nonzero_indices(g, n);
    const bool negative = g[0] < 0;

    std::vector<Integer> h(n + 1u);
    Integer acc;
    for (std::size_t k = 0; k <= n; ++k) {
        acc = f[k];
        // gi[0] == 0 is the constant term.
        for (std::size_t t = 1; t < gi.size() && gi[t] <= k; ++t) {
            mpz_submul(acc.get_mpz_t(), g[gi[t]].get_mpz_t(), h[k - gi[t]].get_mpz_t());
        }
        if (negative) {
            mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
        }
        h[k] = acc;
    }
    return Series(std::move(h));
}

Series inverse(const Series &f)
{
    require_unit_constant(f, "inverse");
    return div(Series::one(f.order()), f);
}

Series pow(const Series &f, unsigned k)
{
    Series result = Series::one(f.order());
    Series base = f;
    while (k != 0u) {
        if ((k & 1u) != 0u) {
            result = mul(result, base);
        }
        k >>= 1u;
        if (k != 0u) {
            base = mul(base, base);
        }
    }
    return result;
}

Series substitute_power(const Series &f, std::size_t k)
{
    if (k == 0u) {
        throw std::invalid_argument("substitute_power: k must be positive");
    }
    const auto n = f.order();
    std::vector<Integer> v(n + 1u);
    for (std::size_t i = 0; i * k <= n; ++i) {
        v[i * k] = f[i];
    }
    return Series(std::move(v));
}

Series dissect(const Series &f, std::size_t m, std::size_t r)
{
    if (m == 0u || r >= m) {
        throw std::invalid_argument("dissect: need 0 <= r < m, got m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
    if (r > f.order()) {
        throw std::invalid_argument("dissect: residue " + std::to_string(r) + " exceeds order "
                                    + std::to_string(f.order()));
    }
    const auto n = (f.order() - r) / m;
    std::vector<Integer> v(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        v[i] = f[m * i + r];
    }
    return Series(std::move(v));
}

Series shift(const Series &f, std::size_t s)
{
    const auto n = f.order();
    std::vector<Integer> v(n + 1u);
    for (std::size_t i = s; i <= n; ++i) {
        v[i] = f[i - s];
    }
    return Series(std::move(v));
}

Series derivative_q(const Series &f)
{
    std::vector<Integer> v(f.order() + 1u);
    for (std::size_t i = 1; i <= f.order(); ++i) {
        v[i] = f[i] * static_cast<unsigned long>(i);
    }
    return Series(std::move(v));
}

Series log_derivative(const Series &f)
{
    if (f[0] != 1) {
        throw std::domain_error("log_derivative: constant term must be 1, got " + f[0].get_str());
    }
    return div(derivative_q(f), f);
}

ResidueSeries reduce_mod(const Series &f, std::uint64_t modulus)
{
    return ResidueSeries::from_integers(f.coeffs(), modulus);
}

bool equal_upto(const Series &f, const Series &g, std::size_t upto)
{
    if (upto > f.order() || upto > g.order()) {
        throw std::invalid_argument("equal_upto: comparison order exceeds operand order");
    }
    for (std::size_t i = 0; i <= upto; ++i) {
        if (f[i] != g[i]) {
            return false;
        }
    }
    return true;
}

bool congruent_upto(const Series &f, const Series &g, const Integer &modulus, std::size_t upto)
{
    if (modulus <= 0) {
        throw std::invalid_argument("congruent_upto: modulus must be positive");
    }
    if (upto > f.order() || upto > g.order()) {
        throw std::invalid_argument("congruent_upto: comparison order exceeds operand order");
    }
    Integer d;
    for (std::size_t i = 0; i <= upto; ++i) {
        d = f[i] - g[i];
        if (!mpz_divisible_p(d.get_mpz_t(), modulus.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

Series operator+(const Series &f, const Series &g)
{
    return add(f, g);
}

Series operator-(const Series &f, const Series &g)
{
    return sub(f, g);
}

Series operator-(const Series &f)
{
    return negate(f);
}

Series operator*(const Series &f, const Series &g)
{
    return mul(f, g);
}

Series operator*(const Integer &c, const Series &f)
{
    return scale(c, f);
}

std::string to_string(const Series &f)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= f.order(); ++i) {
        const auto &c = f[i];
        if (sgn(c) == 0) {
            continue;
        }
        Integer a = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0u) {
            os << a;
        } else {
            if (a != 1) {
                os << a << '*';
            }
            os << 'q';
            if (i > 1u) {
                os << '^' << i;
            }
        }
    }
    if (first) {
        os << '0';
    }
    os << " + O(q^" << f.order() + 1u << ')';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Series &f)
{
    return os << to_string(f);
}

} // namespace opsome
