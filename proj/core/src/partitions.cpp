#include <opsome/partitions.hpp>

#include <stdexcept>
#include <string>
#include <utility>

#include <opsome/theta.hpp>

namespace opsome
{

namespace
{

void check_cap(unsigned n)
{
    if (n > oracle_cap) {
        throw std::out_of_range("oracle: n = " + std::to_string(n) + " exceeds the enumeration cap of "
                                + std::to_string(oracle_cap));
    }
}

// Ordinary partitions, same descent as the overpartition enumerator.
template <typename Visitor>
void enumerate_partitions(unsigned remaining, unsigned max_size, std::vector<Part> &cur, Visitor &visit)
{
    if (remaining == 0u) {
        visit(cur);
        return;
    }
    for (unsigned size = max_size < remaining ? max_size : remaining; size >= 1u; --size) {
        for (unsigned mult = 1; mult * size <= remaining; ++mult) {
            cur.push_back(Part{size, mult, false});
            enumerate_partitions(remaining - mult * size, size - 1u, cur, visit);
            cur.pop_back();
        }
    }
}

} // namespace

std::uint64_t Overpartition::total() const
{
    std::uint64_t t = 0;
    for (const auto &p : parts) {
        t += std::uint64_t(p.size) * p.multiplicity;
    }
    return t;
}

std::int64_t Overpartition::odd_minus_even() const
{
    std::int64_t t = 0;
    for (const auto &p : parts) {
        const auto w = static_cast<std::int64_t>(p.size) * p.multiplicity;
        t += (p.size % 2u == 1u) ? w : -w;
    }
    return t;
}

Integer overline_p_oracle(unsigned n)
{
    check_cap(n);
    const auto count = enumerate_overpartitions(n, [](const Overpartition &) {});
    return Integer(static_cast<unsigned long>(count));
}

Integer some_bar_oracle(unsigned n)
{
    check_cap(n);
    std::int64_t acc = 0;
    enumerate_overpartitions(n, [&](const Overpartition &op) { acc += op.odd_minus_even(); });
    return Integer(static_cast<long>(acc));
}

PartSums sums_oracle(unsigned n)
{
    check_cap(n);
    std::int64_t odd = 0;
    std::int64_t even = 0;
    enumerate_overpartitions(n, [&](const Overpartition &op) {
        for (const auto &p : op.parts) {
            const auto w = static_cast<std::int64_t>(p.size) * p.multiplicity;
            (p.size % 2u == 1u ? odd : even) += w;
        }
    });
    return {Integer(static_cast<long>(odd)), Integer(static_cast<long>(even))};
}

Integer s_b_oracle(unsigned b, unsigned n)
{
    check_cap(n);
    std::int64_t acc = 0;
    enumerate_overpartitions(n, [&](const Overpartition &op) {
        for (const auto &p : op.parts) {
            if (p.size == b) {
                acc += static_cast<std::int64_t>(b) * p.multiplicity;
            }
        }
    });
    return Integer(static_cast<long>(acc));
}

Integer some_oracle(unsigned n)
{
    check_cap(n);
    std::int64_t acc = 0;
    std::vector<Part> cur;
    auto visit = [&](const std::vector<Part> &parts) {
        for (const auto &p : parts) {
            const auto w = static_cast<std::int64_t>(p.size) * p.multiplicity;
            acc += (p.size % 2u == 1u) ? w : -w;
        }
    };
    enumerate_partitions(n, n, cur, visit);
    return Integer(static_cast<long>(acc));
}

OracleStats oracle_stats(unsigned n)
{
    check_cap(n);
    std::int64_t odd = 0;
    std::int64_t even = 0;
    std::vector<std::int64_t> by_size(n + 1u);
    const auto count = enumerate_overpartitions(n, [&](const Overpartition &op) {
        for (const auto &p : op.parts) {
            const auto w = static_cast<std::int64_t>(p.size) * p.multiplicity;
            (p.size % 2u == 1u ? odd : even) += w;
            by_size[p.size] += w;
        }
    });
    OracleStats out;
    out.pbar = static_cast<unsigned long>(count);
    out.some_bar = static_cast<long>(odd - even);
    out.s_odd = static_cast<long>(odd);
    out.s_even = static_cast<long>(even);
    out.s_b.reserve(by_size.size());
    for (const auto v : by_size) {
        out.s_b.emplace_back(static_cast<long>(v));
    }
    return out;
}

Series overline_p_series(std::size_t order)
{
    using theta::Sign;
    return div(theta::pochhammer({Sign::minus, 1, 1}, order), theta::pochhammer({Sign::plus, 1, 1}, order));
}

Series some_bar_series(std::size_t order)
{
    return scale(2, mul(overline_p_series(order), theta::lambert_odd(order)));
}

Series some_bar_series_closed(std::size_t order)
{
    const auto phi_m2 = substitute_power(theta::phi(theta::Sign::minus, order), 2);
    return scale(2, div(theta::sum_k2_qk2(order), mul(phi_m2, phi_m2)));
}

Series some_bar_convolution(std::size_t order)
{
    const auto pbar = overline_p_series(order);
    std::vector<Integer> sigma(order + 1u);
    for (std::size_t a = 0; a <= order; ++a) {
        sigma[a] = static_cast<long>(sigma_oe(a));
    }
    std::vector<Integer> out(order + 1u);
    for (std::size_t n = 0; n <= order; ++n) {
        Integer acc;
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_addmul(acc.get_mpz_t(), pbar[k].get_mpz_t(), sigma[n - k].get_mpz_t());
        }
        out[n] = 2 * acc;
    }
    return Series(std::move(out));
}

Series some_series(std::size_t order)
{
    return div(theta::lambert_all(order), theta::euler(order));
}

ResidueSeries overline_p_series_mod(std::size_t order, std::uint64_t modulus)
{
    using theta::Sign;
    return div(reduce_mod(theta::pochhammer({Sign::minus, 1, 1}, order), modulus),
               reduce_mod(theta::pochhammer({Sign::plus, 1, 1}, order), modulus));
}

ResidueSeries some_bar_series_mod(std::size_t order, std::uint64_t modulus)
{
    return scale(2, mul(overline_p_series_mod(order, modulus), reduce_mod(theta::lambert_odd(order), modulus)));
}

ResidueSeries some_series_mod(std::size_t order, std::uint64_t modulus)
{
    return div(reduce_mod(theta::lambert_all(order), modulus), reduce_mod(theta::euler(order), modulus));
}

std::int64_t sigma_oe(std::uint64_t a)
{
    std::int64_t acc = 0;
    for (std::uint64_t d = 1; d * d <= a; ++d) {
        if (a % d != 0u) {
            continue;
        }
        const auto e = a / d;
        // (d, e) and (e, d) are both divisor/cofactor pairs.
        if (e % 2u == 1u) {
            acc += (d % 2u == 1u) ? static_cast<std::int64_t>(d) : -static_cast<std::int64_t>(d);
        }
        if (e != d && d % 2u == 1u) {
            acc += (e % 2u == 1u) ? static_cast<std::int64_t>(e) : -static_cast<std::int64_t>(e);
        }
    }
    return acc;
}

Integer s_b_formula(unsigned b, unsigned n, const Series &pbar)
{
    if (b == 0u) {
        throw std::invalid_argument("s_b_formula: b must be positive");
    }
    if (n > pbar.order()) {
        throw std::invalid_argument("s_b_formula: pbar series too short for n = " + std::to_string(n));
    }
    Integer acc;
    for (unsigned m = b; m <= n; m += 2u * b) {
        acc += pbar[n - m];
    }
    return 2u * b * acc;
}

Integer s_b_formula(unsigned b, unsigned n)
{
    return s_b_formula(b, n, overline_p_series(n));
}

namespace
{

std::pair<Series, Series> odd_even_series(std::size_t order)
{
    const auto total = derivative_q(overline_p_series(order));
    const auto diff = some_bar_series(order);
    std::vector<Integer> odd(order + 1u);
    std::vector<Integer> even(order + 1u);
    for (std::size_t n = 0; n <= order; ++n) {
        Integer twice_odd = total[n] + diff[n];
        if (mpz_odd_p(twice_odd.get_mpz_t()) != 0) {
            throw std::logic_error("n*pbar(n) + SOME-bar(n) is odd at n = " + std::to_string(n));
        }
        mpz_divexact_ui(odd[n].get_mpz_t(), twice_odd.get_mpz_t(), 2u);
        even[n] = total[n] - odd[n];
    }
    return {Series(std::move(odd)), Series(std::move(even))};
}

} // namespace

std::vector<StatRecord> stat_table(std::size_t max_n)
{
    const auto pbar = overline_p_series(max_n);
    const auto some = some_bar_series(max_n);
    const auto [odd, even] = odd_even_series(max_n);
    std::vector<StatRecord> rows;
    rows.reserve(max_n + 1u);
    for (std::size_t n = 0; n <= max_n; ++n) {
        rows.push_back(StatRecord{n, pbar[n], some[n], odd[n], even[n]});
    }
    return rows;
}

Series s_odd_series(std::size_t order)
{
    return odd_even_series(order).first;
}

Series s_even_series(std::size_t order)
{
    return odd_even_series(order).second;
}

} // namespace opsome
