#ifndef OPSOME_PARTITIONS_HPP
#define OPSOME_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <opsome/residue_series.hpp>
#include <opsome/series.hpp>

namespace opsome
{

// One distinct part size of an overpartition. Only the first occurrence of
// a size can carry the overline, so a single flag per size is enough.
struct Part {
    std::uint32_t size;
    std::uint32_t multiplicity;
    bool overlined;
};

// Parts are ordered by strictly decreasing size.
struct Overpartition {
    std::vector<Part> parts;

    std::uint64_t total() const;
    std::int64_t odd_minus_even() const;
};

// Largest n the brute-force oracles accept; pbar(45) is about 4.7 million.
inline constexpr unsigned oracle_cap = 45;

namespace detail
{

template <typename Visitor>
void enumerate_from(unsigned remaining, unsigned max_size, Overpartition &cur, Visitor &visit, std::uint64_t &count)
{
    if (remaining == 0u) {
        // Every subset of the distinct sizes can be overlined.
        const auto k = cur.parts.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
            for (std::size_t i = 0; i < k; ++i) {
                cur.parts[i].overlined = ((mask >> i) & 1u) != 0u;
            }
            visit(static_cast<const Overpartition &>(cur));
            ++count;
        }
        return;
    }
    for (unsigned size = max_size < remaining ? max_size : remaining; size >= 1u; --size) {
        for (unsigned mult = 1; mult * size <= remaining; ++mult) {
            cur.parts.push_back(Part{size, mult, false});
            enumerate_from(remaining - mult * size, size - 1u, cur, visit, count);
            cur.parts.pop_back();
        }
    }
}

} // namespace detail

// Calls visit(const Overpartition &) once for every overpartition of n and
// returns how many there were. The object passed to the visitor is reused
// between calls; copy it if it has to outlive the call.
template <typename Visitor>
std::uint64_t enumerate_overpartitions(unsigned n, Visitor &&visit)
{
    Overpartition cur;
    std::uint64_t count = 0;
    detail::enumerate_from(n, n, cur, visit, count);
    return count;
}

struct PartSums {
    Integer odd;
    Integer even;
};

// Brute-force statistics. All of them throw std::out_of_range for n > oracle_cap.
Integer overline_p_oracle(unsigned n);
Integer some_bar_oracle(unsigned n);
PartSums sums_oracle(unsigned n);
// Sum of all parts equal to b over the overpartitions of n.
Integer s_b_oracle(unsigned b, unsigned n);
// SOME(n) over ordinary partitions.
Integer some_oracle(unsigned n);

// Every overpartition statistic of n from a single enumeration pass.
// s_b has n + 1 entries; s_b[b] is the sum of parts equal to b (s_b[0] = 0).
struct OracleStats {
    Integer pbar;
    Integer some_bar;
    Integer s_odd;
    Integer s_even;
    std::vector<Integer> s_b;
};
OracleStats oracle_stats(unsigned n);

// sum pbar(n) q^n = (-q;q)_inf / (q;q)_inf.
Series overline_p_series(std::size_t order);
// 2 * pbar-series * lambert_odd.
Series some_bar_series(std::size_t order);
// 2 * sum k^2 q^{k^2} / phi(-q^2)^2.
Series some_bar_series_closed(std::size_t order);
// Coefficient n = 2 * sum_k pbar(k) sigma_oe(n - k).
Series some_bar_convolution(std::size_t order);
// lambert_all / (q;q)_inf.
Series some_series(std::size_t order);

// The same generating functions computed in Z/MZ.
ResidueSeries overline_p_series_mod(std::size_t order, std::uint64_t modulus);
ResidueSeries some_bar_series_mod(std::size_t order, std::uint64_t modulus);
ResidueSeries some_series_mod(std::size_t order, std::uint64_t modulus);

// Sum over divisors d of a with a/d odd of (-1)^{d-1} d; sigma_oe(0) = 0.
std::int64_t sigma_oe(std::uint64_t a);

// 2b * sum_{k=0}^{floor((n-b)/(2b))} pbar(n - (2k+1)b). Zero when n < b.
// The pbar series must reach order n; throws std::invalid_argument otherwise
// or when b == 0.
Integer s_b_formula(unsigned b, unsigned n, const Series &pbar);
Integer s_b_formula(unsigned b, unsigned n);

struct StatRecord {
    std::size_t n;
    Integer pbar;
    Integer some_bar;
    Integer s_odd;
    Integer s_even;
};

// Rows n = 0..max_n from the series route. s_odd and s_even are recovered
// from s_odd + s_even = n pbar(n) and s_odd - s_even = SOME-bar(n); throws
// std::logic_error if n pbar(n) + SOME-bar(n) is ever odd.
std::vector<StatRecord> stat_table(std::size_t max_n);

// Series whose coefficients are s_odd(n) and s_even(n).
Series s_odd_series(std::size_t order);
Series s_even_series(std::size_t order);

} // namespace opsome

#endif
