#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <catch_amalgamated.hpp>

#include <opsome/partitions.hpp>
#include <opsome/theta.hpp>

#include "generators.hpp"

using namespace opsome;

namespace
{

using Key = std::vector<std::tuple<std::uint32_t, std::uint32_t, bool>>;

Key key_of(const Overpartition &op)
{
    Key k;
    for (const auto &p : op.parts) {
        k.emplace_back(p.size, p.multiplicity, p.overlined);
    }
    return k;
}

} // namespace

TEST_CASE("enumeration visits each overpartition once")
{
    REQUIRE(enumerate_overpartitions(0, [](const Overpartition &op) { REQUIRE(op.parts.empty()); }) == 1u);

    std::set<Key> seen;
    const auto count = enumerate_overpartitions(2, [&](const Overpartition &op) {
        REQUIRE(op.total() == 2u);
        REQUIRE(seen.insert(key_of(op)).second);
    });
    REQUIRE(count == 4u);
    const std::set<Key> expected{
        {{2, 1, false}}, {{2, 1, true}}, {{1, 2, false}}, {{1, 2, true}}};
    REQUIRE(seen == expected);

    for (unsigned n = 0; n <= 12u; ++n) {
        std::set<Key> all;
        const auto c = enumerate_overpartitions(n, [&](const Overpartition &op) {
            REQUIRE(op.total() == n);
            for (std::size_t i = 1; i < op.parts.size(); ++i) {
                REQUIRE(op.parts[i - 1].size > op.parts[i].size);
            }
            all.insert(key_of(op));
        });
        REQUIRE(all.size() == c);
    }
    REQUIRE(overline_p_oracle(4) == 14);
}

TEST_CASE("hand-enumerated oracle values")
{
    REQUIRE(some_bar_oracle(0) == 0);
    REQUIRE(some_bar_oracle(1) == 2);
    REQUIRE(some_bar_oracle(2) == 0);
    REQUIRE(some_bar_oracle(3) == 8);
    REQUIRE(some_bar_oracle(4) == 8);

    REQUIRE(s_b_oracle(1, 2) == 4);
    REQUIRE(s_b_oracle(2, 4) == 16);
    REQUIRE(s_b_oracle(5, 3) == 0);

    REQUIRE(some_oracle(1) == 1);
    REQUIRE(some_oracle(2) == 0);
    REQUIRE(some_oracle(3) == 5);
    // (4):-4, (3,1):+4, (2,2):-4, (2,1,1):0, (1^4):+4.
    REQUIRE(some_oracle(4) == 0);

    REQUIRE_THROWS_AS(some_bar_oracle(oracle_cap + 1u), std::out_of_range);
}

TEST_CASE("overpartition generating function")
{
    const auto p = overline_p_series(5);
    REQUIRE(p == opsome_test::make({1, 2, 4, 8, 14, 24}));
    REQUIRE(p[3] % 8 == 0);
}

TEST_CASE("sigma_oe")
{
    REQUIRE(sigma_oe(0) == 0);
    REQUIRE(sigma_oe(1) == 1);
    REQUIRE(sigma_oe(2) == -2);
    REQUIRE(sigma_oe(3) == 4);
    REQUIRE(sigma_oe(6) == -8);
    for (std::uint64_t a = 1; a <= 300u; ++a) {
        std::int64_t brute = 0;
        for (std::uint64_t d = 1; d <= a; ++d) {
            if (a % d == 0u && (a / d) % 2u == 1u) {
                brute += (d % 2u == 1u) ? static_cast<std::int64_t>(d) : -static_cast<std::int64_t>(d);
            }
        }
        REQUIRE(sigma_oe(a) == brute);
    }
}

TEST_CASE("SOME-bar routes")
{
    const auto gf = some_bar_series(40);
    REQUIRE(gf[1] == 2);
    REQUIRE(gf[2] == 0);
    REQUIRE(gf[3] == 8);
    REQUIRE(gf[4] == 8);
    const auto conv = some_bar_convolution(3);
    REQUIRE(conv == opsome_test::make({0, 2, 0, 8}));

    const auto closed = some_bar_series_closed(600);
    REQUIRE(closed == some_bar_series(600));
    for (std::size_t n = 0; n <= 600u; ++n) {
        REQUIRE(sgn(closed[n]) >= 0);
        REQUIRE(mpz_even_p(closed[n].get_mpz_t()) != 0);
    }
    REQUIRE(some_bar_convolution(300) == some_bar_series(300));
}

TEST_CASE("brute force agrees with every series route", "[oracle]")
{
    constexpr unsigned max_n = 26;
    const auto gf = some_bar_series(max_n);
    const auto closed = some_bar_series_closed(max_n);
    const auto conv = some_bar_convolution(max_n);
    const auto pbar = overline_p_series(max_n);
    const auto some = some_series(max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
        INFO("n = " << n);
        const auto st = oracle_stats(n);
        REQUIRE(st.some_bar == some_bar_oracle(n));
        REQUIRE(gf[n] == st.some_bar);
        REQUIRE(closed[n] == st.some_bar);
        REQUIRE(conv[n] == st.some_bar);
        REQUIRE(pbar[n] == st.pbar);
        REQUIRE(st.s_odd - st.s_even == st.some_bar);
        REQUIRE(st.s_odd + st.s_even == n * st.pbar);
        REQUIRE(some[n] == some_oracle(n));

        Integer by_b;
        for (unsigned b = 1; b <= n; ++b) {
            REQUIRE(st.s_b[b] == s_b_oracle(b, n));
            REQUIRE(s_b_formula(b, n, pbar) == st.s_b[b]);
            by_b += st.s_b[b];
        }
        REQUIRE(by_b == n * st.pbar);
    }
}

TEST_CASE("S_b formula")
{
    REQUIRE(s_b_formula(1, 2) == 4);
    REQUIRE(s_b_formula(2, 4) == 16);
    REQUIRE(s_b_formula(5, 3) == 0);
    const auto pbar = overline_p_series(500);
    for (unsigned b = 1; b <= 20u; ++b) {
        for (unsigned n = 1; n <= 500u; ++n) {
            REQUIRE(mpz_divisible_ui_p(s_b_formula(b, n, pbar).get_mpz_t(), 2u * b) != 0);
        }
    }
    REQUIRE_THROWS_AS(s_b_formula(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(s_b_formula(1, 10, overline_p_series(5)), std::invalid_argument);
}

TEST_CASE("statistic table")
{
    const auto rows = stat_table(40);
    REQUIRE(rows.size() == 41u);
    REQUIRE(rows[0].pbar == 1);
    REQUIRE(rows[0].some_bar == 0);
    REQUIRE(rows[0].s_odd == 0);
    REQUIRE(rows[0].s_even == 0);
    REQUIRE(rows[2].pbar == 4);
    REQUIRE(rows[2].s_odd == 4);
    REQUIRE(rows[2].s_even == 4);
    // s_odd + s_even = 3 * 8 and s_odd - s_even = 8.
    REQUIRE(rows[3].pbar == 8);
    REQUIRE(rows[3].some_bar == 8);
    REQUIRE(rows[3].s_odd == 16);
    REQUIRE(rows[3].s_even == 8);
    for (const auto &r : rows) {
        REQUIRE(r.s_odd - r.s_even == r.some_bar);
        REQUIRE(r.s_odd + r.s_even == r.n * r.pbar);
    }
    REQUIRE(sums_oracle(3).odd == 16);
    REQUIRE(sums_oracle(3).even == 8);
}

TEST_CASE("SOME(5n+4) is divisible by 5")
{
    const auto s = some_series(600);
    for (std::size_t n = 4; n <= 600u; n += 5u) {
        REQUIRE(mpz_divisible_ui_p(s[n].get_mpz_t(), 5u) != 0);
    }
}

TEST_CASE("residue routes match the exact series")
{
    for (const std::uint64_t m : {3ull, 5ull, 4096ull}) {
        REQUIRE(some_bar_series_mod(500, m) == reduce_mod(some_bar_series(500), m));
        REQUIRE(overline_p_series_mod(500, m) == reduce_mod(overline_p_series(500), m));
        REQUIRE(some_series_mod(500, m) == reduce_mod(some_series(500), m));
    }
}
