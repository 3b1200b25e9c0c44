#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include <opsome/partitions.hpp>
#include <opsome/verify.hpp>

#include "generators.hpp"

using namespace opsome;
using namespace opsome::verify;
using opsome_test::make;

TEST_CASE("progression checks")
{
    const auto sb = some_bar_series(200);
    const auto ok = check_progression(sb, 4, 3, 8);
    REQUIRE(ok.status == Status::pass);
    REQUIRE(ok.instances == 50u);
    REQUIRE(ok.violations.empty());

    // SOME-bar(1) = 2.
    const auto bad = check_progression(sb, 4, 1, 8);
    REQUIRE(bad.status == Status::fail);
    REQUIRE(bad.violations.front() == Violation{0, 2});

    REQUIRE(check_progression(sb, 7, 3, 1).status == Status::pass);
    REQUIRE(check_progression(make({1, 1}), 4, 3, 8).status == Status::informational);
    REQUIRE(check_progression(make({1, 1}), 4, 3, 8).instances == 0u);
    REQUIRE_THROWS_AS(check_progression(sb, 4, 4, 8), std::invalid_argument);
    REQUIRE_THROWS_AS(check_progression(sb, 4, 1, 0), std::invalid_argument);

    // Residues are reported in [0, M).
    REQUIRE(check_progression(make({-3}), 1, 0, 8).violations.front().value == 5);
}

TEST_CASE("residue checks agree with exact checks")
{
    const auto sb = some_bar_series(600);
    const auto sb_mod = some_bar_series_mod(600, 4096);
    for (const std::uint64_t m : {2ull, 8ull, 64ull, 512ull}) {
        REQUIRE(check_progression(sb, 4, 1, m) == check_progression(sb_mod, 4, 1, m));
        REQUIRE(check_progression(sb, 8, 7, m) == check_progression(sb_mod, 8, 7, m));
        REQUIRE(check_nonsquare(sb, 2, m) == check_nonsquare(sb_mod, 2, m));
        REQUIRE(check_relation(sb, {16, 0}, {4, 0}, 4, m) == check_relation(sb_mod, {16, 0}, {4, 0}, 4, m));
    }
    REQUIRE_THROWS_AS(check_progression(sb_mod, 3, 2, 3), std::invalid_argument);
}

TEST_CASE("relation checks")
{
    const auto sb = some_bar_series(1024);
    REQUIRE(check_relation(sb, {16, 0}, {4, 0}, 4, 128).status == Status::pass);
    REQUIRE(check_relation(sb, {32, 0}, {8, 0}, 4, 512).status == Status::pass);
    // f(n) - 1*f(n) vanishes for any modulus.
    const auto same = check_relation(sb, {3, 1}, {3, 1}, 1, 7);
    REQUIRE(same.status == Status::pass);
    REQUIRE(same.instances == 342u);
    REQUIRE(check_relation(sb, {4, 1}, {4, 1}, 2, 8).status == Status::fail);
}

TEST_CASE("nonsquare checks")
{
    const auto sb = some_bar_series(1024);
    for (unsigned k = 1; k <= 4u; ++k) {
        const auto r = check_nonsquare(sb, k, std::uint64_t(1) << (2u * k + 1u));
        INFO("k = " << k);
        REQUIRE(r.status == Status::pass);
        REQUIRE(r.instances > 0u);
    }
    // Squares are exempt for a reason: SOME-bar(1) = 2 is not 0 mod 8.
    const auto all = check_progression(sb, 1, 0, 8);
    REQUIRE(all.status == Status::fail);
    REQUIRE(all.violations.front() == Violation{1, 2});
    for (const auto &v : all.violations) {
        REQUIRE(is_perfect_square(v.n));
    }
    REQUIRE_THROWS_AS(check_nonsquare(sb, 5, 8), std::invalid_argument);
    REQUIRE(is_perfect_square(0));
    REQUIRE_FALSE(is_perfect_square(2));
    REQUIRE(is_perfect_square(4096));
}

TEST_CASE("identity checks")
{
    const auto f = make({1, 2, 3});
    REQUIRE(check_exact(f, f, 2).status == Status::pass);
    REQUIRE(check_exact(f, f, 2).instances == 3u);
    const auto r = check_exact(f, make({1, 2, 5}), 2);
    REQUIRE(r.status == Status::fail);
    REQUIRE(r.violations == std::vector<Violation>{{2, -2}});
    REQUIRE(check_exact(f, make({1, 2, 5}), 1).status == Status::pass);
    REQUIRE(check_congruent(f, make({1, 2, 5}), 2, 2).status == Status::pass);
    REQUIRE(check_congruent(f, make({1, 2, 6}), 2, 2).violations == std::vector<Violation>{{2, 1}});
    REQUIRE_THROWS_AS(check_exact(f, make({1, 2}), 2), std::invalid_argument);
    REQUIRE_THROWS_AS(check_congruent(f, f, 0, 2), std::invalid_argument);
}

TEST_CASE("string conversions round-trip")
{
    for (auto k : {ClaimKind::progression, ClaimKind::relation, ClaimKind::exact_identity, ClaimKind::nonsquare,
                   ClaimKind::informational}) {
        REQUIRE(parse_claim_kind(to_string(k)) == k);
    }
    for (auto s : {Status::pass, Status::fail, Status::informational}) {
        REQUIRE(parse_status(to_string(s)) == s);
    }
    REQUIRE(to_string(ClaimKind::exact_identity) == "exact-identity");
    REQUIRE_FALSE(parse_status("passed").has_value());
}

TEST_CASE("registry")
{
    const auto &claims = builtin_claims();
    REQUIRE(claims.size() >= 30u);
    std::set<std::string> ids;
    for (const auto &c : claims) {
        REQUIRE(ids.insert(c.id).second);
        REQUIRE_FALSE(c.anchor.empty());
        REQUIRE_FALSE(c.statement.empty());
    }
    for (const char *id : {"eq2", "eq3", "eq4", "eq5", "eq6-k1", "eq7-k4", "eq193", "eq20", "eq21", "eq22",
                           "eq23-proof", "eq23-as-stated", "eq1-eq30", "pf25-k3"}) {
        REQUIRE(ids.count(id) == 1u);
    }
    REQUIRE(find_claim("eq2").id == "eq2");
    REQUIRE(find_claim("eq23-as-stated").kind == ClaimKind::informational);
    REQUIRE_THROWS_AS(find_claim("no-such-claim"), UnknownClaimError);
}

TEST_CASE("run_all selection and ordering")
{
    const std::vector<std::string> one{"eq2"};
    const auto r = run_all(256, one);
    REQUIRE(r.size() == 1u);
    REQUIRE(r[0].claim_id == "eq2");
    REQUIRE(r[0].kind == ClaimKind::progression);
    REQUIRE(r[0].anchor == find_claim("eq2").anchor);
    REQUIRE(r[0].status == Status::pass);
    REQUIRE(r[0].instances == 64u);

    const std::vector<std::string> shuffled{"eq22", "eq2", "eq22", "eq4"};
    const auto s = run_all(256, shuffled);
    REQUIRE(s.size() == 3u);
    REQUIRE(s[0].claim_id == "eq2");
    REQUIRE(s[1].claim_id == "eq4");
    REQUIRE(s[2].claim_id == "eq22");

    const std::vector<std::string> unknown{"eq2", "bogus"};
    REQUIRE_THROWS_AS(run_all(256, unknown), UnknownClaimError);
}

TEST_CASE("negative controls fail")
{
    SeriesContext ctx(512);
    const auto controls = negative_controls();
    REQUIRE(controls.size() >= 2u);
    for (const auto &c : controls) {
        INFO(c.id);
        const auto r = run_claim(c, ctx);
        REQUIRE(r.status == Status::fail);
        REQUIRE_FALSE(r.violations.empty());
        REQUIRE_THROWS_AS(find_claim(c.id), UnknownClaimError);
    }
}

TEST_CASE("as-stated 29n+19 is informational")
{
    SeriesContext ctx(1024);
    const auto r = run_claim(find_claim("eq23-as-stated"), ctx);
    REQUIRE(r.status == Status::informational);
    REQUIRE(r.instances == 35u);
    REQUIRE_FALSE(r.violations.empty());
}

TEST_CASE("results do not depend on the job count")
{
    const auto a = run_all(512, {}, 1);
    const auto b = run_all(512, {}, 3);
    REQUIRE(a == b);
    REQUIRE(a.size() == builtin_claims().size());
    for (const auto &r : a) {
        INFO(r.claim_id);
        REQUIRE(r.status != Status::fail);
    }
}

TEST_CASE("context caches residue families")
{
    SeriesContext ctx(300);
    const auto &a = ctx.residue(Statistic::some_bar, 8);
    const auto &b = ctx.residue(Statistic::some_bar, 64);
    REQUIRE(&a == &b);
    REQUIRE(a.modulus() == 4096u);
    REQUIRE(ctx.residue(Statistic::s_odd, 8).modulus() == 2048u);
    REQUIRE(ctx.residue(Statistic::some_bar, 5).modulus() == 5u);
    REQUIRE(&ctx.exact(Statistic::some_bar) == &ctx.exact(Statistic::some_bar));
    REQUIRE(reduce_mod(ctx.exact(Statistic::s_even), 2048) == ctx.residue(Statistic::s_even, 2048));
}
