#include <opsome/verify.hpp>

#include <algorithm>
#include <set>

#include <opsome/partitions.hpp>
#include <opsome/theta.hpp>

namespace opsome::verify
{

namespace
{

using theta::Sign;

std::size_t cap(std::size_t limit, std::size_t available)
{
    return std::min(limit, available);
}

// Order of the m-dissection (residue r) of a series of order N, capped.
std::size_t dissected(std::size_t limit, std::size_t order, std::size_t m, std::size_t r)
{
    return order < r ? 0u : cap(limit, (order - r) / m);
}

// sum_{m >= 0} (2m+1)^2 q^{stride * m(m+1)/2}.
Series odd_square_series(std::size_t order, std::size_t stride)
{
    Series acc(order);
    for (std::size_t m = 0; stride * (m * (m + 1u) / 2u) <= order; ++m) {
        const auto k = 2u * m + 1u;
        acc = acc + Series::monomial(static_cast<unsigned long>(k * k), stride * (m * (m + 1u) / 2u), order);
    }
    return acc;
}

Series phi_p(std::size_t o)
{
    return theta::phi(Sign::plus, o);
}

Series phi_m(std::size_t o)
{
    return theta::phi(Sign::minus, o);
}

Series some_bar_dissection(SeriesContext &ctx, std::size_t m, std::size_t r, std::size_t o)
{
    return dissect(ctx.exact(Statistic::some_bar), m, r).truncated(o);
}

Claim progression(std::string id, std::string anchor, std::string statement, Statistic stat, std::uint64_t step,
                  std::uint64_t residue, std::uint64_t modulus, ClaimKind kind = ClaimKind::progression)
{
    return Claim{std::move(id), kind, std::move(anchor), std::move(statement),
                 ProgressionParams{stat, step, residue, modulus}};
}

Claim identity(std::string id, std::string anchor, std::string statement,
               std::function<IdentityInstance(SeriesContext &)> build,
               std::optional<std::uint64_t> modulus = std::nullopt)
{
    return Claim{std::move(id), ClaimKind::exact_identity, std::move(anchor), std::move(statement),
                 IdentityParams{std::move(build), modulus}};
}

void add_congruences(std::vector<Claim> &out)
{
    const auto sb = Statistic::some_bar;
    out.push_back(progression("eq2", "Theorem 4, eq. (2)", "SOMEbar(4n+3) == 0 (mod 8)", sb, 4, 3, 8));
    out.push_back(progression("eq3", "Theorem 4, eq. (3)", "SOMEbar(8n+7) == 0 (mod 64)", sb, 8, 7, 64));
    out.push_back(Claim{"eq4", ClaimKind::relation, "Theorem 5, eq. (4)",
                        "SOMEbar(16n) == 4 SOMEbar(4n) (mod 2^7)", RelationParams{sb, 16, 0, 4, 0, 4, 128}});
    out.push_back(Claim{"eq5", ClaimKind::relation, "Theorem 5, eq. (5)",
                        "SOMEbar(32n) == 4 SOMEbar(8n) (mod 2^9)", RelationParams{sb, 32, 0, 8, 0, 4, 512}});
    for (unsigned k = 1; k <= 4u; ++k) {
        const std::uint64_t step = std::uint64_t(1) << (2u * k - 1u);
        const std::uint64_t mod = std::uint64_t(1) << (2u * k + 1u);
        out.push_back(progression("eq6-k" + std::to_string(k), "Theorem 6, eq. (6), k=" + std::to_string(k),
                                  "SOMEbar(" + std::to_string(step) + "n) == 0 (mod 2^" + std::to_string(2u * k + 1u)
                                      + ")",
                                  sb, step, 0, mod));
    }
    for (unsigned k = 1; k <= 4u; ++k) {
        const std::uint64_t stride = std::uint64_t(1) << (2u * (k - 1u));
        out.push_back(Claim{"eq7-k" + std::to_string(k), ClaimKind::nonsquare,
                            "Theorem 7, eq. (7), k=" + std::to_string(k),
                            "SOMEbar(" + std::to_string(stride) + "n) == 0 (mod 2^" + std::to_string(2u * k + 1u)
                                + ") for n not a square",
                            NonsquareParams{k}});
    }

    struct Row {
        const char *id;
        std::uint64_t step;
        std::uint64_t residue;
        unsigned log2_mod;
    };
    constexpr Row thm8[] = {
        {"eq9", 4, 2, 5},      {"eq10", 8, 2, 7},     {"eq11", 16, 10, 8},    {"eq12", 16, 14, 6},
        {"eq13", 16, 12, 5},   {"eq14", 32, 28, 7},   {"eq15", 32, 20, 5},    {"eq16", 32, 24, 6},
        {"eq17", 128, 80, 7},  {"eq18", 64, 48, 7},   {"eq19", 128, 112, 8},  {"eq191", 128, 96, 8},
        {"eq192", 256, 192, 9}, {"eq193", 512, 320, 9},
    };
    for (const auto &row : thm8) {
        const std::string id = row.id;
        out.push_back(progression(id, "Theorem 8, eq. (" + id.substr(2) + ")",
                                  "SOMEbar(" + std::to_string(row.step) + "n+" + std::to_string(row.residue)
                                      + ") == 0 (mod 2^" + std::to_string(row.log2_mod) + ")",
                                  sb, row.step, row.residue, std::uint64_t(1) << row.log2_mod));
    }

    out.push_back(progression("eq20", "Theorem 9, eq. (20)", "SOMEbar(40n+31) == 0 (mod 5)", sb, 40, 31, 5));
    out.push_back(progression("eq21", "Theorem 9, eq. (21)", "SOMEbar(40n+39) == 0 (mod 5)", sb, 40, 39, 5));
    out.push_back(progression("eq22", "Theorem 10, eq. (22)", "SOMEbar(3n+2) == 0 (mod 3)", sb, 3, 2, 3));
    out.push_back(progression("eq23-proof", "Theorem 10, proof (24n+19 form)", "SOMEbar(24n+19) == 0 (mod 3)", sb,
                              24, 19, 3));
    out.push_back(progression("eq23-as-stated", "Theorem 10, eq. (23) as printed", "SOMEbar(29n+19) == 0 (mod 3)",
                              sb, 29, 19, 3, ClaimKind::informational));

    out.push_back(progression("cor-even", "Corollary to Theorem 1", "SOMEbar(n) == 0 (mod 2)", sb, 1, 0, 2));
    out.push_back(progression("some-5n+4", "Introduction, SOME(5n+4)", "SOME(5n+4) == 0 (mod 5)", Statistic::some, 5,
                              4, 5));
    out.push_back(progression("pbar-4n+3", "Introduction, Hirschhorn-Sellers", "pbar(4n+3) == 0 (mod 8)",
                              Statistic::overline_p, 4, 3, 8));
    out.push_back(progression("pbar-8n+7", "Introduction, Hirschhorn-Sellers", "pbar(8n+7) == 0 (mod 64)",
                              Statistic::overline_p, 8, 7, 64));
    out.push_back(progression("eq02-odd", "Corollary to Theorem 4, eq. (02)", "S_o(4n+3) == 0 (mod 8)",
                              Statistic::s_odd, 4, 3, 8));
    out.push_back(progression("eq02-even", "Corollary to Theorem 4, eq. (02)", "S_e(4n+3) == 0 (mod 8)",
                              Statistic::s_even, 4, 3, 8));
    out.push_back(progression("eq03-odd", "Corollary to Theorem 4, eq. (03)", "S_o(8n+7) == 0 (mod 64)",
                              Statistic::s_odd, 8, 7, 64));
    out.push_back(progression("eq03-even", "Corollary to Theorem 4, eq. (03)", "S_e(8n+7) == 0 (mod 64)",
                              Statistic::s_even, 8, 7, 64));
}

void add_generating_function_identities(std::vector<Claim> &out)
{
    out.push_back(identity("eq1-eq30", "Theorem 1, eq. (1) vs eq. (30)",
                           "2 pbar(q) sum q^{2m-1}/(1+q^{2m-1})^2 = 2 sum k^2 q^{k^2} / phi(-q^2)^2",
                           [](SeriesContext &ctx) {
                               const auto o = cap(2000, ctx.order());
                               return IdentityInstance{ctx.exact(Statistic::some_bar).truncated(o),
                                                       some_bar_series_closed(o)};
                           }));
    out.push_back(identity("thm2-convolution", "Theorem 2",
                           "SOMEbar(n) = 2 sum_k pbar(k) sigma_oe(n-k)", [](SeriesContext &ctx) {
                               const auto o = cap(2000, ctx.order());
                               return IdentityInstance{ctx.exact(Statistic::some_bar).truncated(o),
                                                       some_bar_convolution(o)};
                           }));
    out.push_back(identity("stat-parity", "Section 4, adding and subtracting",
                           "n pbar(n) == SOMEbar(n) (mod 2), so S_o and S_e are integers",
                           [](SeriesContext &ctx) {
                               return IdentityInstance{derivative_q(ctx.exact(Statistic::overline_p)),
                                                       ctx.exact(Statistic::some_bar)};
                           },
                           2));

    out.push_back(identity("pf2", "Section 4, (pf2)",
                           "sum SOMEbar(4n+3) q^n = 8 psi(q^2)^2/phi(-q)^4 sum (2m+1)^2 q^{m^2+m}",
                           [](SeriesContext &ctx) {
                               const auto o = dissected(500, ctx.order(), 4, 3);
                               const auto psi2 = substitute_power(theta::psi(o), 2);
                               auto rhs = scale(8, div(mul(psi2, psi2), pow(phi_m(o), 4)) * odd_square_series(o, 2));
                               return IdentityInstance{some_bar_dissection(ctx, 4, 3, o), std::move(rhs)};
                           }));
    out.push_back(identity("pf3", "Section 4, (pf3)",
                           "sum SOMEbar(8n+7) q^n = 64 psi(q)^6/phi(-q)^8 sum (2m+1)^2 q^{m(m+1)/2}",
                           [](SeriesContext &ctx) {
                               const auto o = dissected(500, ctx.order(), 8, 7);
                               auto rhs = scale(64, div(pow(theta::psi(o), 6), pow(phi_m(o), 8))
                                                        * odd_square_series(o, 1));
                               return IdentityInstance{some_bar_dissection(ctx, 8, 7, o), std::move(rhs)};
                           }));
    out.push_back(identity("pf21", "Section 5, (pf21)",
                           "sum SOMEbar(2n) q^n = 8 phi(q)^2/phi(-q^2)^4 sum k^2 q^{2k^2}", [](SeriesContext &ctx) {
                               const auto o = dissected(500, ctx.order(), 2, 0);
                               const auto phi_m2 = substitute_power(phi_m(o), 2);
                               auto rhs = scale(8, div(pow(phi_p(o), 2), pow(phi_m2, 4))
                                                       * substitute_power(theta::sum_k2_qk2(o), 2));
                               return IdentityInstance{some_bar_dissection(ctx, 2, 0, o), std::move(rhs)};
                           }));
    out.push_back(identity("pf22", "Section 5, (pf22)",
                           "sum SOMEbar(4n+2) q^n = 32 psi(q^2)^2/phi(-q)^4 sum k^2 q^{k^2}",
                           [](SeriesContext &ctx) {
                               const auto o = dissected(500, ctx.order(), 4, 2);
                               const auto psi2 = substitute_power(theta::psi(o), 2);
                               auto rhs = scale(32, div(mul(psi2, psi2), pow(phi_m(o), 4)) * theta::sum_k2_qk2(o));
                               return IdentityInstance{some_bar_dissection(ctx, 4, 2, o), std::move(rhs)};
                           }));
    out.push_back(identity("pf23", "Section 5, (pf23) first form",
                           "sum SOMEbar(4n) q^n = 8 phi(q)^2/phi(-q)^4 sum k^2 q^{k^2}", [](SeriesContext &ctx) {
                               const auto o = dissected(500, ctx.order(), 4, 0);
                               auto rhs = scale(8, div(pow(phi_p(o), 2), pow(phi_m(o), 4)) * theta::sum_k2_qk2(o));
                               return IdentityInstance{some_bar_dissection(ctx, 4, 0, o), std::move(rhs)};
                           }));
    out.push_back(identity("pf23-b", "Section 5, (pf23) second form",
                           "sum SOMEbar(4n) q^n = 8 phi(q)^6/phi(-q^2)^8 sum k^2 q^{k^2}", [](SeriesContext &ctx) {
                               const auto o = dissected(500, ctx.order(), 4, 0);
                               const auto phi_m2 = substitute_power(phi_m(o), 2);
                               auto rhs = scale(8, div(pow(phi_p(o), 6), pow(phi_m2, 8)) * theta::sum_k2_qk2(o));
                               return IdentityInstance{some_bar_dissection(ctx, 4, 0, o), std::move(rhs)};
                           }));
}

void add_theta_identities(std::vector<Claim> &out)
{
    out.push_back(identity("eq27", "Section 2, eq. (27)", "phi(-q^2)^2 = phi(q) phi(-q)", [](SeriesContext &ctx) {
        const auto o = cap(500, ctx.order());
        const auto lhs = substitute_power(phi_m(o), 2);
        return IdentityInstance{mul(lhs, lhs), mul(phi_p(o), phi_m(o))};
    }));
    out.push_back(identity("eq28", "Section 2, eq. (28)", "phi(q) = phi(q^4) + 2q psi(q^8)", [](SeriesContext &ctx) {
        const auto o = cap(500, ctx.order());
        return IdentityInstance{phi_p(o), substitute_power(phi_p(o), 4)
                                              + scale(2, shift(substitute_power(theta::psi(o), 8), 1))};
    }));
    out.push_back(identity("eq29", "Section 2, eq. (29)", "phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2",
                           [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               const auto p2 = substitute_power(phi_p(o), 2);
                               const auto s4 = substitute_power(theta::psi(o), 4);
                               return IdentityInstance{pow(phi_p(o), 2), mul(p2, p2) + scale(4, shift(mul(s4, s4), 1))};
                           }));
    out.push_back(identity("eq25-product", "Section 2, eq. (25)", "sum q^{n(n+1)/2} = (q^2;q^2)/(q;q^2)",
                           [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               return IdentityInstance{theta::psi(o), theta::psi_product(o)};
                           }));
    out.push_back(identity("eq26-product", "Section 2, eq. (26)",
                           "1 + 2 sum q^{n^2} = (-q;q^2)(q^2;q^2)/((q;q^2)(-q^2;q^2))", [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               return IdentityInstance{phi_p(o), theta::phi_product(o)};
                           }));
    out.push_back(identity("lemma-ep1", "Section 2, Lemma (Ep1)",
                           "q d/dq log phi(q) = 2 sum q^{2n-1}/(1+q^{2n-1})^2", [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               return IdentityInstance{log_derivative(phi_p(o)), scale(2, theta::lambert_odd(o))};
                           }));
    out.push_back(identity("lemma-ep2", "Section 2, Lemma (Ep2)",
                           "q d/dq log phi(q) = 2 sum k^2 q^{k^2} / (1 + 2 sum q^{k^2})", [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               return IdentityInstance{log_derivative(phi_p(o)),
                                                       div(scale(2, theta::sum_k2_qk2(o)), phi_p(o))};
                           }));
    out.push_back(identity(
        "pf24", "Section 5, (pf24)",
        "phi(q)^6 = phi(q^2)^6 + 2^6 q^3 psi(q^4)^6 + 12q phi(q^2)^4 psi(q^4)^2 + 3*2^4 q^2 phi(q^2)^2 psi(q^4)^4",
        [](SeriesContext &ctx) {
            const auto o = cap(500, ctx.order());
            const auto p2 = substitute_power(phi_p(o), 2);
            const auto s4 = substitute_power(theta::psi(o), 4);
            auto rhs = pow(p2, 6) + scale(64, shift(pow(s4, 6), 3)) + scale(12, shift(pow(p2, 4) * pow(s4, 2), 1))
                       + scale(48, shift(pow(p2, 2) * pow(s4, 4), 2));
            return IdentityInstance{pow(phi_p(o), 6), std::move(rhs)};
        }));
    for (unsigned k = 1; k <= 3u; ++k) {
        const unsigned e = 1u << k;
        out.push_back(identity("pf25-k" + std::to_string(k), "Section 5, (pf25), k=" + std::to_string(k),
                               "phi(q)^" + std::to_string(e) + "/phi(-q)^" + std::to_string(e) + " == 1 (mod 2^"
                                   + std::to_string(k + 2u) + ")",
                               [e](SeriesContext &ctx) {
                                   const auto o = cap(1000, ctx.order());
                                   return IdentityInstance{div(pow(phi_p(o), e), pow(phi_m(o), e)), Series::one(o)};
                               },
                               std::uint64_t(1) << (k + 2u)));
    }
    out.push_back(identity("psi-square-mod2", "Section 5, psi(q)^2 == psi(q^2) (mod 2)",
                           "psi(q)^2 == psi(q^2) (mod 2)",
                           [](SeriesContext &ctx) {
                               const auto o = cap(1000, ctx.order());
                               return IdentityInstance{pow(theta::psi(o), 2), substitute_power(theta::psi(o), 2)};
                           },
                           2));
    out.push_back(identity("euler-cube", "Section 6, f(-q)^3 series",
                           "f(-q)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2}", [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               Series rhs(o);
                               for (std::size_t k = 0; k * (k + 1u) / 2u <= o; ++k) {
                                   const long c = (k % 2u == 0u ? 1L : -1L) * static_cast<long>(2u * k + 1u);
                                   rhs = rhs + Series::monomial(c, k * (k + 1u) / 2u, o);
                               }
                               return IdentityInstance{pow(theta::euler(o), 3), std::move(rhs)};
                           }));
    out.push_back(identity("phi-9-dissection", "Section 6, 9-dissection of phi",
                           "phi(q) = phi(q^9) + 2q f(q^3, q^15)", [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               const auto f315 = theta::theta_f({3, 15, Sign::plus, Sign::plus}, o);
                               return IdentityInstance{phi_p(o),
                                                       substitute_power(phi_p(o), 9) + scale(2, shift(f315, 1))};
                           }));

    struct Jtp {
        const char *id;
        theta::ThetaSpec spec;
        const char *label;
    };
    const Jtp jtp[] = {
        {"jtp-1-3", {1, 3, Sign::plus, Sign::plus}, "f(q, q^3)"},
        {"jtp-1-1", {1, 1, Sign::plus, Sign::plus}, "f(q, q)"},
        {"jtp-1-2-neg", {1, 2, Sign::minus, Sign::minus}, "f(-q, -q^2)"},
        {"jtp-3-15", {3, 15, Sign::plus, Sign::plus}, "f(q^3, q^15)"},
        {"jtp-6-30-neg", {6, 30, Sign::minus, Sign::minus}, "f(-q^6, -q^30)"},
    };
    for (const auto &j : jtp) {
        const auto spec = j.spec;
        out.push_back(identity(j.id, "Section 2, Jacobi triple product",
                               std::string(j.label) + " = (-a;ab)(-b;ab)(ab;ab)", [spec](SeriesContext &ctx) {
                                   const auto o = cap(500, ctx.order());
                                   return IdentityInstance{theta::theta_f(spec, o), theta::theta_f_product(spec, o)};
                               }));
    }

    out.push_back(identity("eta5-exact", "Section 6, eta quotient", "psi(q)^6/phi(-q)^8 = f(-q^2)^20/f(-q)^22",
                           [](SeriesContext &ctx) {
                               const auto o = cap(500, ctx.order());
                               const auto f1 = theta::euler(o);
                               return IdentityInstance{div(pow(theta::psi(o), 6), pow(phi_m(o), 8)),
                                                       div(pow(substitute_power(f1, 2), 20), pow(f1, 22))};
                           }));
    out.push_back(identity("eta5-mod5", "Section 6, eta quotient mod 5",
                           "psi(q)^6/phi(-q)^8 == f(-q)^3 f(-q^10)^4/f(-q^5)^5 (mod 5)",
                           [](SeriesContext &ctx) {
                               const auto o = cap(1000, ctx.order());
                               const auto f1 = theta::euler(o);
                               auto rhs = div(pow(f1, 3) * pow(substitute_power(f1, 10), 4),
                                              pow(substitute_power(f1, 5), 5));
                               return IdentityInstance{div(pow(theta::psi(o), 6), pow(phi_m(o), 8)), std::move(rhs)};
                           },
                           5));
}

std::vector<Claim> make_registry()
{
    std::vector<Claim> out;
    add_congruences(out);
    add_generating_function_identities(out);
    add_theta_identities(out);

    std::set<std::string> seen;
    for (const auto &c : out) {
        if (!seen.insert(c.id).second) {
            throw std::logic_error("duplicate claim id " + c.id);
        }
    }
    return out;
}

} // namespace

const std::vector<Claim> &builtin_claims()
{
    static const std::vector<Claim> registry = make_registry();
    return registry;
}

std::vector<Claim> negative_controls()
{
    return {
        progression("neg-4n+1-mod8", "negative control", "SOMEbar(4n+1) == 0 (mod 8) [false]", Statistic::some_bar, 4,
                    1, 8),
        progression("neg-3n+1-mod3", "negative control", "SOMEbar(3n+1) == 0 (mod 3) [false]", Statistic::some_bar, 3,
                    1, 3),
        identity("neg-eq29-sign", "negative control", "phi(q)^2 = phi(q^2)^2 - 4q psi(q^4)^2 [false]",
                 [](SeriesContext &ctx) {
                     const auto o = cap(500, ctx.order());
                     const auto p2 = substitute_power(phi_p(o), 2);
                     const auto s4 = substitute_power(theta::psi(o), 4);
                     return IdentityInstance{pow(phi_p(o), 2), mul(p2, p2) - scale(4, shift(mul(s4, s4), 1))};
                 }),
    };
}

} // namespace opsome::verify
