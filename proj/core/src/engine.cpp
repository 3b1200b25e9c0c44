#include <opsome/verify.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <type_traits>

#include <opsome/partitions.hpp>

namespace opsome::verify
{

namespace
{

constexpr std::uint64_t two_adic_family = 4096;

bool is_power_of_two(std::uint64_t m)
{
    return m != 0u && (m & (m - 1u)) == 0u;
}

bool is_half_sum(Statistic s)
{
    return s == Statistic::s_odd || s == Statistic::s_even;
}

// Modulus actually computed for a claim modulus M.
std::uint64_t family_modulus(Statistic stat, std::uint64_t m)
{
    const auto cap = is_half_sum(stat) ? two_adic_family / 2u : two_adic_family;
    if (is_power_of_two(m) && m <= cap) {
        return cap;
    }
    return m;
}

ResidueSeries base_residue(Statistic stat, std::size_t order, std::uint64_t modulus)
{
    switch (stat) {
        case Statistic::some_bar:
            return some_bar_series_mod(order, modulus);
        case Statistic::overline_p:
            return overline_p_series_mod(order, modulus);
        case Statistic::some:
            return some_series_mod(order, modulus);
        default:
            break;
    }
    throw std::logic_error("base_residue: not a base statistic");
}

// (n pbar(n) +- SOME-bar(n)) / 2 modulo m, via the residues modulo 2m.
ResidueSeries half_sum_residue(Statistic stat, std::size_t order, std::uint64_t m)
{
    const auto wide = 2u * m;
    const auto total = derivative_q(overline_p_series_mod(order, wide));
    const auto diff = some_bar_series_mod(order, wide);
    const auto twice = stat == Statistic::s_odd ? add(total, diff) : sub(total, diff);
    std::vector<std::int64_t> half(order + 1u);
    for (std::size_t n = 0; n <= order; ++n) {
        if (twice[n] % 2u != 0u) {
            throw std::logic_error("n*pbar(n) +- SOME-bar(n) is odd at n = " + std::to_string(n));
        }
        half[n] = static_cast<std::int64_t>(twice[n] / 2u);
    }
    return ResidueSeries(half, m);
}

} // namespace

SeriesContext::SeriesContext(std::size_t order) : m_order(order)
{
    for (auto s : {Statistic::some_bar, Statistic::overline_p, Statistic::some, Statistic::s_odd,
                   Statistic::s_even}) {
        m_exact.try_emplace(s);
    }
}

const Series &SeriesContext::exact(Statistic stat)
{
    auto &slot = m_exact.at(stat);
    std::call_once(slot.once, [&] {
        switch (stat) {
            case Statistic::some_bar:
                slot.value = std::make_unique<Series>(some_bar_series(m_order));
                break;
            case Statistic::overline_p:
                slot.value = std::make_unique<Series>(overline_p_series(m_order));
                break;
            case Statistic::some:
                slot.value = std::make_unique<Series>(some_series(m_order));
                break;
            case Statistic::s_odd:
                slot.value = std::make_unique<Series>(s_odd_series(m_order));
                break;
            case Statistic::s_even:
                slot.value = std::make_unique<Series>(s_even_series(m_order));
                break;
        }
    });
    return *slot.value;
}

const ResidueSeries &SeriesContext::residue(Statistic stat, std::uint64_t modulus)
{
    const auto family = family_modulus(stat, modulus);
    const auto key = std::make_pair(stat, family);
    {
        std::lock_guard lock(m_residue_mutex);
        if (auto it = m_residue.find(key); it != m_residue.end()) {
            return *it->second;
        }
    }
    // Computed outside the lock; a racing duplicate is discarded below.
    auto value = std::make_shared<const ResidueSeries>(is_half_sum(stat) ? half_sum_residue(stat, m_order, family)
                                                                         : base_residue(stat, m_order, family));
    std::lock_guard lock(m_residue_mutex);
    auto [it, inserted] = m_residue.try_emplace(key, std::move(value));
    return *it->second;
}

Report run_claim(const Claim &claim, SeriesContext &ctx)
{
    Report report = std::visit(
        [&](const auto &p) -> Report {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, ProgressionParams>) {
                if (p.modulus < 2u) {
                    return check_progression(ctx.exact(p.stat), p.step, p.residue, p.modulus);
                }
                return check_progression(ctx.residue(p.stat, p.modulus), p.step, p.residue, p.modulus);
            } else if constexpr (std::is_same_v<P, RelationParams>) {
                return check_relation(ctx.residue(p.stat, p.modulus), {p.outer_step, p.outer_residue},
                                      {p.inner_step, p.inner_residue}, p.factor, p.modulus);
            } else if constexpr (std::is_same_v<P, NonsquareParams>) {
                const std::uint64_t m = std::uint64_t(1) << (2u * p.k + 1u);
                return check_nonsquare(ctx.residue(Statistic::some_bar, m), p.k, m);
            } else {
                const auto inst = p.build(ctx);
                const auto upto = std::min(inst.lhs.order(), inst.rhs.order());
                if (p.modulus) {
                    return check_congruent(inst.lhs, inst.rhs, Integer(static_cast<unsigned long>(*p.modulus)), upto);
                }
                return check_exact(inst.lhs, inst.rhs, upto);
            }
        },
        claim.params);
    report.claim_id = claim.id;
    report.anchor = claim.anchor;
    report.kind = claim.kind;
    if (claim.kind == ClaimKind::informational) {
        report.status = Status::informational;
    }
    return report;
}

const Claim &find_claim(std::string_view id)
{
    const auto &all = builtin_claims();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Claim &c) { return c.id == id; });
    if (it == all.end()) {
        throw UnknownClaimError(std::string(id));
    }
    return *it;
}

std::vector<Report> run_all(std::size_t order, std::span<const std::string> selection, unsigned jobs)
{
    const auto &all = builtin_claims();
    std::vector<std::size_t> picked;
    if (selection.empty()) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            picked.push_back(i);
        }
    } else {
        for (const auto &id : selection) {
            const auto &c = find_claim(id);
            picked.push_back(static_cast<std::size_t>(&c - all.data()));
        }
        std::sort(picked.begin(), picked.end());
        picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    }

    SeriesContext ctx(order);
    std::vector<Report> reports(picked.size());
    std::vector<std::exception_ptr> errors(picked.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < picked.size(); i = next++) {
            try {
                reports[i] = run_claim(all[picked[i]], ctx);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const auto n_threads = std::clamp<std::size_t>(jobs, 1u, std::max<std::size_t>(picked.size(), 1u));
    if (n_threads == 1u) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return reports;
}

} // namespace opsome::verify
