#include <opsome/verify.hpp>

#include <algorithm>
#include <array>
#include <string>

namespace opsome::verify
{

namespace
{

constexpr std::array<std::string_view, 5> kind_names{"progression", "relation", "exact-identity", "nonsquare",
                                                     "informational"};
constexpr std::array<std::string_view, 3> status_names{"pass", "fail", "informational"};
constexpr std::array<std::string_view, 5> stat_names{"some_bar", "overline_p", "some", "s_odd", "s_even"};

void require_progression(std::uint64_t step, std::uint64_t residue)
{
    if (step == 0u || residue >= step) {
        throw std::invalid_argument("progression needs 0 <= r < m, got m=" + std::to_string(step)
                                    + " r=" + std::to_string(residue));
    }
}

void require_modulus(std::uint64_t modulus)
{
    if (modulus == 0u) {
        throw std::invalid_argument("modulus must be positive");
    }
}

void require_divides(const ResidueSeries &f, std::uint64_t modulus)
{
    require_modulus(modulus);
    if (f.modulus() % modulus != 0u) {
        throw std::invalid_argument("claim modulus " + std::to_string(modulus) + " does not divide series modulus "
                                    + std::to_string(f.modulus()));
    }
}

// Coefficient accessors that return the residue in [0, M).
struct ExactCoeff {
    const Series &f;
    std::uint64_t modulus;

    std::size_t order() const
    {
        return f.order();
    }
    Integer operator()(std::size_t i) const
    {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(modulus));
        return r;
    }
};

struct ResidueCoeff {
    const ResidueSeries &f;
    std::uint64_t modulus;

    std::size_t order() const
    {
        return f.order();
    }
    Integer operator()(std::size_t i) const
    {
        return Integer(static_cast<unsigned long>(f[i] % modulus));
    }
};

Report finish(std::size_t order, std::uint64_t instances, std::vector<Violation> violations)
{
    Report r;
    r.order = order;
    r.instances = instances;
    r.status = status_for(instances, violations.size());
    r.violations = std::move(violations);
    return r;
}

template <typename Coeff>
Report progression_impl(const Coeff &c, std::uint64_t step, std::uint64_t residue)
{
    require_progression(step, residue);
    const auto order = c.order();
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    for (std::uint64_t n = 0; step * n + residue <= order; ++n) {
        ++instances;
        auto v = c(step * n + residue);
        if (sgn(v) != 0) {
            violations.push_back({n, std::move(v)});
        }
    }
    return finish(order, instances, std::move(violations));
}

template <typename Coeff>
Report relation_impl(const Coeff &c, std::pair<std::uint64_t, std::uint64_t> outer,
                     std::pair<std::uint64_t, std::uint64_t> inner, std::int64_t factor, std::uint64_t modulus)
{
    require_progression(outer.first, outer.second);
    require_progression(inner.first, inner.second);
    const auto order = c.order();
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    const Integer m(static_cast<unsigned long>(modulus));
    const Integer fac(static_cast<long>(factor));
    for (std::uint64_t n = 0;; ++n) {
        const auto a = outer.first * n + outer.second;
        const auto b = inner.first * n + inner.second;
        if (a > order || b > order) {
            break;
        }
        ++instances;
        Integer v = c(a) - fac * c(b);
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (sgn(v) != 0) {
            violations.push_back({n, std::move(v)});
        }
    }
    return finish(order, instances, std::move(violations));
}

template <typename Coeff>
Report nonsquare_impl(const Coeff &c, unsigned k)
{
    if (k < 1u || k > 4u) {
        throw std::invalid_argument("check_nonsquare: k must be in {1, 2, 3, 4}");
    }
    const std::uint64_t stride = std::uint64_t(1) << (2u * (k - 1u));
    const auto order = c.order();
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    for (std::uint64_t n = 1; stride * n <= order; ++n) {
        if (is_perfect_square(n)) {
            continue;
        }
        ++instances;
        auto v = c(stride * n);
        if (sgn(v) != 0) {
            violations.push_back({n, std::move(v)});
        }
    }
    return finish(order, instances, std::move(violations));
}

void require_upto(const Series &lhs, const Series &rhs, std::size_t upto)
{
    if (upto > lhs.order() || upto > rhs.order()) {
        throw std::invalid_argument("identity check order " + std::to_string(upto) + " exceeds operand orders "
                                    + std::to_string(lhs.order()) + "/" + std::to_string(rhs.order()));
    }
}

} // namespace

std::string_view to_string(ClaimKind k)
{
    return kind_names[static_cast<std::size_t>(k)];
}

std::string_view to_string(Status s)
{
    return status_names[static_cast<std::size_t>(s)];
}

std::string_view to_string(Statistic s)
{
    return stat_names[static_cast<std::size_t>(s)];
}

std::optional<ClaimKind> parse_claim_kind(std::string_view s)
{
    const auto it = std::find(kind_names.begin(), kind_names.end(), s);
    if (it == kind_names.end()) {
        return std::nullopt;
    }
    return static_cast<ClaimKind>(it - kind_names.begin());
}

std::optional<Status> parse_status(std::string_view s)
{
    const auto it = std::find(status_names.begin(), status_names.end(), s);
    if (it == status_names.end()) {
        return std::nullopt;
    }
    return static_cast<Status>(it - status_names.begin());
}

Status status_for(std::uint64_t instances, std::size_t violation_count)
{
    if (instances == 0u) {
        return Status::informational;
    }
    return violation_count == 0u ? Status::pass : Status::fail;
}

bool is_perfect_square(std::uint64_t n)
{
    Integer z(static_cast<unsigned long>(n));
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

Report check_progression(const Series &f, std::uint64_t step, std::uint64_t residue, std::uint64_t modulus)
{
    require_modulus(modulus);
    return progression_impl(ExactCoeff{f, modulus}, step, residue);
}

Report check_progression(const ResidueSeries &f, std::uint64_t step, std::uint64_t residue, std::uint64_t modulus)
{
    require_divides(f, modulus);
    return progression_impl(ResidueCoeff{f, modulus}, step, residue);
}

Report check_relation(const Series &f, std::pair<std::uint64_t, std::uint64_t> outer,
                      std::pair<std::uint64_t, std::uint64_t> inner, std::int64_t factor, std::uint64_t modulus)
{
    require_modulus(modulus);
    return relation_impl(ExactCoeff{f, modulus}, outer, inner, factor, modulus);
}

Report check_relation(const ResidueSeries &f, std::pair<std::uint64_t, std::uint64_t> outer,
                      std::pair<std::uint64_t, std::uint64_t> inner, std::int64_t factor, std::uint64_t modulus)
{
    require_divides(f, modulus);
    return relation_impl(ResidueCoeff{f, modulus}, outer, inner, factor, modulus);
}

Report check_nonsquare(const Series &f, unsigned k, std::uint64_t modulus)
{
    require_modulus(modulus);
    return nonsquare_impl(ExactCoeff{f, modulus}, k);
}

Report check_nonsquare(const ResidueSeries &f, unsigned k, std::uint64_t modulus)
{
    require_divides(f, modulus);
    return nonsquare_impl(ResidueCoeff{f, modulus}, k);
}

Report check_exact(const Series &lhs, const Series &rhs, std::size_t upto)
{
    require_upto(lhs, rhs, upto);
    std::vector<Violation> violations;
    for (std::size_t i = 0; i <= upto; ++i) {
        if (lhs[i] != rhs[i]) {
            violations.push_back({i, lhs[i] - rhs[i]});
        }
    }
    return finish(upto, upto + 1u, std::move(violations));
}

Report check_congruent(const Series &lhs, const Series &rhs, const Integer &modulus, std::size_t upto)
{
    if (modulus <= 0) {
        throw std::invalid_argument("check_congruent: modulus must be positive");
    }
    require_upto(lhs, rhs, upto);
    std::vector<Violation> violations;
    Integer d;
    for (std::size_t i = 0; i <= upto; ++i) {
        d = lhs[i] - rhs[i];
        mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
        if (sgn(d) != 0) {
            violations.push_back({i, d});
        }
    }
    return finish(upto, upto + 1u, std::move(violations));
}

} // namespace opsome::verify
