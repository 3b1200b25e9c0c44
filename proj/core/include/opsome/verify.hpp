#ifndef OPSOME_VERIFY_HPP
#define OPSOME_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <opsome/residue_series.hpp>
#include <opsome/series.hpp>

namespace opsome::verify
{

enum class ClaimKind { progression, relation, exact_identity, nonsquare, informational };
enum class Status { pass, fail, informational };

// The partition statistic a coefficient claim talks about.
enum class Statistic { some_bar, overline_p, some, s_odd, s_even };

std::string_view to_string(ClaimKind k);
std::string_view to_string(Status s);
std::string_view to_string(Statistic s);
std::optional<ClaimKind> parse_claim_kind(std::string_view s);
std::optional<Status> parse_status(std::string_view s);

// stat(step*n + residue) == 0 (mod modulus).
struct ProgressionParams {
    Statistic stat;
    std::uint64_t step;
    std::uint64_t residue;
    std::uint64_t modulus;
};

// stat(outer_step*n + outer_residue) - factor * stat(inner_step*n + inner_residue) == 0 (mod modulus).
struct RelationParams {
    Statistic stat;
    std::uint64_t outer_step;
    std::uint64_t outer_residue;
    std::uint64_t inner_step;
    std::uint64_t inner_residue;
    std::int64_t factor;
    std::uint64_t modulus;
};

// SOME-bar(4^{k-1} n) == 0 (mod 2^{2k+1}) for every n that is not a square.
struct NonsquareParams {
    unsigned k;
};

class SeriesContext;

// Both sides of an identity, already truncated to the order compared.
struct IdentityInstance {
    Series lhs;
    Series rhs;
};

// lhs == rhs, or lhs == rhs (mod modulus) when a modulus is given.
struct IdentityParams {
    std::function<IdentityInstance(SeriesContext &)> build;
    std::optional<std::uint64_t> modulus;
};

using ClaimParams = std::variant<ProgressionParams, RelationParams, NonsquareParams, IdentityParams>;

struct Claim {
    std::string id;
    ClaimKind kind;
    std::string anchor;
    std::string statement;
    ClaimParams params;
};

struct Violation {
    std::uint64_t n;
    // Residue of the checked quantity, or lhs - rhs for exact identities.
    Integer value;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct Report {
    std::string claim_id;
    std::string anchor;
    ClaimKind kind = ClaimKind::progression;
    std::size_t order = 0;
    std::uint64_t instances = 0;
    std::vector<Violation> violations;
    Status status = Status::pass;

    friend bool operator==(const Report &, const Report &) = default;
};

// Pass iff no violations; a check that covered zero instances is reported
// as informational rather than as a vacuous pass.
Status status_for(std::uint64_t instances, std::size_t violation_count);

// The check_* functions only fill order, instances, violations and status.
// Residue overloads require the claim modulus to divide the series modulus.
Report check_progression(const Series &f, std::uint64_t step, std::uint64_t residue, std::uint64_t modulus);
Report check_progression(const ResidueSeries &f, std::uint64_t step, std::uint64_t residue, std::uint64_t modulus);

Report check_relation(const Series &f, std::pair<std::uint64_t, std::uint64_t> outer,
                      std::pair<std::uint64_t, std::uint64_t> inner, std::int64_t factor, std::uint64_t modulus);
Report check_relation(const ResidueSeries &f, std::pair<std::uint64_t, std::uint64_t> outer,
                      std::pair<std::uint64_t, std::uint64_t> inner, std::int64_t factor, std::uint64_t modulus);

// k in {1, 2, 3, 4}; n = 0 is a square and therefore exempt.
Report check_nonsquare(const Series &f, unsigned k, std::uint64_t modulus);
Report check_nonsquare(const ResidueSeries &f, unsigned k, std::uint64_t modulus);

Report check_exact(const Series &lhs, const Series &rhs, std::size_t upto);
Report check_congruent(const Series &lhs, const Series &rhs, const Integer &modulus, std::size_t upto);

bool is_perfect_square(std::uint64_t n);

// Lazily computed, shared series for one verification order. Every accessor
// is safe to call from several threads; values are computed once.
class SeriesContext
{
public:
    explicit SeriesContext(std::size_t order);

    std::size_t order() const noexcept
    {
        return m_order;
    }

    // Exact series of the statistic at the context order.
    const Series &exact(Statistic stat);
    // The statistic reduced modulo some multiple of `modulus`, computed
    // along the residue route. Powers of two up to 2^11 share one 2^12 family.
    const ResidueSeries &residue(Statistic stat, std::uint64_t modulus);

private:
    struct Slot {
        std::once_flag once;
        std::unique_ptr<Series> value;
    };

    std::size_t m_order;
    std::map<Statistic, Slot> m_exact;
    std::mutex m_residue_mutex;
    std::map<std::pair<Statistic, std::uint64_t>, std::shared_ptr<const ResidueSeries>> m_residue;
};

class UnknownClaimError : public std::invalid_argument
{
public:
    explicit UnknownClaimError(const std::string &id) : std::invalid_argument("unknown claim id: " + id), m_id(id) {}
    const std::string &id() const noexcept
    {
        return m_id;
    }

private:
    std::string m_id;
};

// The registry, in its fixed order. Ids are unique.
const std::vector<Claim> &builtin_claims();
const Claim &find_claim(std::string_view id);

// Deliberately false statements used to show that checks can fail.
std::vector<Claim> negative_controls();

Report run_claim(const Claim &claim, SeriesContext &ctx);

// Runs the selected claims (all when empty) on `jobs` worker threads.
// Reports come back in registry order regardless of selection order or
// job count; duplicate ids are run once. Throws UnknownClaimError.
std::vector<Report> run_all(std::size_t order, std::span<const std::string> selection = {}, unsigned jobs = 1);

} // namespace opsome::verify

#endif
