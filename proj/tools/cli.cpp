#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace opsome::cli
{

namespace
{

using nlohmann::json;

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string dump(const json &j)
{
    return j.dump(2) + "\n";
}

std::string format_violations(const verify::Report &r, std::size_t limit)
{
    std::ostringstream os;
    const auto shown = std::min(limit, r.violations.size());
    for (std::size_t i = 0; i < shown; ++i) {
        os << (i == 0u ? "" : ", ") << "n=" << r.violations[i].n << " value=" << r.violations[i].value;
    }
    if (r.violations.size() > shown) {
        os << ", ...";
    }
    return os.str();
}

std::string status_label(verify::Status s)
{
    switch (s) {
        case verify::Status::pass:
            return "PASS";
        case verify::Status::fail:
            return "FAIL";
        case verify::Status::informational:
            return "INFO";
    }
    return "?";
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view s)
{
    if (s == "text") {
        return OutputFormat::text;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    if (s == "csv") {
        return OutputFormat::csv;
    }
    return std::nullopt;
}

json integer_to_json(const Integer &v)
{
    if (v.fits_slong_p()) {
        return json(static_cast<std::int64_t>(v.get_si()));
    }
    return json(v.get_str());
}

Integer integer_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        return Integer(j.get<std::string>());
    }
    throw std::invalid_argument("expected an integer or a decimal string");
}

json report_to_json(const verify::Report &r)
{
    json violations = json::array();
    for (const auto &v : r.violations) {
        violations.push_back({{"n", v.n}, {"value", integer_to_json(v.value)}});
    }
    return {{"claim_id", r.claim_id},
            {"anchor", r.anchor},
            {"kind", std::string(verify::to_string(r.kind))},
            {"order", r.order},
            {"instances", r.instances},
            {"status", std::string(verify::to_string(r.status))},
            {"violations", std::move(violations)}};
}

verify::Report report_from_json(const json &j)
{
    verify::Report r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    const auto kind = verify::parse_claim_kind(j.at("kind").get<std::string>());
    const auto status = verify::parse_status(j.at("status").get<std::string>());
    if (!kind || !status) {
        throw std::invalid_argument("report_from_json: unknown kind or status");
    }
    r.kind = *kind;
    r.status = *status;
    r.order = j.at("order").get<std::size_t>();
    r.instances = j.at("instances").get<std::uint64_t>();
    for (const auto &v : j.at("violations")) {
        r.violations.push_back({v.at("n").get<std::uint64_t>(), integer_from_json(v.at("value"))});
    }
    return r;
}

int exit_code_for(const std::vector<verify::Report> &reports)
{
    const bool failed = std::any_of(reports.begin(), reports.end(), [](const verify::Report &r) {
        return r.kind != verify::ClaimKind::informational && r.status != verify::Status::pass;
    });
    return failed ? exit_violation : exit_ok;
}

std::string render_table(const std::vector<StatRecord> &rows, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            json arr = json::array();
            for (const auto &r : rows) {
                arr.push_back({{"n", r.n},
                               {"pbar", integer_to_json(r.pbar)},
                               {"some_bar", integer_to_json(r.some_bar)},
                               {"s_odd", integer_to_json(r.s_odd)},
                               {"s_even", integer_to_json(r.s_even)}});
            }
            return dump(json{{"rows", std::move(arr)}});
        }
        case OutputFormat::csv:
            os << "n,pbar,some_bar,s_odd,s_even\n";
            for (const auto &r : rows) {
                os << r.n << ',' << r.pbar << ',' << r.some_bar << ',' << r.s_odd << ',' << r.s_even << '\n';
            }
            return os.str();
        case OutputFormat::text:
            break;
    }
    std::size_t w = 8;
    for (const auto &r : rows) {
        w = std::max({w, r.pbar.get_str().size(), r.s_odd.get_str().size(), r.s_even.get_str().size(),
                      r.some_bar.get_str().size()});
    }
    os << std::setw(6) << "n" << ' ' << std::setw(static_cast<int>(w)) << "pbar" << ' '
       << std::setw(static_cast<int>(w)) << "some_bar" << ' ' << std::setw(static_cast<int>(w)) << "s_odd" << ' '
       << std::setw(static_cast<int>(w)) << "s_even" << '\n';
    for (const auto &r : rows) {
        os << std::setw(6) << r.n << ' ' << std::setw(static_cast<int>(w)) << r.pbar.get_str() << ' '
           << std::setw(static_cast<int>(w)) << r.some_bar.get_str() << ' ' << std::setw(static_cast<int>(w))
           << r.s_odd.get_str() << ' ' << std::setw(static_cast<int>(w)) << r.s_even.get_str() << '\n';
    }
    return os.str();
}

std::string render_reports(const std::vector<verify::Report> &reports, std::size_t order, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            json arr = json::array();
            for (const auto &r : reports) {
                arr.push_back(report_to_json(r));
            }
            return dump(json{{"order", order}, {"exit_code", exit_code_for(reports)}, {"reports", std::move(arr)}});
        }
        case OutputFormat::csv:
            os << "claim_id,kind,order,instances,status,violation_count,first_violation_n,anchor\n";
            for (const auto &r : reports) {
                os << csv_field(r.claim_id) << ',' << verify::to_string(r.kind) << ',' << r.order << ','
                   << r.instances << ',' << verify::to_string(r.status) << ',' << r.violations.size() << ',';
                if (!r.violations.empty()) {
                    os << r.violations.front().n;
                }
                os << ',' << csv_field(r.anchor) << '\n';
            }
            return os.str();
        case OutputFormat::text:
            break;
    }
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t info = 0;
    for (const auto &r : reports) {
        os << status_label(r.status) << "  " << std::left << std::setw(18) << r.claim_id << std::right
           << std::setw(7) << r.instances << " instances  order " << r.order << "  " << r.anchor;
        if (!r.violations.empty()) {
            os << "\n      " << r.violations.size() << " violation(s): " << format_violations(r, 5);
        }
        os << '\n';
        switch (r.status) {
            case verify::Status::pass:
                ++pass;
                break;
            case verify::Status::fail:
                ++fail;
                break;
            case verify::Status::informational:
                ++info;
                break;
        }
    }
    os << "summary: " << reports.size() << " claims, " << pass << " pass, " << fail << " fail, " << info
       << " informational (finite prefix up to order " << order << ")\n";
    return os.str();
}

CommandResult cmd_table(std::size_t max_n, OutputFormat format)
{
    return {render_table(stat_table(max_n), format), {}, exit_ok};
}

CommandResult cmd_verify(std::size_t order, const std::vector<std::string> &selection, OutputFormat format,
                         unsigned jobs)
{
    if (order < min_verify_order) {
        return {{}, "verify: --order must be at least " + std::to_string(min_verify_order), exit_usage};
    }
    try {
        const auto reports = verify::run_all(order, selection, jobs);
        return {render_reports(reports, order, format), {}, exit_code_for(reports)};
    } catch (const verify::UnknownClaimError &e) {
        return {{}, std::string("verify: ") + e.what(), exit_usage};
    }
}

CommandResult cmd_oracle_check(unsigned max_n, OutputFormat format)
{
    if (max_n > oracle_cap) {
        return {{},
                "oracle-check: --max-n " + std::to_string(max_n) + " exceeds the enumeration cap of "
                    + std::to_string(oracle_cap),
                exit_usage};
    }
    const auto pbar = overline_p_series(max_n);
    const auto gf = some_bar_series(max_n);
    const auto closed = some_bar_series_closed(max_n);
    const auto conv = some_bar_convolution(max_n);

    struct Row {
        unsigned n;
        OracleStats oracle;
        bool some_ok;
        bool pbar_ok;
        bool s_b_ok;
    };
    std::vector<Row> rows;
    bool all_ok = true;
    for (unsigned n = 0; n <= max_n; ++n) {
        auto st = oracle_stats(n);
        const bool some_ok = gf[n] == st.some_bar && closed[n] == st.some_bar && conv[n] == st.some_bar;
        const bool pbar_ok = pbar[n] == st.pbar;
        bool s_b_ok = true;
        for (unsigned b = 1; b <= n; ++b) {
            s_b_ok = s_b_ok && s_b_formula(b, n, pbar) == st.s_b[b];
        }
        all_ok = all_ok && some_ok && pbar_ok && s_b_ok;
        rows.push_back({n, std::move(st), some_ok, pbar_ok, s_b_ok});
    }

    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            json arr = json::array();
            for (const auto &r : rows) {
                arr.push_back({{"n", r.n},
                               {"pbar", integer_to_json(r.oracle.pbar)},
                               {"some_bar", integer_to_json(r.oracle.some_bar)},
                               {"some_bar_routes_agree", r.some_ok},
                               {"pbar_agrees", r.pbar_ok},
                               {"s_b_agrees", r.s_b_ok}});
            }
            os << dump(json{{"max_n", max_n}, {"status", all_ok ? "pass" : "fail"}, {"rows", std::move(arr)}});
            break;
        }
        case OutputFormat::csv:
            os << "n,pbar,some_bar,some_bar_routes_agree,pbar_agrees,s_b_agrees\n";
            for (const auto &r : rows) {
                os << r.n << ',' << r.oracle.pbar << ',' << r.oracle.some_bar << ',' << r.some_ok << ','
                   << r.pbar_ok << ',' << r.s_b_ok << '\n';
            }
            break;
        case OutputFormat::text:
            for (const auto &r : rows) {
                os << (r.some_ok && r.pbar_ok && r.s_b_ok ? "ok  " : "BAD ") << "n=" << std::setw(2) << r.n
                   << "  pbar=" << r.oracle.pbar << "  some_bar=" << r.oracle.some_bar << '\n';
            }
            os << (all_ok ? "pass" : "FAIL")
               << ": enumeration, generating function, closed form, convolution and S_b formula agree for n <= "
               << max_n << '\n';
            break;
    }
    return {os.str(), {}, all_ok ? exit_ok : exit_violation};
}

CommandResult cmd_claims(OutputFormat format)
{
    const auto &claims = verify::builtin_claims();
    std::ostringstream os;
    switch (format) {
        case OutputFormat::json: {
            json arr = json::array();
            for (const auto &c : claims) {
                arr.push_back({{"claim_id", c.id},
                               {"kind", std::string(verify::to_string(c.kind))},
                               {"anchor", c.anchor},
                               {"statement", c.statement}});
            }
            os << dump(json{{"claims", std::move(arr)}});
            break;
        }
        case OutputFormat::csv:
            os << "claim_id,kind,anchor,statement\n";
            for (const auto &c : claims) {
                os << csv_field(c.id) << ',' << verify::to_string(c.kind) << ',' << csv_field(c.anchor) << ','
                   << csv_field(c.statement) << '\n';
            }
            break;
        case OutputFormat::text:
            for (const auto &c : claims) {
                os << std::left << std::setw(18) << c.id << std::setw(15) << verify::to_string(c.kind)
                   << c.statement << "  [" << c.anchor << "]\n";
            }
            break;
    }
    return {os.str(), {}, exit_ok};
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Overpartition SOME statistics: tables, oracle checks and congruence verification", "opsome"};
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string format_name = "text";
    const auto formats = CLI::IsMember({"text", "json", "csv"});

    auto *table = app.add_subcommand("table", "Print pbar, SOME-bar, S_o and S_e for n = 0..max-n");
    std::size_t table_max = 0;
    table->add_option("--max-n", table_max, "Largest n")->required();
    table->add_option("--format", format_name, "Output format")->check(formats);

    auto *verify_cmd = app.add_subcommand("verify", "Check registered congruences and identities");
    std::size_t order = 4096;
    std::vector<std::string> selection;
    unsigned jobs = 1;
    verify_cmd->add_option("--order", order, "Truncation order N")->capture_default_str();
    verify_cmd->add_option("--claim", selection, "Claim id to run (repeatable; default: all)");
    verify_cmd->add_option("--format", format_name, "Output format")->check(formats);
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto *oracle = app.add_subcommand("oracle-check", "Compare every SOME-bar route against brute force");
    unsigned oracle_max = 0;
    oracle->add_option("--max-n", oracle_max, "Largest n (at most " + std::to_string(oracle_cap) + ")")->required();
    oracle->add_option("--format", format_name, "Output format")->check(formats);

    auto *claims = app.add_subcommand("claims", "List claim ids with their anchors");
    claims->add_option("--format", format_name, "Output format")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const auto format = *parse_format(format_name);
    CommandResult result;
    if (table->parsed()) {
        result = cmd_table(table_max, format);
    } else if (verify_cmd->parsed()) {
        result = cmd_verify(order, selection, format, jobs);
    } else if (oracle->parsed()) {
        result = cmd_oracle_check(oracle_max, format);
    } else if (claims->parsed()) {
        result = cmd_claims(format);
    } else {
        out << app.help();
        return exit_usage;
    }
    out << result.output;
    if (!result.error.empty()) {
        err << result.error << '\n';
    }
    return result.exit_code;
}

} // namespace opsome::cli
