#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "cli.hpp"

using namespace opsome;
using namespace opsome::cli;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<const char *> args)
{
    args.insert(args.begin(), "opsome");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("format parsing")
{
    REQUIRE(parse_format("json") == OutputFormat::json);
    REQUIRE(parse_format("csv") == OutputFormat::csv);
    REQUIRE(parse_format("text") == OutputFormat::text);
    REQUIRE_FALSE(parse_format("xml").has_value());
}

TEST_CASE("table output")
{
    const auto csv = cmd_table(4, OutputFormat::csv);
    REQUIRE(csv.exit_code == exit_ok);
    REQUIRE(csv.output == "n,pbar,some_bar,s_odd,s_even\n"
                          "0,1,0,0,0\n"
                          "1,2,2,2,0\n"
                          "2,4,0,4,4\n"
                          "3,8,8,16,8\n"
                          "4,14,8,32,24\n");

    const auto j = nlohmann::json::parse(cmd_table(3, OutputFormat::json).output);
    REQUIRE(j.at("rows").size() == 4u);
    REQUIRE(j["rows"][3]["s_odd"] == 16);
    REQUIRE(j["rows"][3]["s_even"] == 8);

    const auto text = cmd_table(2, OutputFormat::text).output;
    REQUIRE(text.find("some_bar") != std::string::npos);

    // Large values fall back to strings.
    const auto big = nlohmann::json::parse(cmd_table(400, OutputFormat::json).output);
    REQUIRE(big["rows"][400]["pbar"].is_string());
    REQUIRE(integer_from_json(big["rows"][400]["pbar"]) == overline_p_series(400)[400]);
}

TEST_CASE("integer JSON encoding")
{
    REQUIRE(integer_to_json(Integer(-7)) == -7);
    const Integer huge("123456789012345678901234567890");
    REQUIRE(integer_to_json(huge) == "123456789012345678901234567890");
    REQUIRE(integer_from_json(integer_to_json(huge)) == huge);
    REQUIRE(integer_from_json(nlohmann::json(42)) == 42);
    REQUIRE_THROWS_AS(integer_from_json(nlohmann::json("12x")), std::invalid_argument);
}

TEST_CASE("verify JSON round-trips through report_from_json")
{
    const std::vector<std::string> sel{"eq2", "eq23-as-stated", "eq27"};
    const auto res = cmd_verify(1024, sel, OutputFormat::json);
    REQUIRE(res.exit_code == exit_ok);
    const auto j = nlohmann::json::parse(res.output);
    REQUIRE(j.at("order") == 1024);
    REQUIRE(j.at("exit_code") == 0);
    const auto reports = verify::run_all(1024, sel);
    REQUIRE(j.at("reports").size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        REQUIRE(report_from_json(j["reports"][i]) == reports[i]);
        REQUIRE(report_to_json(reports[i]) == j["reports"][i]);
    }
    REQUIRE(j["reports"][1]["status"] == "informational");
    REQUIRE(j["reports"][2]["kind"] == "exact-identity");

    auto broken = j["reports"][0];
    broken["status"] = "ok";
    REQUIRE_THROWS_AS(report_from_json(broken), std::invalid_argument);
}

TEST_CASE("verify CSV")
{
    const std::vector<std::string> sel{"eq2"};
    const auto res = cmd_verify(256, sel, OutputFormat::csv);
    std::istringstream lines(res.output);
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    REQUIRE(header == "claim_id,kind,order,instances,status,violation_count,first_violation_n,anchor");
    REQUIRE(row.rfind("eq2,progression,256,64,pass,0,,", 0) == 0u);
}

TEST_CASE("exit codes")
{
    using verify::Report;
    using verify::Status;
    Report pass;
    Report info;
    info.kind = verify::ClaimKind::informational;
    info.status = Status::informational;
    // A real claim that covered no instances has not passed.
    Report empty;
    empty.status = Status::informational;
    Report fail;
    fail.status = Status::fail;
    REQUIRE(exit_code_for({pass, info}) == exit_ok);
    REQUIRE(exit_code_for({pass, fail, info}) == exit_violation);
    REQUIRE(exit_code_for({}) == exit_ok);
    REQUIRE(exit_code_for({pass, empty}) == exit_violation);

    REQUIRE(cmd_verify(63, {}, OutputFormat::text).exit_code == exit_usage);
    REQUIRE(cmd_verify(256, {"nope"}, OutputFormat::text).exit_code == exit_usage);
    REQUIRE(cmd_oracle_check(oracle_cap + 1u, OutputFormat::text).exit_code == exit_usage);
    REQUIRE(cmd_oracle_check(12, OutputFormat::text).exit_code == exit_ok);
}

TEST_CASE("command line parsing")
{
    REQUIRE(invoke({}).code == exit_usage);
    REQUIRE(invoke({"bogus"}).code == exit_usage);
    REQUIRE(invoke({"--help"}).code == exit_ok);
    REQUIRE(invoke({"table"}).code == exit_usage);
    REQUIRE(invoke({"table", "--max-n", "3", "--format", "xml"}).code == exit_usage);
    REQUIRE(invoke({"verify", "--order", "256", "--jobs", "0"}).code == exit_usage);

    const auto t = invoke({"table", "--max-n", "3", "--format", "csv"});
    REQUIRE(t.code == exit_ok);
    REQUIRE(t.out == cmd_table(3, OutputFormat::csv).output);

    const auto unknown = invoke({"verify", "--order", "256", "--claim", "nope"});
    REQUIRE(unknown.code == exit_usage);
    REQUIRE(unknown.err.find("nope") != std::string::npos);

    const auto c = invoke({"claims", "--format", "json"});
    REQUIRE(c.code == exit_ok);
    REQUIRE(nlohmann::json::parse(c.out).at("claims").size() == verify::builtin_claims().size());
}

TEST_CASE("verify output is independent of --jobs")
{
    const auto a = invoke({"verify", "--order", "512", "--format", "json", "--jobs", "1"});
    const auto b = invoke({"verify", "--order", "512", "--format", "json", "--jobs", "4"});
    REQUIRE(a.code == exit_ok);
    REQUIRE(a.out == b.out);
}
