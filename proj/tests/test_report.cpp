#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cyccubic/report.hpp"

using namespace cyccubic;

TEST_CASE("build_report reference values")
{
    const Report rep = build_report(6, 11);
    CHECK(rep.tag == "3i");
    CHECK(rep.a0 == 5);
    CHECK(rep.a1 == 1);
    CHECK(rep.structure == "WILD_SUM");
    CHECK(!rep.epsilon.has_value());
    CHECK(rep.alpha_mixed
          == std::array<Rat, 3>{make_rat(-4, 7), make_rat(55, 21), make_rat(11, 21)});
    CHECK(rep.certificate.all_ok());

    const Report tame = build_report(1, 2);
    CHECK(tame.structure == "TAME_FREE_RANK1");
    CHECK(tame.epsilon == 1);
    CHECK(tame.alpha_mixed == std::array<Rat, 3>{Rat(0), Rat(2), Rat(0)});
}

TEST_CASE("JSON round-trip")
{
    for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{
             {1, 2}, {6, 11}, {3, 7}, {-5, 7}, {0, 1}}) {
        const Report rep = build_report(n1, n2);
        const nlohmann::json j = report_to_json(rep);
        const nlohmann::json reparsed = nlohmann::json::parse(j.dump(2));
        CHECK(report_from_json(reparsed) == rep);
        // Schema: exactly the documented top-level keys.
        CHECK(j.contains("input"));
        CHECK(j.contains("invariants"));
        CHECK(j.contains("integral_basis"));
        CHECK(j.contains("generator"));
        CHECK(j.contains("certificate"));
        CHECK(j.size() == 5);
    }
}

TEST_CASE("embedded fixtures parse to the expected row counts")
{
    const auto rows = parse_fixture_csv(embedded_fixture_csv());
    REQUIRE(rows.size() == 46);
    std::map<int, int> per_n2;
    for (const auto& row : rows)
        ++per_n2[row.n2.convert_to<int>()];
    CHECK(per_n2[2] == 2);
    CHECK(per_n2[3] == 4);
    CHECK(per_n2[5] == 8);
    CHECK(per_n2[7] == 12);
    CHECK(per_n2[11] == 20);
}

TEST_CASE("fixture verification: spot rows and the associate-flexible row")
{
    const auto rows = parse_fixture_csv(embedded_fixture_csv());
    for (const auto& row : rows) {
        if ((row.n1 == 6 && row.n2 == 11) || (row.n1 == -5 && row.n2 == 7)
            || (row.n1 == 3 && row.n2 == 7) || (row.n1 == 1 && row.n2 == 2)) {
            CHECK(verify_fixture_row(row).empty());
        }
    }
}

TEST_CASE("fixture fault injection is detected and named")
{
    auto rows = parse_fixture_csv(embedded_fixture_csv());
    {
        FixtureRow bad = rows[0];
        bad.a0 += 1;
        const auto fails = verify_fixture_row(bad);
        REQUIRE(!fails.empty());
        CHECK(fails.front().find("pair") != std::string::npos);
    }
    {
        FixtureRow bad = rows[0];
        bad.alpha_mixed[1] += make_rat(1, 3); // breaks the alpha comparison
        const auto fails = verify_fixture_row(bad);
        REQUIRE(!fails.empty());
        CHECK(fails.front().find("alpha") != std::string::npos);
    }
    {
        FixtureRow bad = rows[0];
        bad.tag = bad.tag == "1" ? "2" : "1";
        const auto fails = verify_fixture_row(bad);
        REQUIRE(!fails.empty());
        CHECK(fails.front().find("case") != std::string::npos);
    }
}

TEST_CASE("run_verify on the embedded fixtures")
{
    std::ostringstream out, err;
    CHECK(run_verify({}, out, err) == 0);
    CHECK(out.str().find("46/46") != std::string::npos);
}

TEST_CASE("run_compute exit codes and formats")
{
    {
        std::ostringstream out, err;
        ComputeOptions opt{-3, 2, "text"};
        CHECK(run_compute(opt, out, err) == 2); // reducible
        CHECK(err.str().find("reducible") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        ComputeOptions opt{6, 11, "json"};
        CHECK(run_compute(opt, out, err) == 0);
        const auto j = nlohmann::json::parse(out.str());
        CHECK(j["generator"]["a0"] == "5");
        CHECK(j["generator"]["structure"] == "WILD_SUM");
    }
    {
        std::ostringstream out, err;
        ComputeOptions opt{0, 1, "text"};
        CHECK(run_compute(opt, out, err) == 0);
        CHECK(out.str().find("WILD_SUM") != std::string::npos);
    }
}

TEST_CASE("run_table output is deterministic across job counts")
{
    TableOptions opt;
    opt.n2 = 11;
    opt.n1_min = -10;
    opt.n1_max = 10;
    std::string outputs[3];
    unsigned jobs[3] = {1, 4, 7};
    for (int i = 0; i < 3; ++i) {
        std::ostringstream out, err;
        opt.jobs = jobs[i];
        CHECK(run_table(opt, out, err) == 0);
        outputs[i] = out.str();
    }
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[0] == outputs[2]);
    // 20 data rows + header.
    int lines = 0;
    for (char ch : outputs[0])
        if (ch == '\n')
            ++lines;
    CHECK(lines == 21);
}

TEST_CASE("run_table marks reducible pairs")
{
    TableOptions opt;
    opt.n2 = 2;
    opt.n1_min = -3;
    opt.n1_max = 1;
    opt.jobs = 1;
    std::ostringstream out, err;
    CHECK(run_table(opt, out, err) == 0);
    CHECK(out.str().find("reducible") != std::string::npos); // n = -3/2 row
}

TEST_CASE("run_selftest on a small box")
{
    SelftestOptions opt;
    opt.max_n1 = 8;
    opt.max_n2 = 6;
    opt.jobs = 2;
    std::ostringstream out, err;
    CHECK(run_selftest(opt, out, err) == 0);
    CHECK(out.str().find("case 1:") != std::string::npos);
    CHECK(err.str().empty());
}

TEST_CASE("external fixture file loading and failure exit code")
{
    // Tampered copy written to a temp file must exit 1.
    std::string text = embedded_fixture_csv();
    const auto pos = text.find("\n-1,2,");
    REQUIRE(pos != std::string::npos);
    text.replace(pos + 1, 5, "-1,2,9"); // corrupt the DL column start
    const std::string path = "tampered_fixtures_test.csv";
    {
        std::ofstream f(path);
        f << text;
    }
    std::ostringstream out, err;
    VerifyOptions opt;
    opt.fixtures_path = path;
    CHECK(run_verify(opt, out, err) == 1);
    CHECK(out.str().find("(-1,2)") != std::string::npos);
    std::remove(path.c_str());

    std::ostringstream out2, err2;
    VerifyOptions missing;
    missing.fixtures_path = "does_not_exist.csv";
    CHECK(run_verify(missing, out2, err2) == 2);
}
