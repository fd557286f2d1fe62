#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyccubic/report.hpp"

namespace {

/// Parse "n1/n2" or a plain integer "n1" (denominator 1).
bool parse_param(const std::string& text, cyccubic::BigInt& n1, cyccubic::BigInt& n2)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) {
            n1 = cyccubic::BigInt(text);
            n2 = 1;
        } else {
            n1 = cyccubic::BigInt(text.substr(0, slash));
            n2 = cyccubic::BigInt(text.substr(slash + 1));
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic cubic fields: invariants, integral bases, and "
                 "Galois-module generators, with exact verification"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Full report for one parameter n = n1/n2");
    std::string n_text;
    std::string n1_text, n2_text = "1";
    cyccubic::ComputeOptions copt;
    compute->add_option("--n", n_text, "parameter as n1/n2 (e.g. 6/11)");
    compute->add_option("--n1", n1_text, "numerator");
    compute->add_option("--n2", n2_text, "denominator (default 1)");
    compute->add_option("--format", copt.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // table
    auto* table = app.add_subcommand("table", "Sweep n1 for fixed n2, one row per field");
    cyccubic::TableOptions topt;
    std::string t_n2 = "11", t_min = "-10", t_max = "10";
    table->add_option("--n2", t_n2, "denominator (default 11)");
    table->add_option("--n1-min", t_min, "smallest n1 (default -10)");
    table->add_option("--n1-max", t_max, "largest n1 (default 10)");
    table->add_option("--jobs", topt.jobs, "worker threads (default: all cores)");
    table->add_option("--format", topt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Check fixture rows against recomputation");
    cyccubic::VerifyOptions vopt;
    verify->add_option("--fixtures", vopt.fixtures_path,
                       "fixture CSV path (default: embedded reference rows)");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Cross-module property sweep");
    cyccubic::SelftestOptions sopt;
    std::string s_n1 = "50", s_n2 = "50";
    selftest->add_option("--max-n1", s_n1, "|n1| bound (default 50)");
    selftest->add_option("--max-n2", s_n2, "n2 bound (default 50)");
    selftest->add_option("--jobs", sopt.jobs, "worker threads (default: all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            if (!n_text.empty()) {
                if (!parse_param(n_text, copt.n1, copt.n2)) {
                    std::cerr << "error: cannot parse --n value '" << n_text << "'\n";
                    return 2;
                }
            } else if (!n1_text.empty()) {
                try {
                    copt.n1 = cyccubic::BigInt(n1_text);
                    copt.n2 = cyccubic::BigInt(n2_text);
                } catch (const std::exception&) {
                    std::cerr << "error: cannot parse --n1/--n2 values\n";
                    return 2;
                }
            } else {
                std::cerr << "error: compute needs --n or --n1/--n2\n";
                return 2;
            }
            return cyccubic::run_compute(copt, std::cout, std::cerr);
        }
        if (table->parsed()) {
            topt.n2 = cyccubic::BigInt(t_n2);
            topt.n1_min = cyccubic::BigInt(t_min);
            topt.n1_max = cyccubic::BigInt(t_max);
            return cyccubic::run_table(topt, std::cout, std::cerr);
        }
        if (verify->parsed())
            return cyccubic::run_verify(vopt, std::cout, std::cerr);
        sopt.max_n1 = cyccubic::BigInt(s_n1);
        sopt.max_n2 = cyccubic::BigInt(s_n2);
        return cyccubic::run_selftest(sopt, std::cout, std::cerr);
    } catch (const cyccubic::internal_inconsistency_error& ex) {
        std::cerr << "internal inconsistency: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
