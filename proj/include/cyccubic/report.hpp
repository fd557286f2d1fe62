#ifndef CYCCUBIC_REPORT_HPP
#define CYCCUBIC_REPORT_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyccubic/galois_module.hpp"

namespace cyccubic {

/// Everything the pipeline computes for one parameter, in serializable form.
struct Report {
    BigInt n1, n2;
    BigInt delta;
    BigInt d, e, c, m;
    std::string tag;
    BigInt conductor, discriminant;
    std::array<Rat, 3> phi, psi; // power-basis coordinates
    BigInt u, r;
    BigInt a0, a1;
    std::optional<int> epsilon;
    std::array<Rat, 3> alpha_power;  // over {1, rho, rho^2}
    std::array<Rat, 3> alpha_mixed;  // over {1, rho, rho'}
    std::string structure;
    Certificate certificate;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Run the full pipeline for one parameter. Throws on invalid input or
/// internal inconsistency; certificate flags record verification results.
Report build_report(const BigInt& n1, const BigInt& n2);

nlohmann::json report_to_json(const Report& rep);
Report report_from_json(const nlohmann::json& j);

std::string report_to_text(const Report& rep);

/// CSV header / row in the fixture column layout plus certificate columns.
std::string report_csv_header();
std::string report_to_csv(const Report& rep);

struct FixtureRow {
    BigInt n1, n2;
    std::string dl_factored;   // discriminant, e.g. "3^4*7^2"
    std::string tag;
    std::string delta_factored;
    BigInt a0, a1;
    std::array<Rat, 3> alpha_mixed; // constant, rho, rho' coordinates
};

/// The 46 embedded reference rows as CSV text.
const char* embedded_fixture_csv();

/// Parse fixture CSV (header n1,n2,DL,case,delta,a0,a1,alpha_c,alpha_rho,
/// alpha_rhoprime). Throws precondition_error on malformed input.
std::vector<FixtureRow> parse_fixture_csv(const std::string& text);

/// Check one fixture row: recomputed invariants and case must match, the
/// (a0, a1) pair must be associate-equivalent to the computed one with the
/// right norm and divide A_n, alpha rebuilt from the fixture's own pair must
/// match the fixture coordinates exactly, and the fixture alpha must pass
/// the structure certificate. Returns a list of failure descriptions
/// (empty = pass).
std::vector<std::string> verify_fixture_row(const FixtureRow& row);

struct ComputeOptions {
    BigInt n1, n2;
    std::string format = "text"; // text | json | csv
};
struct TableOptions {
    BigInt n2 = 11, n1_min = -10, n1_max = 10;
    unsigned jobs = 0; // 0 = hardware concurrency
    std::string format = "csv";
};
struct VerifyOptions {
    std::string fixtures_path; // empty = embedded
};
struct SelftestOptions {
    BigInt max_n1 = 50, max_n2 = 50;
    unsigned jobs = 0;
};

// Exit codes: 0 ok, 1 verification/test failure, 2 invalid input,
// 3 internal inconsistency.
int run_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err);
int run_table(const TableOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err);

} // namespace cyccubic

#endif
