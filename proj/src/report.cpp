#include "cyccubic/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace cyccubic {

namespace {

std::string rat_str(const Rat& q)
{
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1)
        os << '/' << denominator(q);
    return os.str();
}

Rat rat_parse(const std::string& s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(BigInt(s));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

nlohmann::json rat_array(const std::array<Rat, 3>& coords)
{
    return {rat_str(coords[0]), rat_str(coords[1]), rat_str(coords[2])};
}

std::array<Rat, 3> rat_array_parse(const nlohmann::json& j)
{
    return {rat_parse(j.at(0).get<std::string>()),
            rat_parse(j.at(1).get<std::string>()),
            rat_parse(j.at(2).get<std::string>())};
}

std::string big_str(const BigInt& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

/// Render alpha over {1, rho, rho'} like the reference tables:
/// "55/21*rho + 11/21*rho' - 4/7".
std::string alpha_pretty(const std::array<Rat, 3>& mixed)
{
    std::ostringstream os;
    bool first = true;
    const char* names[3] = {"", "rho", "rho'"};
    for (int i : {1, 2, 0}) {
        const Rat& q = mixed[i];
        if (q == 0)
            continue;
        Rat aq = q < 0 ? Rat(-q) : q;
        if (first)
            os << (q < 0 ? "-" : "");
        else
            os << (q < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || aq != 1)
            os << rat_str(aq) << (i == 0 ? "" : "*");
        os << names[i];
    }
    if (first)
        os << '0';
    return os.str();
}

/// Run fn(i) for i in [0, count) on `jobs` threads; exceptions from workers
/// are collected and the first rethrown after joining.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<std::size_t>(jobs, count == 0 ? 1 : count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mtx;
    std::exception_ptr first_error;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (!first_error)
                        first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : workers)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace

Report build_report(const BigInt& n1, const BigInt& n2)
{
    const CubicField field(n1, n2);
    const FieldInvariants inv = classify(field);
    const IntegralBasis ib = basis(field, inv);
    const GeneratorResult gen = generator(field, inv, ib);

    Report rep;
    rep.n1 = field.n1();
    rep.n2 = field.n2();
    rep.delta = inv.delta;
    rep.d = inv.dec.d;
    rep.e = inv.dec.e;
    rep.c = inv.dec.c;
    rep.m = inv.m;
    rep.tag = tag_label(inv.tag);
    rep.conductor = inv.conductor;
    rep.discriminant = inv.discriminant;
    rep.phi = ib.phi.c;
    rep.psi = ib.psi.c;
    rep.u = ib.u;
    rep.r = ib.r;
    rep.a0 = gen.a0;
    rep.a1 = gen.a1;
    rep.epsilon = gen.epsilon;
    rep.alpha_power = gen.alpha.c;
    rep.alpha_mixed = field.to_rho_rhoprime(gen.alpha);
    rep.structure = structure_label(gen.structure);
    rep.certificate = gen.certificate;
    return rep;
}

nlohmann::json report_to_json(const Report& rep)
{
    nlohmann::json j;
    j["input"] = {{"n1", big_str(rep.n1)}, {"n2", big_str(rep.n2)},
                  {"n", rat_str(make_rat(rep.n1, rep.n2))}};
    j["invariants"] = {{"delta", big_str(rep.delta)},
                       {"delta_factored", format_factored(rep.delta)},
                       {"d", big_str(rep.d)},
                       {"e", big_str(rep.e)},
                       {"c", big_str(rep.c)},
                       {"m", big_str(rep.m)},
                       {"case", rep.tag},
                       {"conductor", big_str(rep.conductor)},
                       {"discriminant", big_str(rep.discriminant)},
                       {"discriminant_factored", format_factored(rep.discriminant)}};
    j["integral_basis"] = {{"phi", rat_array(rep.phi)},
                           {"psi", rat_array(rep.psi)},
                           {"u", big_str(rep.u)},
                           {"r", big_str(rep.r)}};
    j["generator"] = {{"a0", big_str(rep.a0)},
                      {"a1", big_str(rep.a1)},
                      {"alpha_power_basis", rat_array(rep.alpha_power)},
                      {"alpha_rho_rhoprime", rat_array(rep.alpha_mixed)},
                      {"structure", rep.structure}};
    if (rep.epsilon)
        j["generator"]["epsilon"] = *rep.epsilon;
    else
        j["generator"]["epsilon"] = nullptr;
    j["certificate"] = {{"integrality", rep.certificate.integrality},
                        {"trace_zero", rep.certificate.trace_zero},
                        {"discriminant", rep.certificate.discriminant},
                        {"index_one", rep.certificate.index_one},
                        {"idempotent", rep.certificate.idempotent},
                        {"ok", rep.certificate.all_ok()}};
    return j;
}

Report report_from_json(const nlohmann::json& j)
{
    Report rep;
    rep.n1 = BigInt(j.at("input").at("n1").get<std::string>());
    rep.n2 = BigInt(j.at("input").at("n2").get<std::string>());
    const auto& inv = j.at("invariants");
    rep.delta = BigInt(inv.at("delta").get<std::string>());
    rep.d = BigInt(inv.at("d").get<std::string>());
    rep.e = BigInt(inv.at("e").get<std::string>());
    rep.c = BigInt(inv.at("c").get<std::string>());
    rep.m = BigInt(inv.at("m").get<std::string>());
    rep.tag = inv.at("case").get<std::string>();
    rep.conductor = BigInt(inv.at("conductor").get<std::string>());
    rep.discriminant = BigInt(inv.at("discriminant").get<std::string>());
    const auto& ib = j.at("integral_basis");
    rep.phi = rat_array_parse(ib.at("phi"));
    rep.psi = rat_array_parse(ib.at("psi"));
    rep.u = BigInt(ib.at("u").get<std::string>());
    rep.r = BigInt(ib.at("r").get<std::string>());
    const auto& gen = j.at("generator");
    rep.a0 = BigInt(gen.at("a0").get<std::string>());
    rep.a1 = BigInt(gen.at("a1").get<std::string>());
    if (!gen.at("epsilon").is_null())
        rep.epsilon = gen.at("epsilon").get<int>();
    rep.alpha_power = rat_array_parse(gen.at("alpha_power_basis"));
    rep.alpha_mixed = rat_array_parse(gen.at("alpha_rho_rhoprime"));
    rep.structure = gen.at("structure").get<std::string>();
    const auto& cert = j.at("certificate");
    rep.certificate.integrality = cert.at("integrality").get<bool>();
    rep.certificate.trace_zero = cert.at("trace_zero").get<bool>();
    rep.certificate.discriminant = cert.at("discriminant").get<bool>();
    rep.certificate.index_one = cert.at("index_one").get<bool>();
    rep.certificate.idempotent = cert.at("idempotent").get<bool>();
    return rep;
}

std::string report_to_text(const Report& rep)
{
    std::ostringstream os;
    os << "n = " << rep.n1 << "/" << rep.n2 << "\n"
       << "delta = " << rep.delta << " = " << format_factored(rep.delta)
       << "  (d,e,c) = (" << rep.d << "," << rep.e << "," << rep.c << ")"
       << "  m = " << rep.m << "\n"
       << "case = " << rep.tag << "  conductor = " << rep.conductor
       << "  discriminant = " << format_factored(rep.discriminant) << "\n"
       << "integral basis: phi = [" << rat_str(rep.phi[0]) << ", "
       << rat_str(rep.phi[1]) << ", " << rat_str(rep.phi[2]) << "], psi = ["
       << rat_str(rep.psi[0]) << ", " << rat_str(rep.psi[1]) << ", "
       << rat_str(rep.psi[2]) << "]  (u = " << rep.u << ", r = " << rep.r << ")\n"
       << "generator: (a0,a1) = (" << rep.a0 << "," << rep.a1 << ")";
    if (rep.epsilon)
        os << "  epsilon = " << (*rep.epsilon > 0 ? "+1" : "-1");
    os << "\n"
       << "alpha = " << alpha_pretty(rep.alpha_mixed) << "\n"
       << "structure = " << rep.structure << "\n"
       << "certificate: "
       << (rep.certificate.all_ok() ? "all checks passed" : "FAILED") << "\n";
    return os.str();
}

std::string report_csv_header()
{
    return "n1,n2,DL,case,delta,a0,a1,alpha_c,alpha_rho,alpha_rhoprime,"
           "epsilon,structure,cert_ok,notice";
}

std::string report_to_csv(const Report& rep)
{
    std::ostringstream os;
    os << rep.n1 << ',' << rep.n2 << ',' << format_factored(rep.discriminant)
       << ',' << rep.tag << ',' << format_factored(rep.delta) << ',' << rep.a0
       << ',' << rep.a1 << ',' << rat_str(rep.alpha_mixed[0]) << ','
       << rat_str(rep.alpha_mixed[1]) << ',' << rat_str(rep.alpha_mixed[2])
       << ',' << (rep.epsilon ? std::to_string(*rep.epsilon) : std::string())
       << ',' << rep.structure << ','
       << (rep.certificate.all_ok() ? "true" : "false") << ',';
    return os.str();
}

std::vector<FixtureRow> parse_fixture_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "n1,n2,DL,case,delta,a0,a1,alpha_c,alpha_rho,alpha_rhoprime")
        throw precondition_error("fixture CSV: bad or missing header");
    std::vector<FixtureRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> parts;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ','))
            parts.push_back(tok);
        if (parts.size() != 10)
            throw precondition_error("fixture CSV: row with wrong column count");
        FixtureRow row;
        row.n1 = BigInt(parts[0]);
        row.n2 = BigInt(parts[1]);
        row.dl_factored = parts[2];
        row.tag = parts[3];
        row.delta_factored = parts[4];
        row.a0 = BigInt(parts[5]);
        row.a1 = BigInt(parts[6]);
        row.alpha_mixed = {rat_parse(parts[7]), rat_parse(parts[8]),
                           rat_parse(parts[9])};
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::string> verify_fixture_row(const FixtureRow& row)
{
    std::vector<std::string> fails;
    const CubicField field(row.n1, row.n2);
    const FieldInvariants inv = classify(field);

    if (format_factored(inv.discriminant) != row.dl_factored)
        fails.push_back("discriminant: computed " + format_factored(inv.discriminant)
                        + " != " + row.dl_factored);
    if (tag_label(inv.tag) != row.tag)
        fails.push_back("case: computed " + tag_label(inv.tag) + " != " + row.tag);
    if (format_factored(inv.delta) != row.delta_factored)
        fails.push_back("delta: computed " + format_factored(inv.delta)
                        + " != " + row.delta_factored);

    const Eis fixture_pair{row.a0, row.a1};
    if (is_zero(fixture_pair)) {
        fails.push_back("pair: (a0,a1) = (0,0)");
        return fails;
    }
    const Eis computed_pair = find_a0a1(inv);
    if (canonical(fixture_pair) != canonical(computed_pair))
        fails.push_back("pair: not an associate of the computed (a0,a1)");
    const BigInt ec = inv.dec.e * inv.dec.c;
    const BigInt norm_target = inv.tag == CaseTag::W3ii ? ec / 3 : ec;
    if (e_norm(fixture_pair) != norm_target)
        fails.push_back("pair: norm mismatch");
    if (!e_divides(fixture_pair, inv.a_n))
        fails.push_back("pair: does not divide A_n");
    if (!fails.empty())
        return fails;

    const FieldElement alpha = alpha_from_pair(field, inv, fixture_pair);
    if (field.to_rho_rhoprime(alpha) != row.alpha_mixed) {
        fails.push_back("alpha: rebuilt coordinates differ from fixture");
        return fails;
    }
    const IntegralBasis ib = basis(field, inv);
    const Certificate cert = verify_structure(field, inv, alpha, ib);
    if (!cert.integrality)
        fails.push_back("certificate: integrality");
    if (!cert.trace_zero)
        fails.push_back("certificate: trace_zero");
    if (!cert.discriminant)
        fails.push_back("certificate: discriminant");
    if (!cert.index_one)
        fails.push_back("certificate: index_one");
    if (!cert.idempotent)
        fails.push_back("certificate: idempotent");
    return fails;
}

int run_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err)
{
    Report rep;
    try {
        rep = build_report(opt.n1, opt.n2);
    } catch (const reducible_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const zero_denominator_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const verification_error& ex) {
        err << "verification failed: " << ex.what() << "\n";
        return 3;
    } catch (const internal_inconsistency_error& ex) {
        err << "internal inconsistency: " << ex.what() << "\n";
        return 3;
    }
    if (opt.format == "json")
        out << report_to_json(rep).dump(2) << "\n";
    else if (opt.format == "csv")
        out << report_csv_header() << "\n" << report_to_csv(rep) << "\n";
    else
        out << report_to_text(rep);
    if (!rep.certificate.all_ok()) {
        err << "verification failed for n = " << rep.n1 << "/" << rep.n2 << "\n";
        return 3;
    }
    return 0;
}

int run_table(const TableOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.n2 == 0) {
        err << "error: n2 must be nonzero\n";
        return 2;
    }
    std::vector<BigInt> params;
    for (BigInt n1 = opt.n1_min; n1 <= opt.n1_max; ++n1)
        if (gcd(abs(n1), abs(opt.n2)) == 1)
            params.push_back(n1);

    std::vector<std::string> rows(params.size());
    std::vector<nlohmann::json> json_rows(params.size());
    std::atomic<bool> any_cert_failure{false};
    const bool want_json = opt.format == "json";
    parallel_for(params.size(), opt.jobs, [&](std::size_t i) {
        try {
            const Report rep = build_report(params[i], opt.n2);
            rows[i] = report_to_csv(rep);
            if (want_json)
                json_rows[i] = report_to_json(rep);
            if (!rep.certificate.all_ok())
                any_cert_failure = true;
        } catch (const reducible_error&) {
            std::ostringstream os;
            os << params[i] << ',' << opt.n2 << ",,,,,,,,,,,," << "reducible";
            rows[i] = os.str();
            if (want_json)
                json_rows[i] = {{"input", {{"n1", big_str(params[i])},
                                           {"n2", big_str(opt.n2)}}},
                                {"notice", "reducible"}};
        }
    });

    if (want_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& j : json_rows)
            arr.push_back(std::move(j));
        out << arr.dump(2) << "\n";
    } else {
        out << report_csv_header() << "\n";
        for (const std::string& row : rows)
            out << row << "\n";
    }
    if (any_cert_failure) {
        err << "one or more rows failed verification\n";
        return 1;
    }
    return 0;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    std::string text;
    if (opt.fixtures_path.empty()) {
        text = embedded_fixture_csv();
    } else {
        std::ifstream in(opt.fixtures_path);
        if (!in) {
            err << "error: cannot read " << opt.fixtures_path << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::vector<FixtureRow> rows;
    try {
        rows = parse_fixture_csv(text);
    } catch (const precondition_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }

    std::size_t passed = 0;
    bool ok = true;
    for (const FixtureRow& row : rows) {
        std::vector<std::string> fails;
        try {
            fails = verify_fixture_row(row);
        } catch (const std::exception& ex) {
            fails.push_back(std::string("exception: ") + ex.what());
        }
        if (fails.empty()) {
            ++passed;
        } else {
            ok = false;
            out << "row (" << row.n1 << "," << row.n2 << "): FAIL\n";
            for (const std::string& f : fails)
                out << "  " << f << "\n";
        }
    }
    out << passed << "/" << rows.size() << " fixture rows verified\n";
    return ok ? 0 : 1;
}

namespace {

/// One selftest parameter check; returns a failure description or "".
std::string selftest_check(const BigInt& n1, const BigInt& n2, std::string& tag_out)
{
    CubicField field(n1, n2);
    const FieldInvariants inv = classify(field);
    tag_out = tag_label(inv.tag);
    const IntegralBasis ib = basis(field, inv); // throws on basis failure
    const GeneratorResult gen = generator(field, inv, ib);
    if (!gen.certificate.all_ok())
        return "structure certificate failed";

    // Independent route: Albert's basis mapped through theta must span the
    // same lattice.
    const TransformData td = transform(field, inv);
    const auto oracle = albert_oracle(td.a, td.b);
    const FieldElement theta = theta_element(inv);
    const FieldElement theta2 = field.mul(theta, theta);
    std::array<FieldElement, 3> mapped;
    for (int i = 0; i < 3; ++i) {
        FieldElement x = fe_const(oracle[i][0]);
        x = field.add(x, field.smul(oracle[i][1], theta));
        x = field.add(x, field.smul(oracle[i][2], theta2));
        mapped[i] = x;
    }
    const std::array<FieldElement, 3> base{ib.one, ib.phi, ib.psi};
    for (const FieldElement& v : mapped)
        for (const Rat& q : field.coords_in_basis(base, v))
            if (denominator(q) != 1)
                return "oracle basis has non-integer coordinates";
    if (field.lattice_index(base, mapped) != 1)
        return "oracle lattice index != 1";

    // Closed-form corollaries must reproduce the computed generator.
    if (const auto cf = corollary_form(field, inv); cf && !(*cf == gen.alpha))
        return "corollary closed form disagrees with generator";

    // Shifting r by 3u must not change the lattice.
    {
        IntegralBasis shifted = ib;
        const BigInt r2 = ib.r + 3 * ib.u;
        const BigInt &m = inv.m, &a = td.a;
        if (n1 % 3 != 0)
            shifted.phi = {{make_rat(-n1 - m * r2, 3 * m), make_rat(3 * n2, 3 * m), Rat(0)}};
        shifted.psi = {{make_rat(m * m * r2 * r2 + m * m * a - m * n1 * r2 + n1 * n1, ib.u),
                        make_rat(3 * n2 * (m * r2 - 2 * n1), ib.u),
                        make_rat(9 * n2 * n2, ib.u)}};
        const std::array<FieldElement, 3> vecs{shifted.one, shifted.phi, shifted.psi};
        for (const FieldElement& v : vecs)
            for (const Rat& q : field.coords_in_basis(base, v))
                if (denominator(q) != 1)
                    return "r-shifted basis not in the lattice";
        if (field.lattice_index(base, vecs) != 1)
            return "r-shifted basis has index != 1";
    }
    return "";
}

} // namespace

int run_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err)
{
    std::vector<std::pair<BigInt, BigInt>> params;
    for (BigInt n2 = 1; n2 <= opt.max_n2; ++n2)
        for (BigInt n1 = -opt.max_n1; n1 <= opt.max_n1; ++n1)
            if (gcd(abs(n1), n2) == 1)
                params.emplace_back(n1, n2);

    std::mutex mtx;
    std::map<std::string, long> tag_counts;
    std::vector<std::string> failures;
    parallel_for(params.size(), opt.jobs, [&](std::size_t i) {
        const auto& [n1, n2] = params[i];
        std::string tag, fail;
        try {
            fail = selftest_check(n1, n2, tag);
        } catch (const reducible_error&) {
            return; // not a valid parameter; skip
        } catch (const std::exception& ex) {
            fail = std::string("exception: ") + ex.what();
        }
        std::lock_guard<std::mutex> lock(mtx);
        if (!fail.empty()) {
            std::ostringstream os;
            os << "(" << n1 << "," << n2 << "): " << fail;
            failures.push_back(os.str());
        } else {
            ++tag_counts[tag];
        }
    });

    long total = 0;
    for (const auto& [tag, count] : tag_counts) {
        out << "case " << tag << ": " << count << "\n";
        total += count;
    }
    out << "checked " << total << " parameters\n";
    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end());
        err << "selftest failed at " << failures.front() << "\n";
        return 1;
    }
    return 0;
}

} // namespace cyccubic
