// Command-line front end: basis listings, normal forms, differentials, actions
// and the verification suites.

#include <chrono>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "leavitt/bimodule.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/report.hpp"
#include "leavitt/verify.hpp"

using namespace leavitt;

namespace {

struct Common {
    std::string quiver_file;
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--quiver", c.quiver_file, "quiver file")->required();
    cmd->add_flag("--json", c.json, "print the report as JSON");
}

std::pair<int, int> parse_degrees(const std::string& text)
{
    static const std::regex pattern(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw CLI::ValidationError("--degrees", "expected L1..L2, got '" + text + "'");
    int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo > hi)
        throw CLI::ValidationError("--degrees", "empty degree window '" + text + "'");
    return {lo, hi};
}

std::string pair_text(const Quiver& q, const AdmissiblePair& x)
{
    return "(" + format_path(q, x.p) + " ; " + format_path(q, x.q) + ")";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Leavitt path algebras and the injective Leavitt complex"};
    app.require_subcommand(1);

    Common common;
    std::string vertex_name;
    int l = 0, nmax = 3, verify_nmax = 5;
    bool witness_flag = false;
    std::string expr, vector_spec, by_expr, degrees = "-4..4", suite = "all", fault_name_arg = "none";
    std::uint64_t seed = 1;
    int roundtrip_bound = 3, trials = 10;

    auto* basis = app.add_subcommand("basis", "list B^{l,n}_i for n <= nmax");
    add_common(basis, common);
    basis->add_option("--vertex", vertex_name, "vertex i")->required();
    basis->add_option("--l", l, "degree l")->required();
    basis->add_option("--nmax", nmax, "largest l(q)");
    basis->add_flag("--witness", witness_flag, "also print the constructive witness pair");

    auto* witness = app.add_subcommand("witness", "constructive element of B^l_i");
    add_common(witness, common);
    witness->add_option("--vertex", vertex_name, "vertex i")->required();
    witness->add_option("--l", l, "degree l")->required();

    auto* reduce = app.add_subcommand("reduce", "normal form of an algebra expression");
    add_common(reduce, common);
    reduce->add_option("--expr", expr, "expression")->required();

    auto* diff = app.add_subcommand("differential", "apply the differential to a vector");
    add_common(diff, common);
    diff->add_option("--vector", vector_spec, "vector, e.g. '1 * G(a) zeta(a ; e(1))'")->required();
    diff->add_option("--inject-fault", fault_name_arg, "test mode: mutate the differential")
        ->check(CLI::IsMember({"none", "flip-hat-sign", "flip-sum-sign", "drop-sum"}));

    auto* act = app.add_subcommand("act", "right action of an algebra element on a vector");
    add_common(act, common);
    act->add_option("--vector", vector_spec, "vector")->required();
    act->add_option("--by", by_expr, "algebra expression")->required();

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    add_common(verify, common);
    verify->add_option("--nmax", verify_nmax, "largest l(q) in degree slices");
    verify->add_option("--degrees", degrees, "degree window L1..L2");
    verify->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"all", "complex", "algebra", "bimodule", "roundtrip"}));
    verify->add_option("--seed", seed, "seed for random elements");
    verify->add_option("--roundtrip-bound", roundtrip_bound, "path length bound of the round-trip tables");
    verify->add_option("--trials", trials, "random trials per degree in the round trip");
    verify->add_option("--inject-fault", fault_name_arg, "test mode: mutate the differential")
        ->check(CLI::IsMember({"none", "flip-hat-sign", "flip-sum-sign", "drop-sum"}));

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    Report report;
    int exit_code = 0;
    try {
        Field field = field_from_env();
        Quiver quiver = load_quiver(common.quiver_file);
        report.quiver_digest = fnv1a_hex(quiver.canonical_text());
        report.field = field.name();
        report.seed = seed;
        auto param = [&](const std::string& k, const std::string& v) { report.parameters.emplace_back(k, v); };
        auto out = [&](const std::string& k, const std::string& v) { report.output.emplace_back(k, v); };
        DifferentialFault fault = *parse_fault(fault_name_arg);

        if (*basis) {
            report.command = "basis";
            VertexId i = quiver.vertex(vertex_name);
            param("vertex", vertex_name);
            param("l", std::to_string(l));
            param("nmax", std::to_string(nmax));
            for (int n = 0; n <= nmax; ++n) {
                auto pairs = enumerate_B(quiver, i, l, n);
                out("count n=" + std::to_string(n), std::to_string(pairs.size()));
                for (const auto& x : pairs)
                    out("pair n=" + std::to_string(n), pair_text(quiver, x));
            }
            if (witness_flag)
                out("witness", pair_text(quiver, witness_admissible(quiver, i, l)));
        } else if (*witness) {
            report.command = "witness";
            param("vertex", vertex_name);
            param("l", std::to_string(l));
            out("witness", pair_text(quiver, witness_admissible(quiver, quiver.vertex(vertex_name), l)));
        } else if (*reduce) {
            report.command = "reduce";
            param("expr", expr);
            LpaElement a = parse_expression(expr, quiver, field);
            out("normal form", format_lpa(quiver, a));
            for (const auto& [d, part] : grade(a))
                out("degree " + std::to_string(d), format_lpa(quiver, part));
        } else if (*diff) {
            report.command = "differential";
            param("vector", vector_spec);
            if (fault != DifferentialFault::none)
                param("inject-fault", fault_name_arg);
            ComplexVector v = parse_vector(vector_spec, quiver, field);
            out("image", format_vector(quiver, differential(quiver, v, fault)));
        } else if (*act) {
            report.command = "act";
            param("vector", vector_spec);
            param("by", by_expr);
            ComplexVector v = parse_vector(vector_spec, quiver, field);
            LpaElement b = parse_expression(by_expr, quiver, field);
            out("image", format_vector(quiver, b_action(quiver, v, b)));
        } else if (*verify) {
            report.command = "verify";
            auto [lo, hi] = parse_degrees(degrees);
            param("nmax", std::to_string(verify_nmax));
            param("degrees", std::to_string(lo) + ".." + std::to_string(hi));
            param("suite", suite);
            param("roundtrip-bound", std::to_string(roundtrip_bound));
            param("trials", std::to_string(trials));
            if (fault != DifferentialFault::none)
                param("inject-fault", fault_name_arg);
            VerifyOptions opt;
            opt.nmax = verify_nmax;
            opt.lmin = lo;
            opt.lmax = hi;
            opt.field = field;
            opt.seed = seed;
            opt.fault = fault;
            opt.roundtrip_bound = roundtrip_bound;
            opt.roundtrip_trials = trials;
            opt.roundtrip_nmin = std::max(lo, -2);
            opt.roundtrip_nmax = std::min(hi, 2);
            auto add = [&](const std::vector<CheckRecord>& records) {
                report.checks.insert(report.checks.end(), records.begin(), records.end());
            };
            if (suite == "all" || suite == "complex")
                add(verify_complex(quiver, opt));
            if (suite == "all" || suite == "algebra")
                add(verify_algebra(quiver, opt));
            if (suite == "all" || suite == "bimodule")
                add(verify_bimodule(quiver, opt));
            if (suite == "all" || suite == "roundtrip")
                add(verify_roundtrip(quiver, opt));
            exit_code = report.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (common.json ? report.to_json() : report.to_text());
    return exit_code;
}
