// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "leavitt/bimodule.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace leavitt;

namespace {

const Field Q = Field::rationals();

struct Outcome {
    bool ok = true;
    long cases = 0;
    std::string detail;

    void expect(bool cond, const std::function<std::string()>& why)
    {
        ++cases;
        if (!cond && ok) {
            ok = false;
            detail = why();
        }
    }
    void absorb(const std::string& quiver, const std::vector<CheckRecord>& records)
    {
        for (const auto& r : records) {
            cases += r.cases;
            if (!r.passed && ok) {
                ok = false;
                detail = quiver + " " + r.name + ": " + r.counterexample;
            }
        }
    }
};

BasisVector bv(Socle s, Path p, Path q) { return {s, {std::move(p), std::move(q)}}; }

Path power(const Quiver& q, ArrowId a, int k)
{
    return k == 0 ? Path::trivial(q.source(a)) : make_path(q, std::vector<ArrowId>(k, a));
}

// q alpha: alpha traversed first.
Path prepend(const Quiver& q, ArrowId alpha, const Path& p)
{
    std::vector<ArrowId> arrows{alpha};
    arrows.insert(arrows.end(), p.arrows.begin(), p.arrows.end());
    return make_path(q, arrows);
}

VerifyOptions battery_options()
{
    VerifyOptions opt;
    opt.nmax = 5;
    opt.lmin = -4;
    opt.lmax = 4;
    opt.field = Q;
    opt.seed = 1;
    return opt;
}

Outcome one_loop_golden()
{
    Outcome out;
    Quiver q = battery("one_loop");
    ArrowId a = q.arrow("a");
    Path e = Path::trivial(0);
    auto zeta = [&](int l) {
        return l < 0 ? AdmissiblePair{power(q, a, -l), e} : AdmissiblePair{e, power(q, a, l)};
    };
    for (int l = -6; l <= 6; ++l) {
        std::vector<AdmissiblePair> all;
        for (int n = 0; n <= 12; ++n)
            for (const auto& x : enumerate_B(q, 0, l, n))
                all.push_back(x);
        out.expect(all.size() == 1 && all[0] == zeta(l), [&] { return "B^" + std::to_string(l) + " is not a singleton"; });
        ComplexVector dg = differential(q, bv(Socle::G(a), zeta(l).p, zeta(l).q), Q);
        out.expect(dg == ComplexVector::basis(bv(Socle::E(0), zeta(l + 1).p, zeta(l + 1).q), Q),
                   [&] { return "d(a# zeta^" + std::to_string(l) + ") = " + format_vector(q, dg); });
        ComplexVector de = differential(q, bv(Socle::E(0), zeta(l).p, zeta(l).q), Q);
        out.expect(de.is_zero(), [&] { return "d(e# zeta^" + std::to_string(l) + ") = " + format_vector(q, de); });
    }
    return out;
}

Outcome two_loop_golden()
{
    Outcome out;
    Quiver q = battery("two_loop");
    ArrowId a1 = q.arrow("a1"), a2 = q.arrow("a2");
    Path e = Path::trivial(0);
    for (int n = 0; n <= 3; ++n)
        for (const auto& x : enumerate_B(q, 0, -1, n)) {
            if (x.p.length() > 4)
                continue;
            ComplexVector got1 = differential(q, bv(Socle::G(a1), x.p, x.q), Q);
            ComplexVector want1(Q);
            if (x.q.is_trivial() && x.p == Path::of_arrow(q, a1)) {
                want1.add(bv(Socle::E(0), e, e), Scalar(1, Q));
                want1.add(bv(Socle::E(0), Path::of_arrow(q, a2), Path::of_arrow(q, a2)), Scalar(-1, Q));
            } else {
                want1.add(bv(Socle::E(0), x.p, prepend(q, a1, x.q)), Scalar(1, Q));
            }
            out.expect(got1 == want1, [&] { return "a1 at " + format_monomial(q, x) + ": " + format_vector(q, got1); });
            ComplexVector got2 = differential(q, bv(Socle::G(a2), x.p, x.q), Q);
            ComplexVector want2 = ComplexVector::basis(bv(Socle::E(0), x.p, prepend(q, a2, x.q)), Q);
            out.expect(got2 == want2, [&] { return "a2 at " + format_monomial(q, x) + ": " + format_vector(q, got2); });
            ComplexVector got0 = differential(q, bv(Socle::E(0), x.p, x.q), Q);
            out.expect(got0.is_zero(), [&] { return "e at " + format_monomial(q, x); });
        }
    return out;
}

Outcome basis_counts()
{
    Outcome out;
    Quiver q = battery("two_loop");
    for (int l = -4; l <= 4; ++l)
        for (int n = 0; n <= 5; ++n) {
            long got = static_cast<long>(enumerate_B(q, 0, l, n).size());
            long brute = oracle::brute_force_count(q, 0, l, n);
            long closed = oracle::two_loop_count(l, n);
            out.expect(got == brute && got == closed, [&] {
                std::ostringstream s;
                s << "l=" << l << " n=" << n << ": " << got << " vs brute " << brute << " vs closed form " << closed;
                return s.str();
            });
        }
    return out;
}

Outcome square_zero()
{
    Outcome out;
    for (const char* name : battery_names) {
        Quiver q = battery(name);
        for (const auto& b : bounded_basis(q, 6)) {
            ComplexVector dd = differential(q, differential(q, b, Q));
            out.expect(dd.is_zero(), [&] { return std::string(name) + " " + format_basis_vector(q, b); });
        }
    }
    return out;
}

Outcome suite(const std::function<std::vector<CheckRecord>(const Quiver&, const VerifyOptions&)>& run,
              const VerifyOptions& opt)
{
    Outcome out;
    for (const char* name : battery_names)
        out.absorb(name, run(battery(name), opt));
    return out;
}

// A fault counts as caught on a quiver when it changes the differential
// somewhere there and suites 4, 5 or 7 report a failure with a counterexample.
Outcome fault_injection()
{
    Outcome out;
    VerifyOptions opt = battery_options();
    opt.nmax = 4;
    opt.lmin = -3;
    opt.lmax = 3;
    for (auto fault : {DifferentialFault::flip_hat_sign, DifferentialFault::flip_sum_sign, DifferentialFault::drop_sum}) {
        int affected = 0;
        for (const char* name : battery_names) {
            Quiver q = battery(name);
            bool changes = false;
            for (const auto& b : bounded_basis(q, 2))
                if (!(differential(q, b, Q, fault) == differential(q, b, Q)))
                    changes = true;
            if (!changes)
                continue;
            ++affected;
            opt.fault = fault;
            std::vector<CheckRecord> records = verify_square_zero(q, opt);
            for (auto&& r : verify_classification(q, opt))
                records.push_back(r);
            for (auto&& r : verify_bimodule(q, opt))
                records.push_back(r);
            bool caught = false;
            for (const auto& r : records)
                caught = caught || (!r.passed && !r.counterexample.empty());
            out.expect(caught, [&] { return std::string(fault_name(fault)) + " not caught on " + name; });
        }
        out.expect(affected > 0, [&] { return std::string(fault_name(fault)) + " changes nothing on the battery"; });
    }
    return out;
}

}  // namespace

int main()
{
    struct Criterion {
        int number;
        const char* title;
        std::function<Outcome()> run;
    };
    VerifyOptions opt = battery_options();
    std::vector<Criterion> criteria{
        {1, "one-loop golden example, l in [-6, 6]", one_loop_golden},
        {2, "two-loop golden differential, path lengths <= 4", two_loop_golden},
        {3, "two-loop basis counts against brute force and closed form", basis_counts},
        {4, "differential squares to zero, l(p), l(q) <= 6", square_zero},
        {5, "kernel/image classification, degrees [-4, 4], bound 5", [&] { return suite(verify_classification, opt); }},
        {6, "algebra suite", [&] { return suite(verify_algebra, opt); }},
        {7, "dg-bimodule suite, bound 5", [&] { return suite(verify_bimodule, opt); }},
        {8, "layer decomposition sign", [&] { return suite(verify_decomposition, opt); }},
        {9, "resolution checks", [&] { return suite(verify_resolutions, opt); }},
        {10, "quasi-balance round trip, n in [-2, 2], 10 trials", [&] { return suite(verify_roundtrip, opt); }},
        {11, "fault injection is detected", fault_injection},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << o.cases
                  << " cases, " << static_cast<int>(secs * 1000) << " ms)";
        if (!o.ok)
            std::cout << " -- " << o.detail;
        std::cout << std::endl;
    }
    return all ? 0 : 1;
}
