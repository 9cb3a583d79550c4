#include "doctest.h"
#include "json.hpp"
#include "leavitt/bimodule.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/report.hpp"
#include "leavitt/verify.hpp"
#include "support.hpp"

using namespace leavitt;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("expressions: formatting round trips")
{
    for (const char* name : battery_names) {
        Quiver q = battery(name);
        for (const auto& x : bounded_pairs(q, 2)) {
            LpaElement m = monomial(x, Q);
            std::string text = format_lpa(q, m);
            CHECK(parse_expression(text, q, Q) == m);
        }
        std::mt19937_64 rng(3);
        for (int k = 0; k < 20; ++k) {
            LpaElement a = random_element(q, 2, 4, rng, Q);
            CHECK(parse_expression(format_lpa(q, a), q, Q) == a);
        }
    }
}

TEST_CASE("expressions: scalars, parentheses and distribution")
{
    Quiver q = battery("two_loop");
    LpaElement a = parse_expression("(a1 + a2) . (a1* - 1/2 a2*)", q, Q);
    LpaElement b = parse_expression("e(1) - 1/2 e(1)", q, Q);
    CHECK(a == b);
    CHECK(format_lpa(q, a) == "1/2 e(1)");
    CHECK(parse_expression("0", q, Q).is_zero());
    CHECK(parse_expression("-a2 + a2", q, Q).is_zero());
    CHECK(parse_expression("2 3 a1", q, Q) == parse_expression("6 a1", q, Q));
}

TEST_CASE("expressions: errors report offsets")
{
    Quiver q = battery("two_loop");
    try {
        parse_expression("a1 . zz", q, Q);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_expression("a1 +", q, Q), ParseError);
    CHECK_THROWS_AS(parse_expression("(a1", q, Q), ParseError);
    CHECK_THROWS_AS(parse_expression("e(7)", q, Q), ParseError);
    CHECK_THROWS_AS(parse_expression("a1 $", q, Q), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0", q, Q), ParseError);
}

TEST_CASE("all-digit arrow ids are read as numbers")
{
    Quiver q = parse_quiver("vertices: 1\narrow 7: 1 -> 1\narrow b: 1 -> 1\n");
    CHECK(parse_expression("7", q, Q) == parse_expression("7 e(1)", q, Q));
    CHECK_THROWS_AS(parse_expression("7*", q, Q), ParseError);
}

TEST_CASE("vectors: parsing and formatting")
{
    Quiver q = battery("two_loop");
    ComplexVector v = parse_vector("2 * G(a1) zeta(a1 ; e(1)) - E(1) zeta(a2 ; a2)", q, Q);
    CHECK(v.size() == 2);
    CHECK(parse_vector(format_vector(q, v), q, Q) == v);
    CHECK(format_vector(q, ComplexVector(Q)) == "0");
    CHECK(parse_vector("0", q, Q).is_zero());
    CHECK_THROWS_AS(parse_vector("E(1) zeta(a1 ; a1)", q, Q), ParseError);  // not admissible
    CHECK_THROWS_AS(parse_vector("F(1) zeta(a1 ; e(1))", q, Q), ParseError);

    Quiver c = battery("two_cycle");
    CHECK_THROWS_AS(parse_vector("E(1) zeta(e(2) ; e(2))", c, Q), ParseError);  // socle at the wrong vertex
    CHECK_NOTHROW(parse_vector("G(b) zeta(e(1) ; e(1))", c, Q));
}

TEST_CASE("reports are deterministic apart from timing")
{
    Quiver q = battery("two_cycle");
    VerifyOptions opt;
    opt.nmax = 2;
    opt.lmin = -1;
    opt.lmax = 1;
    opt.roundtrip_bound = 2;
    opt.roundtrip_trials = 2;
    opt.roundtrip_nmin = 0;
    opt.roundtrip_nmax = 0;
    auto run = [&](double ms) {
        Report r;
        r.command = "verify";
        r.quiver_digest = fnv1a_hex(q.canonical_text());
        r.field = "Q";
        r.seed = opt.seed;
        r.checks = verify_roundtrip(q, opt);
        r.elapsed_ms = ms;
        return r;
    };
    Report a = run(1.0), b = run(2.0);
    CHECK(a.to_json(false) == b.to_json(false));
    CHECK(a.to_text(false) == b.to_text(false));
    CHECK(a.to_json(true) != b.to_json(true));
    auto j = nlohmann::json::parse(a.to_json(false));
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 5);
    CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("digest")
{
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("a failed check keeps the first counterexample")
{
    Check c("demo");
    c.pass();
    c.fail("first");
    c.fail("second");
    CHECK_FALSE(c.passed());
    CHECK(c.record().cases == 3);
    CHECK(c.record().failures == 2);
    CHECK(c.record().counterexample == "first");
}
