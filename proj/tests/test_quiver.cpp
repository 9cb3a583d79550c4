#include "doctest.h"
#include "leavitt/scalar.hpp"
#include "leavitt/quiver.hpp"
#include "support.hpp"

using namespace leavitt;

TEST_CASE("rational arithmetic")
{
    Field q = Field::rationals();
    Scalar a = Scalar::parse("1/2", q), b = Scalar::parse("1/3", q);
    CHECK((a + b).to_string() == "5/6");
    CHECK((a - b).to_string() == "1/6");
    CHECK((a / b).to_string() == "3/2");
    CHECK((-a).is_negative());
    CHECK(Scalar::parse("4/2", q).is_one() == false);
    CHECK(Scalar::parse("4/2", q) == Scalar(2, q));
    CHECK_THROWS(Scalar::parse("1/0", q));
    CHECK_THROWS(a / Scalar(0, q));
}

TEST_CASE("prime field arithmetic")
{
    Field f7 = Field::prime(7);
    CHECK(f7.name() == "Fp:7");
    CHECK((Scalar(3, f7) * Scalar(5, f7)).is_one());
    CHECK(Scalar(-1, f7).to_string() == "6");
    CHECK(Scalar::parse("1/2", f7) == Scalar(4, f7));
    CHECK_THROWS_AS(Scalar(1, f7) + Scalar(1, Field::rationals()), FieldMismatch);
    CHECK_THROWS(Field::prime(4));
    CHECK(parse_field("Fp:5") == Field::prime(5));
    CHECK(parse_field("") == Field::rationals());
    CHECK_THROWS(parse_field("R"));
}

TEST_CASE("sign power")
{
    CHECK(sign_power(0) == 1);
    CHECK(sign_power(-3) == -1);
    CHECK(sign_power(4) == 1);
}

TEST_CASE("quiver parsing and specials")
{
    Quiver q = parse_quiver("vertices: 1 2\n# comment\narrow b: 1 -> 2\narrow a: 1 -> 1\narrow c: 2 -> 1\n");
    CHECK(q.vertex_count() == 2);
    CHECK(q.arrow_count() == 3);
    CHECK(q.arrow_name(0) == "a");
    CHECK(q.special(q.vertex("1")) == q.arrow("a"));
    CHECK(q.companions(q.arrow("a")) == std::vector<ArrowId>{q.arrow("b")});
    CHECK(q.companions(q.arrow("c")).empty());

    Quiver r = parse_quiver("vertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nspecial 1: y\n");
    CHECK(r.is_special(r.arrow("y")));
    CHECK_FALSE(r.is_special(r.arrow("x")));
}

TEST_CASE("quiver errors carry positions")
{
    CHECK_THROWS_AS(parse_quiver("vertices: 1 2\narrow a: 1 -> 2\n"), QuiverError);  // 2 is a sink
    try {
        parse_quiver("vertices: 1\narrow a: 1 -> 9\n");
        FAIL("no error");
    } catch (const QuiverError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_quiver("vertices: 1\narrow a: 1 -> 1\narrow a: 1 -> 1\n"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nspecial 1: b\n"), QuiverError);
    CHECK_THROWS_AS(parse_quiver("vertices: 1\narrow a 1 -> 1\n"), QuiverError);
}

TEST_CASE("path operations")
{
    Quiver q = battery("branching");
    ArrowId x = q.arrow("x"), z = q.arrow("z"), w = q.arrow("w");
    Path p = make_path(q, {x, z, w});  // w z x
    CHECK(p.source == q.vertex("1"));
    CHECK(p.target == q.vertex("1"));
    CHECK(p.first() == x);
    CHECK(p.last() == w);
    CHECK(truncate_hat(q, p) == make_path(q, {x, z}));
    CHECK(truncate_tilde(q, p) == make_path(q, {z, w}));
    CHECK(then_arrow(q, make_path(q, {x, z}), w) == p);
    CHECK(after_arrow(q, x, make_path(q, {z, w})) == p);
    CHECK(compose(make_path(q, {w}), make_path(q, {x, z})) == p);
    CHECK(format_path(q, p) == "w.z.x");
    CHECK(parse_path(q, "w.z.x") == p);
    CHECK(format_path(q, Path::trivial(q.vertex("2"))) == "e(2)");
    CHECK(parse_path(q, "e(2)") == Path::trivial(q.vertex("2")));
    CHECK_THROWS(make_path(q, {x, w}));
    CHECK_THROWS(truncate_hat(q, Path::trivial(0)));
}

TEST_CASE("path enumeration matches brute force walks")
{
    for (const char* name : battery_names) {
        Quiver q = battery(name);
        for (int len = 0; len <= 4; ++len) {
            long total = 0;
            for (VertexId v = 0; v < q.vertex_count(); ++v) {
                auto ps = enumerate_paths(q, len, v);
                total += static_cast<long>(ps.size());
                CHECK(std::is_sorted(ps.begin(), ps.end()));
                for (const auto& p : ps) {
                    CHECK(p.source == v);
                    CHECK(p.length() == len);
                }
            }
            CHECK(static_cast<long>(enumerate_paths(q, len).size()) == total);
        }
    }
}

TEST_CASE("canonical text is independent of declaration order")
{
    Quiver a = parse_quiver("vertices: 1\narrow b: 1 -> 1\narrow a: 1 -> 1\n");
    Quiver b = parse_quiver("vertices: 1\narrow a: 1 -> 1\narrow b: 1 -> 1\nspecial 1: a\n");
    CHECK(a.canonical_text() == b.canonical_text());
}
