#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "dual.hpp"
#include "sampling.hpp"

using namespace radex;

namespace {

struct Point {
    Rational u, v;
};

// One expression together with its hand-derived partials.
struct Expression {
    const char* name;
    std::function<DualScalar(const DualScalar&, const DualScalar&)> eval;
    std::function<Rational(const Point&)> du;
    std::function<Rational(const Point&)> dv;
};

const Rational kW(3);  // fixed constant used by expression 10

// Library of fixed expressions with symbolic hand-derivatives.
std::vector<Expression> expression_library() {
    using D = DualScalar;
    const Rational one(1), two(2), three(3);
    return {
        {"u + v", [](const D& u, const D& v) { return u + v; },
         [=](const Point&) { return one; }, [=](const Point&) { return one; }},
        {"u * v", [](const D& u, const D& v) { return u * v; },
         [](const Point& p) { return p.v; }, [](const Point& p) { return p.u; }},
        {"u / v", [](const D& u, const D& v) { return u / v; },
         [](const Point& p) { return p.v.inverse(); },
         [](const Point& p) { return -p.u / (p.v * p.v); }},
        {"u^2", [](const D& u, const D&) { return u.pow(2); },
         [=](const Point& p) { return two * p.u; }, [](const Point&) { return Rational(0); }},
        {"u^-3", [](const D& u, const D&) { return u.pow(-3); },
         [=](const Point& p) { return -three * p.u.pow(-4); },
         [](const Point&) { return Rational(0); }},
        {"(u+v)(u-v)", [](const D& u, const D& v) { return (u + v) * (u - v); },
         [=](const Point& p) { return two * p.u; }, [=](const Point& p) { return -two * p.v; }},
        {"1/(u*v)", [](const D& u, const D& v) { return Rational(1) / (u * v); },
         [](const Point& p) { return -(p.u * p.u * p.v).inverse(); },
         [](const Point& p) { return -(p.u * p.v * p.v).inverse(); }},
        {"(u*v)/(u+v)", [](const D& u, const D& v) { return (u * v) / (u + v); },
         [](const Point& p) { return p.v * p.v / ((p.u + p.v) * (p.u + p.v)); },
         [](const Point& p) { return p.u * p.u / ((p.u + p.v) * (p.u + p.v)); }},
        {"u^3*v - v/u",
         [](const D& u, const D& v) { return u.pow(3) * v - v / u; },
         [=](const Point& p) { return three * p.u.pow(2) * p.v + p.v / p.u.pow(2); },
         [](const Point& p) { return p.u.pow(3) - p.u.inverse(); }},
        {"((u-w)/(v+w))^2",
         [](const D& u, const D& v) { return ((u - kW) / (v + kW)).pow(2); },
         [=](const Point& p) { return two * (p.u - kW) / (p.v + kW).pow(2); },
         [=](const Point& p) { return -two * (p.u - kW).pow(2) / (p.v + kW).pow(3); }},
    };
}

}  // namespace

TEST_CASE("quotient rule matches the worked example") {
    const DualScalar u = DualScalar::variable(Rational(2), 0, 1);
    const DualScalar v = DualScalar::constant(Rational(4), 1);
    const DualScalar q = u / v;
    CHECK(q.value() == Rational(1, 2));
    CHECK(q.partial(0) == Rational(1, 4));
}

TEST_CASE("mismatched arity is rejected") {
    const DualScalar a = DualScalar::variable(Rational(1), 0, 2);
    const DualScalar b = DualScalar::variable(Rational(1), 0, 3);
    CHECK_THROWS_AS(a + b, DomainError);
    CHECK_THROWS_AS(a * b, DomainError);
}

TEST_CASE("division by a zero-valued dual is rejected") {
    const DualScalar a = DualScalar::variable(Rational(1), 0, 1);
    const DualScalar z = DualScalar::constant(Rational(0), 1);
    CHECK_THROWS_AS(a / z, SingularError);
}

TEST_CASE("hand-derivative library, exact at fixed points") {
    const std::vector<Point> points{
        {Rational(2, 3), Rational(-5, 7)},
        {Rational(-7, 2), Rational(4, 9)},
        {Rational(5), Rational(1, 6)},
    };
    for (const Expression& expr : expression_library()) {
        for (const Point& p : points) {
            if ((p.u + p.v).is_zero()) continue;
            CAPTURE(expr.name);
            const DualScalar u = DualScalar::variable(p.u, 0, 2);
            const DualScalar v = DualScalar::variable(p.v, 1, 2);
            const DualScalar r = expr.eval(u, v);
            CHECK(r.partial(0) == expr.du(p));
            CHECK(r.partial(1) == expr.dv(p));
        }
    }
}

TEST_CASE("power chain rule at random points") {
    SplitMix64 rng(21);
    for (int i = 0; i < 100; ++i) {
        const Rational x = rng.rational();
        const long k = rng.range(-5, 5);
        const DualScalar u = DualScalar::variable(x, 0, 1);
        const DualScalar r = u.pow(k);
        CHECK(r.value() == x.pow(k));
        CHECK(r.partial(0) == Rational(k) * x.pow(k - 1));
    }
}

TEST_CASE("partials of sums and products at random points") {
    SplitMix64 rng(22);
    for (int i = 0; i < 100; ++i) {
        const Rational a = rng.rational(), b = rng.rational();
        const DualScalar u = DualScalar::variable(a, 0, 2);
        const DualScalar v = DualScalar::variable(b, 1, 2);
        const DualScalar f = u * v + v / u - Rational(3) * u;
        CHECK(f.partial(0) == b - b / (a * a) - Rational(3));
        CHECK(f.partial(1) == a + a.inverse());
    }
}
