#include <doctest.h>

#include <jetprolong/errors.hpp>
#include <jetprolong/rational_poly.hpp>

using namespace jetprolong;

TEST_CASE("ring operations")
{
    const auto x = RationalPoly::variable(2, 1);
    const auto y = RationalPoly::variable(2, 2);
    const auto one = RationalPoly::constant(2, 1);
    const auto p = (x + y) * (x - y);
    CHECK(p == pow(x, 2) - pow(y, 2));
    CHECK((p - p).is_zero());
    CHECK(pow(x + one, 0) == one);
    CHECK((x * Rational(0)).is_zero());
    CHECK(eval(pow(x + y, 3), {Rational(1, 2), Rational(1, 3)}) == Rational(125, 216));
}

TEST_CASE("derivatives")
{
    const auto x = RationalPoly::variable(2, 1);
    const auto y = RationalPoly::variable(2, 2);
    const auto p = pow(x, 3) * y + x * Rational(5);
    CHECK(diff(p, 1) == pow(x, 2) * y * Rational(3) + RationalPoly::constant(2, 5));
    CHECK(diff(p, 2) == pow(x, 3));
    CHECK(diff(diff(diff(diff(p, 1), 1), 1), 1).is_zero());
    CHECK_THROWS_AS(diff(p, 3), DomainError);
}

TEST_CASE("composition")
{
    const auto u = RationalPoly::variable(1, 1);
    const auto f = pow(RationalPoly::variable(2, 1), 2) * RationalPoly::variable(2, 2);
    const auto h = compose(f, {u + RationalPoly::constant(1, 1), u * Rational(2)});
    // (u + 1)^2 * 2u
    CHECK(h == pow(u + RationalPoly::constant(1, 1), 2) * u * Rational(2));
    CHECK_THROWS_AS(compose(f, {u}), DomainError);
    CHECK_THROWS_AS(compose(f, {u, RationalPoly::variable(2, 1)}), DomainError);
}

TEST_CASE("evaluation checks arity")
{
    CHECK_THROWS_AS(eval(RationalPoly::variable(2, 1), {Rational(1)}), DomainError);
    CHECK_THROWS_AS(RationalPoly::variable(2, 3), DomainError);
}
