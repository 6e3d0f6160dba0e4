#include <doctest.h>

#include <jetprolong/closed_form.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/jet_algebra.hpp>

#include "notation.hpp"

using namespace jetprolong;

namespace
{

JetMonomial mono(std::vector<JetVariable> v)
{
    return JetMonomial(std::move(v));
}

} // namespace

TEST_CASE("dims and symbols reject bad input")
{
    CHECK_THROWS_AS(Dims(0, 1), DimensionError);
    CHECK_THROWS_AS(Dims(1, -2), DimensionError);
    CHECK_THROWS_AS(JetVariable(1, {}), DomainError);
    CHECK_THROWS_AS(DerivativeSymbol::Y(3).validate(Dims(1, 2)), DimensionError);
    CHECK_THROWS_AS(DerivativeSymbol::X(1, {2}).validate(Dims(1, 1)), DimensionError);
    CHECK_NOTHROW(DerivativeSymbol::X(2, {1, 2}, {1}).validate(Dims(2, 1)));
}

TEST_CASE("jet variables sort their indices")
{
    const JetVariable v(2, {3, 1, 2});
    CHECK(v.indep == std::vector<int>{1, 2, 3});
    CHECK(v.order() == 3);
    CHECK(v.extended(1).indep == std::vector<int>{1, 1, 2, 3});
    // order comes first
    CHECK(JetVariable(2, {1}) < JetVariable(1, {1, 1}));
}

TEST_CASE("monomials are commutative products")
{
    const JetVariable a(1, {1});
    const JetVariable b(1, {1, 2});
    CHECK(mono({a, b}) == mono({b, a}));
    CHECK(mono({a, b, a}).weight() == 4);
    const auto p = mono({a, b, a}).powers();
    REQUIRE(p.size() == 2);
    CHECK(p[0].first == a);
    CHECK(p[0].second == 2);
}

TEST_CASE("canonicalize collects and drops zero terms")
{
    const Dims d(1, 1);
    const JetVariable y1(1, {1});
    std::vector<RawTerm> raw = {
        {{y1}, DerivativeSymbol::Y(1, {}, {1}), 2},
        {{y1}, DerivativeSymbol::Y(1, {}, {1}), -2},
        {{y1, y1}, DerivativeSymbol::X(1, {1}), 3},
        {{y1, y1}, DerivativeSymbol::X(1, {1}), 4},
    };
    const auto p = canonicalize(d, raw);
    REQUIRE(p.size() == 1);
    CHECK(coefficient_of(p, mono({y1, y1})).at(DerivativeSymbol::X(1, {1})) == 7);
    CHECK(coefficient_of(p, mono({y1})).empty());

    std::vector<RawTerm> bad = {{{JetVariable(2, {1})}, DerivativeSymbol::Y(1), 1}};
    CHECK_THROWS_AS(canonicalize(d, bad), DimensionError);
}

TEST_CASE("raw third-order expansion collects to the tabulated form")
{
    const auto all = fixture::read_sections(JETPROLONG_FIXTURES "/scalar.txt");
    const auto raw = fixture::scalar(fixture::section(all, "Y3-unsimplified"), 3);
    CHECK(raw == fixture::scalar(fixture::section(all, "Y3"), 3));
    CHECK(raw == prolongation_closed_scalar(3));
}

TEST_CASE("total derivatives commute")
{
    const Dims d(3, 2);
    const auto p = prolongation_closed({d, 2, {1, 3}});
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) {
            CHECK(total_derivative(total_derivative(p, i), k) == total_derivative(total_derivative(p, k), i));
        }
    }
    CHECK_THROWS_AS(total_derivative(p, 4), DimensionError);
}

TEST_CASE("total derivative obeys the product rule")
{
    const Dims d(2, 2);
    const auto a = monomial_polynomial(d, mono({JetVariable(1, {2}), JetVariable(2, {1, 2})}), 3);
    const auto b = prolongation_closed({d, 1, {1, 2}});
    for (int i = 1; i <= 2; ++i) {
        CHECK(total_derivative(mul(a, b), i) ==
              add(mul(total_derivative(a, i), b), mul(a, total_derivative(b, i))));
    }
}

TEST_CASE("arithmetic")
{
    const Dims d(1, 1);
    const auto y = constant_polynomial(d, DerivativeSymbol::Y(1));
    const auto x = constant_polynomial(d, DerivativeSymbol::X(1));
    CHECK(subtract(add(y, x), x) == y);
    CHECK(scale(y, 0).is_zero());
    CHECK(subtract(y, y).is_zero());
    CHECK(add(y, y) == scale(y, 2));
    CHECK_THROWS_AS(mul(y, x), LinearityError);
    CHECK_THROWS_AS(add(y, CoefficientPolynomial(Dims(2, 1))), DimensionError);
}

TEST_CASE("first total derivative of the symbol Y")
{
    const Dims d(1, 1);
    const auto p = total_derivative(constant_polynomial(d, DerivativeSymbol::Y(1)), 1);
    CHECK(p.symbol_count() == 2);
    CHECK(coefficient_of(p, JetMonomial{}).at(DerivativeSymbol::Y(1, {1})) == 1);
    CHECK(coefficient_of(p, mono({JetVariable(1, {1})})).at(DerivativeSymbol::Y(1, {}, {1})) == 1);
}
