#include <doctest.h>

#include <jetprolong/emitter.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/inductive.hpp>

using namespace jetprolong;

TEST_CASE("first-order coefficient, one of each variable")
{
    const auto t = prolong_inductive(Dims(1, 1), 1);
    CHECK(to_text(t.entry(1, {1})) == "Y_x + [Y_y - X_x] y_1 + [-X_y] y_1^2");
}

TEST_CASE("entries are symmetric in their indices")
{
    for (auto [n, m, kappa] : {std::tuple{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {3, 2, 2}}) {
        CAPTURE(n);
        CAPTURE(m);
        // throws VerificationError on any asymmetry
        const auto full = prolong_inductive(Dims(n, m), kappa, {.verify_symmetry = true, .jobs = 2});
        const auto sorted = prolong_inductive(Dims(n, m), kappa);
        for (const auto &[key, p] : full.entries()) {
            CHECK(sorted.entry(key.first, key.second) == p);
        }
    }
}

TEST_CASE("lookup errors")
{
    const auto t = prolong_inductive(Dims(2, 2), 2);
    CHECK_NOTHROW(t.entry(2, {2, 1}));
    CHECK_THROWS_AS(t.entry(1, {1, 1, 1}), LookupError);
    CHECK_THROWS_AS(t.entry(1, {}), LookupError);
    CHECK_THROWS_AS(t.entry(3, {1}), DimensionError);
    CHECK_THROWS_AS(t.entry(1, {0}), DimensionError);
    CHECK_THROWS_AS(prolong_inductive(Dims(1, 1), 0), DomainError);
}

TEST_CASE("one recursion step by hand")
{
    const Dims d(1, 1);
    const auto y = constant_polynomial(d, DerivativeSymbol::Y(1));
    const auto step = inductive_step(y, 1, {}, 1);
    CHECK(step == prolong_inductive(d, 1).entry(1, {1}));
}

TEST_CASE("thread count does not change the table")
{
    const auto a = prolong_inductive(Dims(2, 2), 3, {.verify_symmetry = false, .jobs = 1});
    const auto b = prolong_inductive(Dims(2, 2), 3, {.verify_symmetry = false, .jobs = 4});
    CHECK(a.entries() == b.entries());
}
