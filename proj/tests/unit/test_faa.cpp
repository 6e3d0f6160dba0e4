#include <doctest.h>

#include <jetprolong/closed_form.hpp>
#include <jetprolong/emitter.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/oracles.hpp>
#include <jetprolong/verify.hpp>

#include <algorithm>

using namespace jetprolong;

namespace
{

std::vector<std::vector<int>> tuples(int n, int len)
{
    std::vector<std::vector<int>> out{{}};
    for (int s = 0; s < len; ++s) {
        std::vector<std::vector<int>> next;
        for (const auto &t : out) {
            for (int i = 1; i <= n; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(u);
            }
        }
        out = next;
    }
    return out;
}

} // namespace

TEST_CASE("low orders")
{
    CHECK(to_text(faa_closed_scalar(2)) == "f_2 g_1^2 + f_1 g_2");
    CHECK(to_text(faa_closed_scalar(3)) == "f_3 g_1^3 + 3*f_2 g_1 g_2 + f_1 g_3");
}

TEST_CASE("three engines and the prolongation agree")
{
    for (auto [n, m, kmax] : {std::tuple{1, 1, 7}, {2, 1, 4}, {1, 2, 4}, {2, 2, 4}}) {
        const Dims d(n, m);
        for (int kappa = 1; kappa <= kmax; ++kappa) {
            for (const auto &t : tuples(n, kappa)) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(kappa);
                const auto closed = faa_closed(d, t);
                CHECK(first_difference(closed, faa_inductive(d, t)) == std::nullopt);
                CHECK(first_difference(closed, oracle::faa_partitions(d, t)) == std::nullopt);
                if (kappa <= 4) {
                    CHECK(closed == extract_faa(prolongation_closed({d, 1, t}), kappa));
                }
            }
        }
        (void)m;
    }
}

TEST_CASE("scalar sum matches the general sum")
{
    for (int kappa = 1; kappa <= 8; ++kappa) {
        CHECK(faa_closed_scalar(kappa) == faa_closed(Dims(1, 1), std::vector<int>(static_cast<std::size_t>(kappa), 1)));
    }
}

TEST_CASE("term count is the number of set partitions")
{
    // Bell numbers: all indices distinct gives one term per set partition
    const std::vector<std::size_t> bell = {1, 2, 5, 15, 52};
    for (int kappa = 1; kappa <= 5; ++kappa) {
        std::vector<int> t;
        for (int a = 1; a <= kappa; ++a) {
            t.push_back(a);
        }
        CHECK(faa_closed(Dims(kappa, 1), t).size() == bell[static_cast<std::size_t>(kappa - 1)]);
    }
}

TEST_CASE("exact numeric residual")
{
    InstanceGenerator gen(7);
    for (int c = 0; c < 25; ++c) {
        const int n = gen.uniform(1, 3);
        const int m = gen.uniform(1, 2);
        const int kappa = gen.uniform(1, 4);
        const auto inst = random_instance(gen, n, m, kappa);
        CHECK(faa_numeric_check(inst.f, inst.g, inst.indices, inst.point) == 0);
    }
}

TEST_CASE("numeric check on f = y^3, g = x^2")
{
    // h = x^6, h''' = 120 x^3
    const auto f = pow(RationalPoly::variable(1, 1), 3);
    const auto g = pow(RationalPoly::variable(1, 1), 2);
    CHECK(faa_numeric_check(f, {g}, {1, 1, 1}, {Rational(3, 2)}) == 0);
}

TEST_CASE("extract_faa rejects horizontal derivatives in the top weight")
{
    CoefficientPolynomial p(Dims(1, 1));
    p.add_term(JetMonomial({JetVariable(1, {1})}), DerivativeSymbol::Y(1, {1}, {1}), 1);
    CHECK_THROWS_AS(extract_faa(p, 1), VerificationError);
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(faa_closed(Dims(1, 1), {}), DomainError);
    CHECK_THROWS_AS(faa_closed(Dims(1, 1), {2}), DimensionError);
    CHECK_THROWS_AS(faa_numeric_check(RationalPoly(2), {RationalPoly(1)}, {1}, {Rational(0)}), DomainError);
}

TEST_CASE("representative choice does not change the sum")
{
    const Dims d(2, 2);
    const std::vector<int> t{1, 2, 2, 1};
    // reversed block order inside each coset is still a transversal
    const TransversalProvider reversed = [](const WeightSpec &s) {
        auto reps = coset_transversal(s);
        std::reverse(reps.begin(), reps.end());
        return reps;
    };
    CHECK(faa_closed(d, t, {.jobs = 1, .transversal = reversed}) == faa_closed(d, t));
}
