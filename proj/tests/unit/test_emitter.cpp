#include <doctest.h>

#include <jetprolong/closed_form.hpp>
#include <jetprolong/emitter.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/faa_di_bruno.hpp>

using namespace jetprolong;

TEST_CASE("scalar latex")
{
    const auto p = prolongation_closed_scalar(1);
    CHECK(to_latex(p) == "\\mathcal{Y}_x + [\\mathcal{Y}_y - \\mathcal{X}_x] y_1 + [-\\mathcal{X}_y] (y_1)^2");
    CHECK(to_text(p) == "Y_x + [Y_y - X_x] y_1 + [-X_y] y_1^2");
    const auto six = to_latex(prolongation_closed_scalar(6));
    CHECK(six.find("[6\\mathcal{Y}_{x^5y} - \\mathcal{X}_{x^6}] y_1") != std::string::npos);
    CHECK(six.find("[60\\mathcal{Y}_{y^3} - 360\\mathcal{X}_{xy^2}] y_1 y_2 y_3") != std::string::npos);
}

TEST_CASE("compact latex")
{
    const auto p = prolongation_closed_scalar(1);
    CHECK(to_latex(p, LatexStyle::compact) ==
          "\\mathcal{Y}_x + \\mathcal{Y}_y y_1 - \\mathcal{X}_x y_1 - \\mathcal{X}_y (y_1)^2");
}

TEST_CASE("indexed latex")
{
    const Dims d(2, 2);
    CHECK(to_latex(DerivativeSymbol::Y(1, {1, 2}, {2}), d) == "\\mathcal{Y}^{1}_{x^{1}x^{2}y^{2}}");
    CHECK(to_latex(DerivativeSymbol::X(2), d) == "\\mathcal{X}^{2}");
    CHECK(to_latex(JetMonomial({JetVariable(2, {1, 2}), JetVariable(2, {1, 2})}), d) == "(y^{2}_{1,2})^2");
}

TEST_CASE("composite derivative output")
{
    CHECK(to_latex(faa_closed_scalar(2)) == "f_2 (g_1)^2 + f_1 g_2");
    CHECK(to_text(faa_closed(Dims(2, 1), {1, 2})) == "f_{1,1} g^1_{1} g^1_{2} + f_{1} g^1_{1,2}");
}

TEST_CASE("zero polynomials")
{
    CHECK(to_latex(CoefficientPolynomial(Dims(1, 1))) == "0");
    CHECK(to_json(CoefficientPolynomial(Dims(1, 1))) == "[]");
    CHECK(to_json(FaaPolynomial(Dims(1, 1))) == "[]");
}

TEST_CASE("json round trip")
{
    for (auto [n, m, kappa] : {std::tuple{1, 1, 5}, {2, 2, 3}, {3, 1, 2}}) {
        const Dims d(n, m);
        const auto p = prolongation_closed({d, m, std::vector<int>(static_cast<std::size_t>(kappa), n)});
        const auto text = to_json(p);
        CHECK(polynomial_from_json(text, d) == p);
        CHECK(to_json(polynomial_from_json(text, d)) == text);
        const auto f = faa_closed(d, std::vector<int>(static_cast<std::size_t>(kappa), 1));
        CHECK(faa_from_json(to_json(f), d) == f);
    }
}

TEST_CASE("json shape")
{
    const auto text = to_json(prolongation_closed_scalar(1));
    CHECK(text == R"([{"coeff":[[["Y",1,[1],[]],1]],"monomial":[]},)"
                  R"({"coeff":[[["Y",1,[],[1]],1],[["X",1,[1],[]],-1]],"monomial":[[1,[1]]]},)"
                  R"({"coeff":[[["X",1,[],[1]],-1]],"monomial":[[1,[1]],[1,[1]]]}])");
}

TEST_CASE("large integers survive json")
{
    CoefficientPolynomial p(Dims(1, 1));
    p.add_term(JetMonomial{}, DerivativeSymbol::Y(1), BigInt("123456789012345678901234567890"));
    const auto text = to_json(p);
    CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
    CHECK(polynomial_from_json(text, Dims(1, 1)) == p);
}

TEST_CASE("json input errors")
{
    CHECK_THROWS_AS(polynomial_from_json("{", Dims(1, 1)), DomainError);
    CHECK_THROWS_AS(polynomial_from_json(R"([{"monomial":[],"coeff":[[["Z"],1]]}])", Dims(1, 1)), DomainError);
    CHECK_THROWS_AS(polynomial_from_json(R"([{"monomial":[[2,[1]]],"coeff":[[["1"],1]]}])", Dims(1, 1)),
                    DimensionError);
}
