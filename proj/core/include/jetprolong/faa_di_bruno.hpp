#ifndef JETPROLONG_FAA_DI_BRUNO_HPP
#define JETPROLONG_FAA_DI_BRUNO_HPP

#include <compare>
#include <map>
#include <vector>

#include <jetprolong/closed_form.hpp>
#include <jetprolong/jet_algebra.hpp>
#include <jetprolong/rational_poly.hpp>

namespace jetprolong
{

// f_{y^{l_1}..y^{l_r}}: derivative of the outer function by a sorted multiset of its arguments.
struct FSymbol {
    std::vector<int> y_indices;

    std::strong_ordering operator<=>(const FSymbol &) const = default;
    bool operator==(const FSymbol &) const = default;
};

// g^l_{x^{k_1}..x^{k_r}}: derivative of the l-th inner function.
struct GSymbol {
    int component = 1;
    std::vector<int> x_indices;

    GSymbol() = default;
    GSymbol(int component_, std::vector<int> x);

    int order() const
    {
        return static_cast<int>(x_indices.size());
    }
    // Same ordering convention as jet variables.
    std::strong_ordering operator<=>(const GSymbol &o) const;
    bool operator==(const GSymbol &) const = default;
};

struct FaaMonomial {
    FSymbol f;
    std::vector<GSymbol> g; // sorted

    FaaMonomial() = default;
    FaaMonomial(FSymbol f_, std::vector<GSymbol> g_);

    std::strong_ordering operator<=>(const FaaMonomial &o) const;
    bool operator==(const FaaMonomial &) const = default;
};

// Integer combination of f-derivative times g-derivative products; no zero coefficients.
// Here Dims::n counts the variables of the g's and Dims::m the arguments of f.
class FaaPolynomial
{
public:
    using Terms = std::map<FaaMonomial, BigInt>;

    explicit FaaPolynomial(Dims dims) : m_dims(dims) {}

    const Dims &dims() const
    {
        return m_dims;
    }
    const Terms &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    std::size_t size() const
    {
        return m_terms.size();
    }

    void add_term(const FaaMonomial &mono, const BigInt &c);

    bool operator==(const FaaPolynomial &o) const
    {
        return m_dims == o.m_dims && m_terms == o.m_terms;
    }

private:
    Dims m_dims;
    Terms m_terms;
};

struct FaaOptions {
    unsigned jobs = 1;
    TransversalProvider transversal;
};

// d^kappa f(g(x)) / dx^{i_1}..dx^{i_kappa} as a sum over shapes, representatives and arguments.
FaaPolynomial faa_closed(const Dims &dims, const std::vector<int> &indices, const FaaOptions &opts = {});

// Same derivative by repeated application of the chain and product rules.
FaaPolynomial faa_inductive(const Dims &dims, const std::vector<int> &indices);

// Weight-kappa part of a prolongation coefficient read as a composite derivative:
// Y^j_{y^L} becomes f_L, y^l_K becomes g^l_K, horizontal symbols are dropped.
FaaPolynomial extract_faa(const CoefficientPolynomial &p, int kappa);

// Evaluates the closed sum at a point for concrete polynomial f (m variables) and g^1..g^m (n variables)
// and returns it minus the directly differentiated composite. Zero when the formula holds.
Rational faa_numeric_check(const RationalPoly &f, const std::vector<RationalPoly> &g, const std::vector<int> &indices,
                           const std::vector<Rational> &point);

// Weight-kappa sum in the n = m = 1 case: kappa! / prod (lambda_e!)^{mu_e} mu_e! per spec.
FaaPolynomial faa_closed_scalar(int kappa);

} // namespace jetprolong

#endif
