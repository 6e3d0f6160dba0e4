#ifndef JETPROLONG_JET_ALGEBRA_HPP
#define JETPROLONG_JET_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include <jetprolong/numeric.hpp>

namespace jetprolong
{

// n independent variables x^1..x^n, m dependent variables y^1..y^m.
struct Dims {
    int n;
    int m;

    Dims(int n_, int m_);

    bool operator==(const Dims &) const = default;
};

// unit is the pure integer 1; Y stands for the vertical field components, X for the horizontal ones.
enum class Head : std::uint8_t { unit = 0, Y = 1, X = 2 };

// Partial derivative of Y^j or X^k by the multisets of x- and y-indices.
struct DerivativeSymbol {
    Head head = Head::unit;
    int component = 0;
    std::vector<int> x_indices;
    std::vector<int> y_indices;

    static DerivativeSymbol unit();
    static DerivativeSymbol Y(int j, std::vector<int> x = {}, std::vector<int> y = {});
    static DerivativeSymbol X(int k, std::vector<int> x = {}, std::vector<int> y = {});

    bool is_unit() const
    {
        return head == Head::unit;
    }
    int x_order() const
    {
        return static_cast<int>(x_indices.size());
    }
    int y_order() const
    {
        return static_cast<int>(y_indices.size());
    }

    DerivativeSymbol with_x(int i) const;
    DerivativeSymbol with_y(int l) const;

    void validate(const Dims &d) const;

    std::strong_ordering operator<=>(const DerivativeSymbol &) const = default;
    bool operator==(const DerivativeSymbol &) const = default;
};

// y^component_{indep}; indep is a nonempty sorted multiset.
struct JetVariable {
    int component = 1;
    std::vector<int> indep;

    JetVariable() = default;
    JetVariable(int component_, std::vector<int> indep_);

    int order() const
    {
        return static_cast<int>(indep.size());
    }
    JetVariable extended(int i) const;
    void validate(const Dims &d) const;

    // Order first, then the sorted index list, then the dependent index.
    std::strong_ordering operator<=>(const JetVariable &o) const;
    bool operator==(const JetVariable &) const = default;
};

// Product of jet variables, kept as a sorted list with repetition.
class JetMonomial
{
public:
    JetMonomial() = default;
    explicit JetMonomial(std::vector<JetVariable> factors);

    const std::vector<JetVariable> &factors() const
    {
        return m_factors;
    }
    int degree() const
    {
        return static_cast<int>(m_factors.size());
    }
    // Sum of the orders of the factors.
    int weight() const
    {
        return m_weight;
    }
    bool is_constant() const
    {
        return m_factors.empty();
    }

    JetMonomial times(const JetVariable &v) const;
    JetMonomial times(const JetMonomial &o) const;
    JetMonomial replaced(std::size_t pos, const JetVariable &v) const;

    // Grouped view: distinct variables with their multiplicities.
    std::vector<std::pair<JetVariable, int>> powers() const;

    std::strong_ordering operator<=>(const JetMonomial &o) const;
    bool operator==(const JetMonomial &o) const
    {
        return m_factors == o.m_factors;
    }

private:
    std::vector<JetVariable> m_factors;
    int m_weight = 0;
};

using SymbolCombination = std::map<DerivativeSymbol, BigInt>;

// Finite sum of monomials, each carrying an integer combination of derivative symbols.
// Never stores a zero coefficient or an empty combination.
class CoefficientPolynomial
{
public:
    using Terms = std::map<JetMonomial, SymbolCombination>;

    explicit CoefficientPolynomial(Dims dims);

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
    // Number of (monomial, symbol) pairs.
    std::size_t symbol_count() const;

    // Unchecked accumulation; callers inside the library produce in-range indices.
    void add_term(const JetMonomial &mono, const DerivativeSymbol &sym, const BigInt &coeff);
    void add_combination(const JetMonomial &mono, const SymbolCombination &comb, const BigInt &factor = 1);
    void add_polynomial(const CoefficientPolynomial &o, const BigInt &factor = 1);

    bool operator==(const CoefficientPolynomial &o) const
    {
        return m_dims == o.m_dims && m_terms == o.m_terms;
    }

private:
    Dims m_dims;
    Terms m_terms;
};

struct RawTerm {
    std::vector<JetVariable> monomial;
    DerivativeSymbol symbol;
    BigInt coeff;
};

// Sort indices and factors, merge duplicates, drop zeros. Throws DimensionError on out-of-range indices.
CoefficientPolynomial canonicalize(const Dims &dims, const std::vector<RawTerm> &terms);

CoefficientPolynomial add(const CoefficientPolynomial &a, const CoefficientPolynomial &b);
CoefficientPolynomial subtract(const CoefficientPolynomial &a, const CoefficientPolynomial &b);
CoefficientPolynomial scale(const CoefficientPolynomial &p, const BigInt &c);

// Throws LinearityError when two non-unit symbols would be multiplied.
CoefficientPolynomial mul(const CoefficientPolynomial &a, const CoefficientPolynomial &b);

// D_i S = S_{x^i} + sum_l y^l_i S_{y^l}, D_i y^l_K = y^l_{K+i}, extended by Leibniz.
CoefficientPolynomial total_derivative(const CoefficientPolynomial &p, int i);

// Combination attached to a monomial; empty when absent.
SymbolCombination coefficient_of(const CoefficientPolynomial &p, const JetMonomial &mono);

// Polynomial holding a single symbol times the constant monomial.
CoefficientPolynomial constant_polynomial(const Dims &dims, const DerivativeSymbol &sym, const BigInt &c = 1);

// Polynomial holding a single monomial with integer coefficient.
CoefficientPolynomial monomial_polynomial(const Dims &dims, const JetMonomial &mono, const BigInt &c = 1);

} // namespace jetprolong

#endif
