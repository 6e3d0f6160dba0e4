#ifndef JETPROLONG_RATIONAL_POLY_HPP
#define JETPROLONG_RATIONAL_POLY_HPP

#include <map>
#include <vector>

#include <jetprolong/numeric.hpp>

namespace jetprolong
{

// Dense-exponent multivariate polynomial with exact rational coefficients.
class RationalPoly
{
public:
    using Exponents = std::vector<int>;

    explicit RationalPoly(int arity);

    static RationalPoly constant(int arity, const Rational &c);
    // The variable x_{var}, 1-based.
    static RationalPoly variable(int arity, int var);

    int arity() const
    {
        return m_arity;
    }
    const std::map<Exponents, Rational> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    void add_term(const Exponents &e, const Rational &c);

    RationalPoly &operator+=(const RationalPoly &o);
    RationalPoly operator+(const RationalPoly &o) const;
    RationalPoly operator-(const RationalPoly &o) const;
    RationalPoly operator*(const RationalPoly &o) const;
    RationalPoly operator*(const Rational &c) const;

    bool operator==(const RationalPoly &o) const
    {
        return m_arity == o.m_arity && m_terms == o.m_terms;
    }

private:
    int m_arity;
    std::map<Exponents, Rational> m_terms;
};

RationalPoly pow(const RationalPoly &p, int e);

// f(g_1, .., g_r) where f has arity r and all g share one arity. Throws DomainError on mismatch.
RationalPoly compose(const RationalPoly &f, const std::vector<RationalPoly> &g);

// Partial derivative by the 1-based variable var.
RationalPoly diff(const RationalPoly &p, int var);

Rational eval(const RationalPoly &p, const std::vector<Rational> &point);

} // namespace jetprolong

#endif
