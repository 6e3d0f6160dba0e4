#include <jetprolong/errors.hpp>
#include <jetprolong/jet_algebra.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace jetprolong
{

Dims::Dims(int n_, int m_) : n(n_), m(m_)
{
    if (n < 1 || m < 1) {
        throw DimensionError("dimensions must be positive, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
}

namespace
{

void check_range(int v, int hi, const char *what)
{
    if (v < 1 || v > hi) {
        throw DimensionError(std::string(what) + " index " + std::to_string(v) + " outside 1.." + std::to_string(hi));
    }
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> inserted(const std::vector<int> &v, int i)
{
    std::vector<int> out;
    out.reserve(v.size() + 1);
    auto it = std::upper_bound(v.begin(), v.end(), i);
    out.insert(out.end(), v.begin(), it);
    out.push_back(i);
    out.insert(out.end(), it, v.end());
    return out;
}

} // namespace

DerivativeSymbol DerivativeSymbol::unit()
{
    return {};
}

DerivativeSymbol DerivativeSymbol::Y(int j, std::vector<int> x, std::vector<int> y)
{
    return {Head::Y, j, sorted(std::move(x)), sorted(std::move(y))};
}

DerivativeSymbol DerivativeSymbol::X(int k, std::vector<int> x, std::vector<int> y)
{
    return {Head::X, k, sorted(std::move(x)), sorted(std::move(y))};
}

DerivativeSymbol DerivativeSymbol::with_x(int i) const
{
    DerivativeSymbol s = *this;
    s.x_indices = inserted(x_indices, i);
    return s;
}

DerivativeSymbol DerivativeSymbol::with_y(int l) const
{
    DerivativeSymbol s = *this;
    s.y_indices = inserted(y_indices, l);
    return s;
}

void DerivativeSymbol::validate(const Dims &d) const
{
    switch (head) {
    case Head::unit:
        if (component != 0 || !x_indices.empty() || !y_indices.empty()) {
            throw DomainError("unit symbol carries indices");
        }
        return;
    case Head::Y:
        check_range(component, d.m, "Y component");
        break;
    case Head::X:
        check_range(component, d.n, "X component");
        break;
    }
    for (int i : x_indices) {
        check_range(i, d.n, "x");
    }
    for (int l : y_indices) {
        check_range(l, d.m, "y");
    }
}

JetVariable::JetVariable(int component_, std::vector<int> indep_) : component(component_), indep(sorted(std::move(indep_)))
{
    if (indep.empty()) {
        throw DomainError("jet variable needs at least one derivative index");
    }
}

JetVariable JetVariable::extended(int i) const
{
    JetVariable v;
    v.component = component;
    v.indep = inserted(indep, i);
    return v;
}

void JetVariable::validate(const Dims &d) const
{
    check_range(component, d.m, "dependent");
    for (int i : indep) {
        check_range(i, d.n, "x");
    }
}

std::strong_ordering JetVariable::operator<=>(const JetVariable &o) const
{
    if (auto c = indep.size() <=> o.indep.size(); c != 0) {
        return c;
    }
    if (auto c = indep <=> o.indep; c != 0) {
        return c;
    }
    return component <=> o.component;
}

JetMonomial::JetMonomial(std::vector<JetVariable> factors) : m_factors(std::move(factors))
{
    std::sort(m_factors.begin(), m_factors.end());
    for (const auto &f : m_factors) {
        m_weight += f.order();
    }
}

JetMonomial JetMonomial::times(const JetVariable &v) const
{
    JetMonomial out;
    out.m_factors.reserve(m_factors.size() + 1);
    auto it = std::upper_bound(m_factors.begin(), m_factors.end(), v);
    out.m_factors.insert(out.m_factors.end(), m_factors.begin(), it);
    out.m_factors.push_back(v);
    out.m_factors.insert(out.m_factors.end(), it, m_factors.end());
    out.m_weight = m_weight + v.order();
    return out;
}

JetMonomial JetMonomial::times(const JetMonomial &o) const
{
    JetMonomial out;
    out.m_factors.reserve(m_factors.size() + o.m_factors.size());
    std::merge(m_factors.begin(), m_factors.end(), o.m_factors.begin(), o.m_factors.end(),
               std::back_inserter(out.m_factors));
    out.m_weight = m_weight + o.m_weight;
    return out;
}

JetMonomial JetMonomial::replaced(std::size_t pos, const JetVariable &v) const
{
    std::vector<JetVariable> f = m_factors;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(pos));
    JetMonomial rest;
    rest.m_factors = std::move(f);
    rest.m_weight = m_weight - m_factors[pos].order();
    return rest.times(v);
}

std::vector<std::pair<JetVariable, int>> JetMonomial::powers() const
{
    std::vector<std::pair<JetVariable, int>> out;
    for (const auto &f : m_factors) {
        if (!out.empty() && out.back().first == f) {
            ++out.back().second;
        } else {
            out.emplace_back(f, 1);
        }
    }
    return out;
}

std::strong_ordering JetMonomial::operator<=>(const JetMonomial &o) const
{
    if (auto c = m_weight <=> o.m_weight; c != 0) {
        return c;
    }
    return m_factors <=> o.m_factors;
}

CoefficientPolynomial::CoefficientPolynomial(Dims dims) : m_dims(dims) {}

std::size_t CoefficientPolynomial::symbol_count() const
{
    std::size_t n = 0;
    for (const auto &[mono, comb] : m_terms) {
        n += comb.size();
    }
    return n;
}

void CoefficientPolynomial::add_term(const JetMonomial &mono, const DerivativeSymbol &sym, const BigInt &coeff)
{
    if (coeff == 0) {
        return;
    }
    auto mit = m_terms.find(mono);
    if (mit == m_terms.end()) {
        m_terms.emplace(mono, SymbolCombination{{sym, coeff}});
        return;
    }
    auto &comb = mit->second;
    auto [sit, fresh] = comb.emplace(sym, coeff);
    if (!fresh) {
        sit->second += coeff;
        if (sit->second == 0) {
            comb.erase(sit);
            if (comb.empty()) {
                m_terms.erase(mit);
            }
        }
    }
}

void CoefficientPolynomial::add_combination(const JetMonomial &mono, const SymbolCombination &comb, const BigInt &factor)
{
    for (const auto &[sym, c] : comb) {
        add_term(mono, sym, c * factor);
    }
}

void CoefficientPolynomial::add_polynomial(const CoefficientPolynomial &o, const BigInt &factor)
{
    if (!(o.m_dims == m_dims)) {
        throw DimensionError("polynomials over different dimensions");
    }
    for (const auto &[mono, comb] : o.m_terms) {
        add_combination(mono, comb, factor);
    }
}

CoefficientPolynomial canonicalize(const Dims &dims, const std::vector<RawTerm> &terms)
{
    CoefficientPolynomial out(dims);
    for (const auto &t : terms) {
        t.symbol.validate(dims);
        std::vector<JetVariable> factors;
        factors.reserve(t.monomial.size());
        for (const auto &v : t.monomial) {
            JetVariable s(v.component, v.indep);
            s.validate(dims);
            factors.push_back(std::move(s));
        }
        DerivativeSymbol sym = t.symbol;
        std::sort(sym.x_indices.begin(), sym.x_indices.end());
        std::sort(sym.y_indices.begin(), sym.y_indices.end());
        out.add_term(JetMonomial(std::move(factors)), sym, t.coeff);
    }
    return out;
}

CoefficientPolynomial add(const CoefficientPolynomial &a, const CoefficientPolynomial &b)
{
    CoefficientPolynomial out = a;
    out.add_polynomial(b);
    return out;
}

CoefficientPolynomial subtract(const CoefficientPolynomial &a, const CoefficientPolynomial &b)
{
    CoefficientPolynomial out = a;
    out.add_polynomial(b, -1);
    return out;
}

CoefficientPolynomial scale(const CoefficientPolynomial &p, const BigInt &c)
{
    CoefficientPolynomial out(p.dims());
    if (c == 0) {
        return out;
    }
    out.add_polynomial(p, c);
    return out;
}

CoefficientPolynomial mul(const CoefficientPolynomial &a, const CoefficientPolynomial &b)
{
    if (!(a.dims() == b.dims())) {
        throw DimensionError("polynomials over different dimensions");
    }
    CoefficientPolynomial out(a.dims());
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            JetMonomial mono = ma.times(mb);
            for (const auto &[sa, xa] : ca) {
                for (const auto &[sb, xb] : cb) {
                    if (!sa.is_unit() && !sb.is_unit()) {
                        throw LinearityError("product of two derivative symbols is not linear in the coefficients");
                    }
                    out.add_term(mono, sa.is_unit() ? sb : sa, xa * xb);
                }
            }
        }
    }
    return out;
}

CoefficientPolynomial total_derivative(const CoefficientPolynomial &p, int i)
{
    const Dims &d = p.dims();
    if (i < 1 || i > d.n) {
        throw DimensionError("total derivative index " + std::to_string(i) + " outside 1.." + std::to_string(d.n));
    }
    CoefficientPolynomial out(d);
    for (const auto &[mono, comb] : p.terms()) {
        // Derivative of the coefficients.
        for (const auto &[sym, c] : comb) {
            if (sym.is_unit()) {
                continue;
            }
            out.add_term(mono, sym.with_x(i), c);
            for (int l = 1; l <= d.m; ++l) {
                out.add_term(mono.times(JetVariable(l, {i})), sym.with_y(l), c);
            }
        }
        // Derivative of the monomial, one factor at a time.
        const auto &f = mono.factors();
        for (std::size_t pos = 0; pos < f.size(); ++pos) {
            out.add_combination(mono.replaced(pos, f[pos].extended(i)), comb);
        }
    }
    return out;
}

SymbolCombination coefficient_of(const CoefficientPolynomial &p, const JetMonomial &mono)
{
    auto it = p.terms().find(mono);
    return it == p.terms().end() ? SymbolCombination{} : it->second;
}

CoefficientPolynomial constant_polynomial(const Dims &dims, const DerivativeSymbol &sym, const BigInt &c)
{
    sym.validate(dims);
    CoefficientPolynomial out(dims);
    out.add_term(JetMonomial{}, sym, c);
    return out;
}

CoefficientPolynomial monomial_polynomial(const Dims &dims, const JetMonomial &mono, const BigInt &c)
{
    for (const auto &v : mono.factors()) {
        v.validate(dims);
    }
    CoefficientPolynomial out(dims);
    out.add_term(mono, DerivativeSymbol::unit(), c);
    return out;
}

} // namespace jetprolong
