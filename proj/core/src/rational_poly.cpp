#include <jetprolong/errors.hpp>
#include <jetprolong/rational_poly.hpp>

#include <string>

namespace jetprolong
{

RationalPoly::RationalPoly(int arity) : m_arity(arity)
{
    if (arity < 0) {
        throw DomainError("negative arity");
    }
}

RationalPoly RationalPoly::constant(int arity, const Rational &c)
{
    RationalPoly p(arity);
    p.add_term(Exponents(static_cast<std::size_t>(arity), 0), c);
    return p;
}

RationalPoly RationalPoly::variable(int arity, int var)
{
    if (var < 1 || var > arity) {
        throw DomainError("variable " + std::to_string(var) + " outside 1.." + std::to_string(arity));
    }
    RationalPoly p(arity);
    Exponents e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(var - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

void RationalPoly::add_term(const Exponents &e, const Rational &c)
{
    if (static_cast<int>(e.size()) != m_arity) {
        throw DomainError("exponent vector has wrong length");
    }
    if (c == 0) {
        return;
    }
    auto [it, fresh] = m_terms.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

RationalPoly &RationalPoly::operator+=(const RationalPoly &o)
{
    if (o.m_arity != m_arity) {
        throw DomainError("arity mismatch");
    }
    for (const auto &[e, c] : o.m_terms) {
        add_term(e, c);
    }
    return *this;
}

RationalPoly RationalPoly::operator+(const RationalPoly &o) const
{
    RationalPoly r = *this;
    r += o;
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly &o) const
{
    return *this + o * Rational(-1);
}

RationalPoly RationalPoly::operator*(const RationalPoly &o) const
{
    if (o.m_arity != m_arity) {
        throw DomainError("arity mismatch");
    }
    RationalPoly r(m_arity);
    for (const auto &[ea, ca] : m_terms) {
        for (const auto &[eb, cb] : o.m_terms) {
            Exponents e = ea;
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] += eb[v];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

RationalPoly RationalPoly::operator*(const Rational &c) const
{
    RationalPoly r(m_arity);
    for (const auto &[e, x] : m_terms) {
        r.add_term(e, x * c);
    }
    return r;
}

RationalPoly pow(const RationalPoly &p, int e)
{
    if (e < 0) {
        throw DomainError("negative power");
    }
    RationalPoly r = RationalPoly::constant(p.arity(), 1);
    RationalPoly b = p;
    while (e > 0) {
        if (e & 1) {
            r = r * b;
        }
        e >>= 1;
        if (e > 0) {
            b = b * b;
        }
    }
    return r;
}

RationalPoly compose(const RationalPoly &f, const std::vector<RationalPoly> &g)
{
    if (static_cast<int>(g.size()) != f.arity()) {
        throw DomainError("compose needs " + std::to_string(f.arity()) + " inner polynomials");
    }
    const int inner = g.empty() ? 0 : g.front().arity();
    for (const auto &q : g) {
        if (q.arity() != inner) {
            throw DomainError("inner polynomials have different arities");
        }
    }
    RationalPoly out(inner);
    for (const auto &[e, c] : f.terms()) {
        RationalPoly t = RationalPoly::constant(inner, c);
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] > 0) {
                t = t * pow(g[v], e[v]);
            }
        }
        out += t;
    }
    return out;
}

RationalPoly diff(const RationalPoly &p, int var)
{
    if (var < 1 || var > p.arity()) {
        throw DomainError("variable " + std::to_string(var) + " outside 1.." + std::to_string(p.arity()));
    }
    const auto v = static_cast<std::size_t>(var - 1);
    RationalPoly out(p.arity());
    for (const auto &[e, c] : p.terms()) {
        if (e[v] == 0) {
            continue;
        }
        auto d = e;
        --d[v];
        out.add_term(d, c * e[v]);
    }
    return out;
}

Rational eval(const RationalPoly &p, const std::vector<Rational> &point)
{
    if (static_cast<int>(point.size()) != p.arity()) {
        throw DomainError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                          std::to_string(p.arity()));
    }
    Rational sum = 0;
    for (const auto &[e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (int r = 0; r < e[v]; ++r) {
                t *= point[v];
            }
        }
        sum += t;
    }
    return sum;
}

} // namespace jetprolong
