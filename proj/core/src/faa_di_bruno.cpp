#include <jetprolong/errors.hpp>
#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/parallel.hpp>

#include <algorithm>
#include <string>

namespace jetprolong
{

GSymbol::GSymbol(int component_, std::vector<int> x) : component(component_), x_indices(std::move(x))
{
    std::sort(x_indices.begin(), x_indices.end());
}

std::strong_ordering GSymbol::operator<=>(const GSymbol &o) const
{
    if (auto c = x_indices.size() <=> o.x_indices.size(); c != 0) {
        return c;
    }
    if (auto c = x_indices <=> o.x_indices; c != 0) {
        return c;
    }
    return component <=> o.component;
}

FaaMonomial::FaaMonomial(FSymbol f_, std::vector<GSymbol> g_) : f(std::move(f_)), g(std::move(g_))
{
    std::sort(f.y_indices.begin(), f.y_indices.end());
    std::sort(g.begin(), g.end());
}

std::strong_ordering FaaMonomial::operator<=>(const FaaMonomial &o) const
{
    if (auto c = g.size() <=> o.g.size(); c != 0) {
        return c;
    }
    if (auto c = g <=> o.g; c != 0) {
        return c;
    }
    return f <=> o.f;
}

void FaaPolynomial::add_term(const FaaMonomial &mono, const BigInt &c)
{
    if (c == 0) {
        return;
    }
    auto [it, fresh] = m_terms.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

namespace
{

void check_indices(const Dims &dims, const std::vector<int> &indices)
{
    if (indices.empty()) {
        throw DomainError("kappa must be at least 1");
    }
    for (int i : indices) {
        if (i < 1 || i > dims.n) {
            throw DimensionError("index " + std::to_string(i) + " outside 1.." + std::to_string(dims.n));
        }
    }
}

bool next_assignment(std::vector<int> &l, int m)
{
    for (std::size_t g = l.size(); g-- > 0;) {
        if (l[g] < m) {
            ++l[g];
            return true;
        }
        l[g] = 1;
    }
    return false;
}

} // namespace

FaaPolynomial faa_closed(const Dims &dims, const std::vector<int> &indices, const FaaOptions &opts)
{
    check_indices(dims, indices);
    const int kappa = static_cast<int>(indices.size());
    const auto specs = weight_specs(kappa, SpecKind::faa);
    std::vector<FaaPolynomial> parts(specs.size(), FaaPolynomial(dims));
    parallel_for(specs.size(), opts.jobs, [&](std::size_t s) {
        const auto &spec = specs[s];
        const auto lay = slot_layout(spec);
        const auto reps = opts.transversal ? opts.transversal(spec) : coset_transversal(spec);
        const std::size_t H = lay.groups.size();
        for (const auto &rep : reps) {
            std::vector<std::vector<int>> args(H);
            for (std::size_t g = 0; g < H; ++g) {
                for (int slot : lay.group_slots[g]) {
                    args[g].push_back(
                        indices[static_cast<std::size_t>(rep.position_of_slot[static_cast<std::size_t>(slot)])]);
                }
            }
            std::vector<int> l(H, 1);
            do {
                std::vector<GSymbol> gs;
                gs.reserve(H);
                for (std::size_t g = 0; g < H; ++g) {
                    gs.emplace_back(l[g], args[g]);
                }
                parts[s].add_term(FaaMonomial(FSymbol{l}, std::move(gs)), 1);
            } while (next_assignment(l, dims.m));
        }
    });
    FaaPolynomial out(dims);
    for (const auto &p : parts) {
        for (const auto &[mono, c] : p.terms()) {
            out.add_term(mono, c);
        }
    }
    return out;
}

FaaPolynomial faa_inductive(const Dims &dims, const std::vector<int> &indices)
{
    check_indices(dims, indices);
    FaaPolynomial h(dims);
    for (int l = 1; l <= dims.m; ++l) {
        h.add_term(FaaMonomial(FSymbol{{l}}, {GSymbol(l, {indices.front()})}), 1);
    }
    for (std::size_t step = 1; step < indices.size(); ++step) {
        const int i = indices[step];
        FaaPolynomial next(dims);
        for (const auto &[mono, c] : h.terms()) {
            // Chain rule on the outer factor.
            for (int l = 1; l <= dims.m; ++l) {
                FSymbol f = mono.f;
                f.y_indices.push_back(l);
                auto gs = mono.g;
                gs.emplace_back(l, std::vector<int>{i});
                next.add_term(FaaMonomial(std::move(f), std::move(gs)), c);
            }
            // Product rule on the inner factors.
            for (std::size_t pos = 0; pos < mono.g.size(); ++pos) {
                auto gs = mono.g;
                gs[pos].x_indices.push_back(i);
                std::sort(gs[pos].x_indices.begin(), gs[pos].x_indices.end());
                next.add_term(FaaMonomial(mono.f, std::move(gs)), c);
            }
        }
        h = std::move(next);
    }
    return h;
}

FaaPolynomial extract_faa(const CoefficientPolynomial &p, int kappa)
{
    FaaPolynomial out(p.dims());
    for (const auto &[mono, comb] : p.terms()) {
        if (mono.weight() != kappa) {
            continue;
        }
        std::vector<GSymbol> gs;
        for (const auto &v : mono.factors()) {
            gs.emplace_back(v.component, v.indep);
        }
        for (const auto &[sym, c] : comb) {
            if (sym.head != Head::Y) {
                continue;
            }
            if (!sym.x_indices.empty()) {
                throw VerificationError("top-weight vertical symbol carries x-derivatives");
            }
            out.add_term(FaaMonomial(FSymbol{sym.y_indices}, gs), c);
        }
    }
    return out;
}

Rational faa_numeric_check(const RationalPoly &f, const std::vector<RationalPoly> &g, const std::vector<int> &indices,
                           const std::vector<Rational> &point)
{
    if (g.empty() || static_cast<int>(g.size()) != f.arity()) {
        throw DomainError("outer arity must equal the number of inner polynomials");
    }
    const int n = g.front().arity();
    const Dims dims(n, f.arity());
    check_indices(dims, indices);

    RationalPoly h = compose(f, g);
    for (int i : indices) {
        h = diff(h, i);
    }
    const Rational direct = eval(h, point);

    std::vector<Rational> inner;
    for (const auto &q : g) {
        inner.push_back(eval(q, point));
    }
    std::map<FSymbol, Rational> f_values;
    std::map<GSymbol, Rational> g_values;
    Rational closed = 0;
    const FaaPolynomial sum = faa_closed(dims, indices);
    for (const auto &[mono, c] : sum.terms()) {
        auto fit = f_values.find(mono.f);
        if (fit == f_values.end()) {
            RationalPoly d = f;
            for (int l : mono.f.y_indices) {
                d = diff(d, l);
            }
            fit = f_values.emplace(mono.f, eval(d, inner)).first;
        }
        Rational t = Rational(c) * fit->second;
        for (const auto &gs : mono.g) {
            auto git = g_values.find(gs);
            if (git == g_values.end()) {
                RationalPoly d = g[static_cast<std::size_t>(gs.component - 1)];
                for (int i : gs.x_indices) {
                    d = diff(d, i);
                }
                git = g_values.emplace(gs, eval(d, point)).first;
            }
            t *= git->second;
        }
        closed += t;
    }
    return closed - direct;
}

FaaPolynomial faa_closed_scalar(int kappa)
{
    if (kappa < 1) {
        throw DomainError("kappa must be at least 1");
    }
    FaaPolynomial out(Dims(1, 1));
    for (const auto &spec : weight_specs(kappa, SpecKind::faa)) {
        BigInt denom = 1;
        std::vector<GSymbol> gs;
        for (int e = 0; e < spec.d(); ++e) {
            const auto ue = static_cast<std::size_t>(e);
            denom *= pow(factorial(spec.lambda[ue]), static_cast<unsigned>(spec.mu[ue])) * factorial(spec.mu[ue]);
            for (int c = 0; c < spec.mu[ue]; ++c) {
                gs.emplace_back(1, std::vector<int>(static_cast<std::size_t>(spec.lambda[ue]), 1));
            }
        }
        const BigInt num = factorial(kappa);
        if (num % denom != 0) {
            throw VerificationError("non-integral coefficient for spec " + to_string(spec));
        }
        out.add_term(FaaMonomial(FSymbol{std::vector<int>(static_cast<std::size_t>(spec.H()), 1)}, std::move(gs)),
                     num / denom);
    }
    return out;
}

} // namespace jetprolong
