#include <jetprolong/errors.hpp>
#include <jetprolong/inductive.hpp>
#include <jetprolong/parallel.hpp>

#include <algorithm>
#include <sstream>
#include <string>

namespace jetprolong
{

namespace
{

std::string tuple_text(int j, const std::vector<int> &idx)
{
    std::ostringstream os;
    os << "Y^" << j << '_';
    for (int i : idx) {
        os << i;
    }
    return os.str();
}

// Ordered tuples of length len over 1..n; only nondecreasing ones unless all_orders.
std::vector<std::vector<int>> tuples(int n, int len, bool all_orders)
{
    std::vector<std::vector<int>> out{{}};
    for (int step = 0; step < len; ++step) {
        std::vector<std::vector<int>> next;
        for (const auto &t : out) {
            for (int i = all_orders || t.empty() ? 1 : t.back(); i <= n; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(std::move(u));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

const CoefficientPolynomial &ProlongationTable::entry(int j, const std::vector<int> &indices) const
{
    if (j < 1 || j > m_dims.m) {
        throw DimensionError("component " + std::to_string(j) + " outside 1.." + std::to_string(m_dims.m));
    }
    for (int i : indices) {
        if (i < 1 || i > m_dims.n) {
            throw DimensionError("index " + std::to_string(i) + " outside 1.." + std::to_string(m_dims.n));
        }
    }
    if (auto it = m_entries.find({j, indices}); it != m_entries.end()) {
        return it->second;
    }
    auto key = indices;
    std::sort(key.begin(), key.end());
    if (auto it = m_entries.find({j, key}); it != m_entries.end()) {
        return it->second;
    }
    throw LookupError("entry " + tuple_text(j, indices) + " was not computed");
}

void ProlongationTable::insert(int j, std::vector<int> indices, CoefficientPolynomial p)
{
    m_entries.insert_or_assign({j, std::move(indices)}, std::move(p));
}

CoefficientPolynomial inductive_step(const CoefficientPolynomial &prev, int j, const std::vector<int> &prev_indices,
                                     int i)
{
    const Dims &d = prev.dims();
    CoefficientPolynomial out = total_derivative(prev, i);
    // Subtract sum_k D_i(X^k) y^j_{I,k} with D_i X^k = X^k_{x^i} + sum_l y^l_i X^k_{y^l}.
    for (int k = 1; k <= d.n; ++k) {
        auto idx = prev_indices;
        idx.push_back(k);
        const JetMonomial base(std::vector<JetVariable>{JetVariable(j, idx)});
        const auto Xk = DerivativeSymbol::X(k);
        out.add_term(base, Xk.with_x(i), -1);
        for (int l = 1; l <= d.m; ++l) {
            out.add_term(base.times(JetVariable(l, {i})), Xk.with_y(l), -1);
        }
    }
    return out;
}

ProlongationTable prolong_inductive(const Dims &dims, int kappa, const InductiveOptions &opts)
{
    if (kappa < 1) {
        throw DomainError("kappa must be at least 1");
    }
    ProlongationTable table(dims, kappa);
    std::vector<CoefficientPolynomial> base;
    for (int j = 1; j <= dims.m; ++j) {
        base.push_back(constant_polynomial(dims, DerivativeSymbol::Y(j)));
    }
    for (int len = 1; len <= kappa; ++len) {
        const auto level = tuples(dims.n, len, opts.verify_symmetry);
        const std::size_t count = level.size() * static_cast<std::size_t>(dims.m);
        std::vector<CoefficientPolynomial> results(count, CoefficientPolynomial(dims));
        parallel_for(count, opts.jobs, [&](std::size_t c) {
            const int j = static_cast<int>(c / level.size()) + 1;
            const auto &t = level[c % level.size()];
            std::vector<int> prefix(t.begin(), t.end() - 1);
            const auto &prev = len == 1 ? base[static_cast<std::size_t>(j - 1)] : table.entries().at({j, prefix});
            results[c] = inductive_step(prev, j, prefix, t.back());
        });
        for (std::size_t c = 0; c < count; ++c) {
            const int j = static_cast<int>(c / level.size()) + 1;
            table.insert(j, level[c % level.size()], std::move(results[c]));
        }
        if (opts.verify_symmetry) {
            for (int j = 1; j <= dims.m; ++j) {
                for (const auto &t : level) {
                    auto s = t;
                    std::sort(s.begin(), s.end());
                    if (!(table.entries().at({j, t}) == table.entries().at({j, s}))) {
                        throw VerificationError("coefficients " + tuple_text(j, t) + " and " + tuple_text(j, s) +
                                                " differ");
                    }
                }
            }
        }
    }
    return table;
}

} // namespace jetprolong
