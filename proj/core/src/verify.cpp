#include <jetprolong/closed_form.hpp>
#include <jetprolong/emitter.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/inductive.hpp>
#include <jetprolong/oracles.hpp>
#include <jetprolong/parallel.hpp>
#include <jetprolong/verify.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

namespace jetprolong
{

namespace
{

std::string combination_text(const SymbolCombination &comb, const Dims &d)
{
    CoefficientPolynomial p(d);
    p.add_combination(JetMonomial{}, comb);
    return to_text(p);
}

std::string tuple_text(const std::vector<int> &t)
{
    std::string s = "(";
    for (std::size_t a = 0; a < t.size(); ++a) {
        s += (a ? "," : "") + std::to_string(t[a]);
    }
    return s + ")";
}

std::vector<std::vector<int>> all_tuples(int n, int len)
{
    std::vector<std::vector<int>> out{{}};
    for (int s = 0; s < len; ++s) {
        std::vector<std::vector<int>> next;
        for (const auto &t : out) {
            for (int i = 1; i <= n; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(std::move(u));
            }
        }
        out = std::move(next);
    }
    return out;
}

class Timer
{
public:
    Timer() : m_start(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - m_start).count();
    }

private:
    std::chrono::steady_clock::time_point m_start;
};

// Collects case results in submission order regardless of the thread that produced them.
struct CaseRunner {
    std::vector<std::function<std::optional<Mismatch>()>> cases;

    void run(SuiteReport &rep, unsigned jobs)
    {
        std::vector<std::optional<Mismatch>> out(cases.size());
        parallel_for(cases.size(), jobs, [&](std::size_t c) {
            try {
                out[c] = cases[c]();
            } catch (const std::exception &e) {
                out[c] = Mismatch{"case " + std::to_string(c), "exception", "", e.what()};
            }
        });
        rep.cases += cases.size();
        for (auto &m : out) {
            if (m) {
                rep.failures.push_back(std::move(*m));
            }
        }
        cases.clear();
    }
};

std::optional<Mismatch> compare(const std::string &input, const char *a_name, const CoefficientPolynomial &a,
                                const char *b_name, const CoefficientPolynomial &b)
{
    if (auto d = first_difference(a, b)) {
        return Mismatch{input, a_name, b_name, *d};
    }
    return std::nullopt;
}

std::optional<Mismatch> compare(const std::string &input, const char *a_name, const FaaPolynomial &a,
                                const char *b_name, const FaaPolynomial &b)
{
    if (auto d = first_difference(a, b)) {
        return Mismatch{input, a_name, b_name, *d};
    }
    return std::nullopt;
}

// Number of multisets of parts in 1..max_part with the given sum.
BigInt restricted_partitions(int sum, int max_part)
{
    std::vector<BigInt> ways(static_cast<std::size_t>(sum + 1), 0);
    ways[0] = 1;
    for (int part = 1; part <= max_part; ++part) {
        for (int s = part; s <= sum; ++s) {
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
        }
    }
    return ways[static_cast<std::size_t>(sum)];
}

// Replaces every canonical representative by h o sigma for a random stabilizer element h.
TransversalProvider translated(std::uint64_t seed)
{
    auto gen = std::make_shared<InstanceGenerator>(seed);
    auto lock = std::make_shared<std::mutex>();
    return [gen, lock](const WeightSpec &spec) {
        const auto stab = oracle::stabilizer_elements(spec);
        auto reps = coset_transversal(spec);
        std::lock_guard guard(*lock);
        for (auto &r : reps) {
            const auto &h = stab[static_cast<std::size_t>(gen->uniform(0, static_cast<int>(stab.size()) - 1))];
            std::vector<int> moved(r.position_of_slot.size());
            for (std::size_t s = 0; s < moved.size(); ++s) {
                moved[static_cast<std::size_t>(h[s])] = r.position_of_slot[s];
            }
            r.position_of_slot = std::move(moved);
        }
        return reps;
    };
}

} // namespace

std::vector<TermDifference> differences(const CoefficientPolynomial &a, const CoefficientPolynomial &b)
{
    if (!(a.dims() == b.dims())) {
        throw DimensionError("polynomials over different dimensions");
    }
    std::vector<TermDifference> out;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        const JetMonomial *mono = nullptr;
        SymbolCombination ca;
        SymbolCombination cb;
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            mono = &ia->first;
            ca = ia->second;
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            mono = &ib->first;
            cb = ib->second;
            ++ib;
        } else {
            mono = &ia->first;
            ca = ia->second;
            cb = ib->second;
            ++ia;
            ++ib;
        }
        if (ca != cb) {
            out.push_back({to_latex(*mono, a.dims()), combination_text(ca, a.dims()), combination_text(cb, a.dims())});
        }
    }
    return out;
}

std::vector<TermDifference> differences(const FaaPolynomial &a, const FaaPolynomial &b)
{
    if (!(a.dims() == b.dims())) {
        throw DimensionError("polynomials over different dimensions");
    }
    std::set<FaaMonomial> keys;
    for (const auto &[m, c] : a.terms()) {
        keys.insert(m);
    }
    for (const auto &[m, c] : b.terms()) {
        keys.insert(m);
    }
    std::vector<TermDifference> out;
    for (const auto &m : keys) {
        auto ia = a.terms().find(m);
        auto ib = b.terms().find(m);
        const BigInt ca = ia == a.terms().end() ? BigInt(0) : ia->second;
        const BigInt cb = ib == b.terms().end() ? BigInt(0) : ib->second;
        if (ca != cb) {
            FaaPolynomial one(a.dims());
            one.add_term(m, 1);
            out.push_back({to_text(one), ca.str(), cb.str()});
        }
    }
    return out;
}

namespace
{

template <class P>
std::optional<std::string> first_of(const P &a, const P &b)
{
    if (!(a.dims() == b.dims())) {
        return std::string("dimensions differ");
    }
    const auto d = differences(a, b);
    if (d.empty()) {
        return std::nullopt;
    }
    return "coefficient of " + d.front().monomial + ": " + d.front().a + " vs " + d.front().b;
}

} // namespace

std::optional<std::string> first_difference(const CoefficientPolynomial &a, const CoefficientPolynomial &b)
{
    return first_of(a, b);
}

std::optional<std::string> first_difference(const FaaPolynomial &a, const FaaPolynomial &b)
{
    return first_of(a, b);
}

SuiteReport verify_prolongation(const VerifyOptions &opts)
{
    Timer timer;
    SuiteReport rep;
    rep.suite = "prolong";
    CaseRunner runner;
    for (int n = 1; n <= opts.max_n; ++n) {
        for (int m = 1; m <= opts.max_m; ++m) {
            const Dims dims(n, m);
            for (int kappa = 1; kappa <= opts.max_kappa; ++kappa) {
                auto table = std::make_shared<ProlongationTable>(
                    prolong_inductive(dims, kappa, {.verify_symmetry = true, .jobs = opts.jobs}));
                for (int j = 1; j <= m; ++j) {
                    for (const auto &t : all_tuples(n, kappa)) {
                        runner.cases.push_back([=]() {
                            std::ostringstream label;
                            label << "n=" << n << " m=" << m << " kappa=" << kappa << " j=" << j
                                  << " i=" << tuple_text(t);
                            return compare(label.str(), "closed", prolongation_closed({dims, j, t}), "inductive",
                                           table->entry(j, t));
                        });
                    }
                }
                runner.run(rep, opts.jobs);
            }
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

SuiteReport verify_faa(const VerifyOptions &opts)
{
    Timer timer;
    SuiteReport rep;
    rep.suite = "faa";
    CaseRunner runner;
    for (int n = 1; n <= opts.max_n; ++n) {
        for (int m = 1; m <= opts.max_m; ++m) {
            const Dims dims(n, m);
            for (int kappa = 1; kappa <= opts.max_kappa; ++kappa) {
                for (const auto &t : all_tuples(n, kappa)) {
                    runner.cases.push_back([=]() -> std::optional<Mismatch> {
                        std::ostringstream label;
                        label << "n=" << n << " m=" << m << " kappa=" << kappa << " i=" << tuple_text(t);
                        const auto closed = faa_closed(dims, t);
                        if (auto d = compare(label.str(), "closed", closed, "inductive", faa_inductive(dims, t))) {
                            return d;
                        }
                        if (auto d = compare(label.str(), "closed", closed, "partitions",
                                             oracle::faa_partitions(dims, t))) {
                            return d;
                        }
                        return compare(label.str(), "closed", closed, "prolongation top weight",
                                       extract_faa(prolongation_closed({dims, 1, t}), kappa));
                    });
                }
            }
        }
    }
    InstanceGenerator gen(opts.seed);
    for (int c = 0; c < opts.random_cases; ++c) {
        const int n = gen.uniform(1, opts.max_n);
        const int m = gen.uniform(1, opts.max_m);
        const int kappa = gen.uniform(1, opts.max_kappa);
        auto inst = std::make_shared<NumericInstance>(random_instance(gen, n, m, kappa));
        runner.cases.push_back([=]() -> std::optional<Mismatch> {
            const Rational r = faa_numeric_check(inst->f, inst->g, inst->indices, inst->point);
            if (r == 0) {
                return std::nullopt;
            }
            std::ostringstream label;
            label << "numeric case " << c << " n=" << n << " m=" << m << " i=" << tuple_text(inst->indices);
            return Mismatch{label.str(), "closed sum", "direct derivative", "residual " + r.str()};
        });
    }
    runner.run(rep, opts.jobs);
    rep.elapsed_ms = timer.ms();
    return rep;
}

SuiteReport verify_combinatorics(const VerifyOptions &opts)
{
    Timer timer;
    SuiteReport rep;
    rep.suite = "combinatorics";
    CaseRunner runner;
    for (int p = 0; p <= 7; ++p) {
        for (int q = 0; q <= p; ++q) {
            runner.cases.push_back([=]() -> std::optional<Mismatch> {
                std::set<std::vector<int>> fast;
                for (const auto &s : shuffles(p, q)) {
                    fast.insert(s.image);
                }
                const auto slow = oracle::shuffles_by_filter(p, q);
                if (fast == std::set<std::vector<int>>(slow.begin(), slow.end()) && fast.size() == slow.size()) {
                    return std::nullopt;
                }
                return Mismatch{"shuffles p=" + std::to_string(p) + " q=" + std::to_string(q), "enumeration",
                                "filter", "different sets"};
            });
        }
    }
    for (int kappa = 1; kappa <= std::max(opts.max_kappa, 6); ++kappa) {
        runner.cases.push_back([=]() -> std::optional<Mismatch> {
            BigInt expected = 0;
            for (int w = 1; w <= kappa + 1; ++w) {
                expected += restricted_partitions(w, kappa);
            }
            const auto pro = weight_specs(kappa, SpecKind::prolongation);
            const auto faa = weight_specs(kappa, SpecKind::faa);
            if (BigInt(pro.size()) != expected || BigInt(faa.size()) != restricted_partitions(kappa, kappa)) {
                return Mismatch{"weight specs kappa=" + std::to_string(kappa), "enumeration", "partition count",
                                std::to_string(pro.size()) + " vs " + expected.str()};
            }
            return std::nullopt;
        });
    }
    for (int w = 1; w <= opts.max_orbit_weight; ++w) {
        for (const auto &spec : weight_specs(w, SpecKind::faa)) {
            runner.cases.push_back([=]() -> std::optional<Mismatch> {
                const auto label = "transversal " + to_string(spec);
                const auto reps = coset_transversal(spec);
                const auto stab = oracle::stabilizer_elements(spec);
                const BigInt lagrange = factorial(spec.W()) / stabilizer_order(spec);
                if (BigInt(stab.size()) != stabilizer_order(spec)) {
                    return Mismatch{label, "stabilizer order", "brute force", "group sizes differ"};
                }
                if (BigInt(reps.size()) != lagrange || reps.size() != oracle::orbit_count(spec)) {
                    return Mismatch{label, "transversal", "orbits",
                                    std::to_string(reps.size()) + " vs " + lagrange.str()};
                }
                std::set<std::vector<int>> keys;
                for (const auto &r : reps) {
                    keys.insert(oracle::orbit_key(stab, r.slot_of_position()));
                }
                if (keys.size() != reps.size()) {
                    return Mismatch{label, "transversal", "orbits", "two representatives share a coset"};
                }
                return std::nullopt;
            });
        }
    }
    InstanceGenerator gen(opts.seed);
    for (int c = 0; c < opts.random_cases; ++c) {
        const int n = gen.uniform(1, opts.max_n);
        const int m = gen.uniform(1, opts.max_m);
        const int kappa = gen.uniform(1, opts.max_kappa);
        std::vector<int> t;
        for (int a = 0; a < kappa; ++a) {
            t.push_back(gen.uniform(1, n));
        }
        const int j = gen.uniform(1, m);
        const std::uint64_t seed = static_cast<std::uint64_t>(gen.uniform(0, 1 << 30));
        runner.cases.push_back([=]() -> std::optional<Mismatch> {
            const Dims dims(n, m);
            std::ostringstream label;
            label << "translated representatives n=" << n << " m=" << m << " j=" << j << " i=" << tuple_text(t);
            if (auto d = compare(label.str(), "canonical", prolongation_closed({dims, j, t}), "translated",
                                 prolongation_closed({dims, j, t}, {.jobs = 1, .transversal = translated(seed)}))) {
                return d;
            }
            return compare(label.str(), "canonical", faa_closed(dims, t), "translated",
                           faa_closed(dims, t, {.jobs = 1, .transversal = translated(seed + 1)}));
        });
    }
    runner.run(rep, opts.jobs);
    rep.elapsed_ms = timer.ms();
    return rep;
}

int InstanceGenerator::uniform(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(m_rng() % span);
}

Rational InstanceGenerator::small_rational()
{
    return Rational(uniform(-6, 6), uniform(1, 4));
}

RationalPoly InstanceGenerator::polynomial(int arity, int max_degree, int max_terms)
{
    RationalPoly p(arity);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(arity), 0);
        int budget = uniform(0, max_degree);
        for (int v = 0; v < arity && budget > 0; ++v) {
            const int take = v + 1 == arity ? budget : uniform(0, budget);
            e[static_cast<std::size_t>(v)] = take;
            budget -= take;
        }
        p.add_term(e, small_rational());
    }
    return p;
}

NumericInstance random_instance(InstanceGenerator &gen, int n, int m, int kappa)
{
    NumericInstance inst{gen.polynomial(m, kappa + 1, 6), {}, {}, {}};
    for (int l = 0; l < m; ++l) {
        inst.g.push_back(gen.polynomial(n, kappa + 1, 5));
    }
    for (int a = 0; a < kappa; ++a) {
        inst.indices.push_back(gen.uniform(1, n));
    }
    for (int v = 0; v < n; ++v) {
        inst.point.push_back(gen.small_rational());
    }
    return inst;
}

const std::vector<TableCorrection> &table_corrections()
{
    // Scalar entries use the text rendering of differences(); the general-kappa and index-form
    // entries are descriptive.
    static const std::vector<TableCorrection> list = {
        {"Y1", "(y_1)^2", "-Y_y", "-X_y"},
        {"Y5", "y_5", "Y_y - 5*X_y", "Y_y - 5*X_x"},
        {"Y6", "y_6", "Y_y - 6*X_y", "Y_y - 6*X_x"},
        {"Y6", "(y_1)^3 (y_2)^2", "-210*X_y^4", "-105*X_y^4"},
        {"h5", "f_3 g_1^2 g_3", "15", "10"},
        {"h5", "f_3 g_1 g_2^2", "10", "15"},
        {"Y_kappa", "(y_1)^(kappa+1)", "-X_{y^kappa} attached to (y_1)^kappa", "-X_{y^kappa}"},
        {"Y_kappa", "y_2 y_(kappa-1)", "-C(kappa,2)*X_y", "-C(kappa+1,2)*X_y"},
        {"Y_kappa", "y_kappa", "Y_y - kappa*X_x printed without its monomial", "Y_y - kappa*X_x"},
        {"m-third", "y^{l1}_2 y^{l2}_2", "-d^j_{l3} 3*X_{y^{l2}}", "-d^j_{l1} 3*X_{y^{l2}}"},
        {"m-fourth", "y^{l1}_1 y^{l2}_1 y^{l3}_1 y^{l4}_1", "Y^j_{x y^{l1} y^{l2} y^{l3} y^{l4}}",
         "Y^j_{y^{l1} y^{l2} y^{l3} y^{l4}}"},
        {"nm-second", "last monomial", "y^{l1}_{k1} y^{l2}_{k2} y^{l3}_{k3}", "y^{l1}_{k1} y^{l2}_{k2,k3}"},
        {"nm-third", "y^{l1}_{k1,k2} y^{l2}_{k3,k4}", "d^{k1,k2,k3}_{i1,i2,i3} X^{k3}_{y^{l1}}",
         "d^{k1,k2,k4}_{i1,i2,i3} X^{k3}_{y^{l1}}"},
    };
    return list;
}

} // namespace jetprolong
