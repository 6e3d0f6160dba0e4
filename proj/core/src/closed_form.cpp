#include <jetprolong/closed_form.hpp>
#include <jetprolong/errors.hpp>
#include <jetprolong/parallel.hpp>

#include <sstream>

namespace jetprolong
{

namespace
{

void check_request(const ClosedFormRequest &req)
{
    if (req.indices.empty()) {
        throw DomainError("kappa must be at least 1");
    }
    if (req.j < 1 || req.j > req.dims.m) {
        throw DimensionError("component j=" + std::to_string(req.j) + " outside 1.." + std::to_string(req.dims.m));
    }
    for (int i : req.indices) {
        if (i < 1 || i > req.dims.n) {
            throw DimensionError("index " + std::to_string(i) + " outside 1.." + std::to_string(req.dims.n));
        }
    }
}

// Steps an odometer over 1..m at every position not listed as fixed; false once exhausted.
bool next_assignment(std::vector<int> &l, int m, int fixed)
{
    for (std::size_t g = l.size(); g-- > 0;) {
        if (static_cast<int>(g) == fixed) {
            continue;
        }
        if (l[g] < m) {
            ++l[g];
            return true;
        }
        l[g] = 1;
    }
    return false;
}

JetMonomial build_monomial(const SlotLayout &lay, const std::vector<int> &k_of_slot, const std::vector<int> &l)
{
    std::vector<JetVariable> factors;
    factors.reserve(lay.groups.size());
    for (std::size_t g = 0; g < lay.groups.size(); ++g) {
        std::vector<int> ks;
        ks.reserve(lay.group_slots[g].size());
        for (int s : lay.group_slots[g]) {
            ks.push_back(k_of_slot[static_cast<std::size_t>(s)]);
        }
        factors.emplace_back(l[g], std::move(ks));
    }
    return JetMonomial(std::move(factors));
}

void spec_terms(const ClosedFormRequest &req, const WeightSpec &spec, const std::vector<TransversalElement> &reps,
                CoefficientPolynomial &out)
{
    const int kappa = static_cast<int>(req.indices.size());
    const auto lay = slot_layout(spec);
    const int W = spec.W();
    const int H = spec.H();
    const int n = req.dims.n;
    const int m = req.dims.m;
    std::vector<std::vector<int>> slot_at;
    slot_at.reserve(reps.size());
    for (const auto &r : reps) {
        slot_at.push_back(r.slot_of_position());
    }
    std::vector<int> k_of_slot(static_cast<std::size_t>(W));

    // Vertical part: every lower index of the monomial is tied to one of the i's.
    for (const auto &tau : shuffles(kappa, W)) {
        std::vector<int> xrest;
        for (int a = W; a < kappa; ++a) {
            xrest.push_back(req.indices[static_cast<std::size_t>(tau.image[static_cast<std::size_t>(a)])]);
        }
        for (const auto &sigma : slot_at) {
            for (int a = 0; a < W; ++a) {
                k_of_slot[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)])] =
                    req.indices[static_cast<std::size_t>(tau.image[static_cast<std::size_t>(a)])];
            }
            std::vector<int> l(static_cast<std::size_t>(H), 1);
            do {
                out.add_term(build_monomial(lay, k_of_slot, l), DerivativeSymbol::Y(req.j, xrest, l), 1);
            } while (next_assignment(l, m, -1));
        }
    }

    // Horizontal part: the slot sigma(W) carries the free index k of X^k, and its group has l = j.
    for (const auto &tau : shuffles(kappa, W - 1)) {
        std::vector<int> xrest;
        for (int a = W - 1; a < kappa; ++a) {
            xrest.push_back(req.indices[static_cast<std::size_t>(tau.image[static_cast<std::size_t>(a)])]);
        }
        for (const auto &sigma : slot_at) {
            for (int a = 0; a < W - 1; ++a) {
                k_of_slot[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)])] =
                    req.indices[static_cast<std::size_t>(tau.image[static_cast<std::size_t>(a)])];
            }
            const int free_slot = sigma[static_cast<std::size_t>(W - 1)];
            const int tied = lay.group_of_slot[static_cast<std::size_t>(free_slot)];
            for (int k = 1; k <= n; ++k) {
                k_of_slot[static_cast<std::size_t>(free_slot)] = k;
                std::vector<int> l(static_cast<std::size_t>(H), 1);
                l[static_cast<std::size_t>(tied)] = req.j;
                do {
                    std::vector<int> ys;
                    for (int g = 0; g < H; ++g) {
                        if (g != tied) {
                            ys.push_back(l[static_cast<std::size_t>(g)]);
                        }
                    }
                    out.add_term(build_monomial(lay, k_of_slot, l), DerivativeSymbol::X(k, xrest, std::move(ys)), -1);
                } while (next_assignment(l, m, tied));
            }
        }
    }
}

} // namespace

CoefficientPolynomial prolongation_closed(const ClosedFormRequest &req, const ClosedFormOptions &opts)
{
    check_request(req);
    const int kappa = static_cast<int>(req.indices.size());
    const auto specs = weight_specs(kappa, SpecKind::prolongation);
    std::vector<CoefficientPolynomial> parts(specs.size(), CoefficientPolynomial(req.dims));
    parallel_for(specs.size(), opts.jobs, [&](std::size_t s) {
        const auto reps = opts.transversal ? opts.transversal(specs[s]) : coset_transversal(specs[s]);
        spec_terms(req, specs[s], reps, parts[s]);
    });
    CoefficientPolynomial out = constant_polynomial(req.dims, DerivativeSymbol::Y(req.j, req.indices));
    for (const auto &p : parts) {
        out.add_polynomial(p);
    }
    return out;
}

ScalarCoefficients scalar_coefficients(int kappa, const WeightSpec &spec)
{
    const int W = spec.W();
    if (W < 1 || W > kappa + 1) {
        throw DomainError("weight " + std::to_string(W) + " outside 1.." + std::to_string(kappa + 1));
    }
    BigInt denom = 1;
    for (int e = 0; e < spec.d(); ++e) {
        const auto ue = static_cast<std::size_t>(e);
        denom *= pow(factorial(spec.lambda[ue]), static_cast<unsigned>(spec.mu[ue])) * factorial(spec.mu[ue]);
    }
    const BigInt a = W <= kappa ? falling_factorial(kappa, W) : BigInt(0);
    const BigInt b = falling_factorial(kappa, W - 1) * W;
    if (a % denom != 0 || b % denom != 0) {
        throw VerificationError("non-integral coefficient for spec " + to_string(spec));
    }
    return {a / denom, -(b / denom)};
}

JetMonomial scalar_monomial(const WeightSpec &spec)
{
    std::vector<JetVariable> factors;
    for (int e = 0; e < spec.d(); ++e) {
        const auto ue = static_cast<std::size_t>(e);
        for (int c = 0; c < spec.mu[ue]; ++c) {
            factors.emplace_back(1, std::vector<int>(static_cast<std::size_t>(spec.lambda[ue]), 1));
        }
    }
    return JetMonomial(std::move(factors));
}

CoefficientPolynomial prolongation_closed_scalar(int kappa)
{
    if (kappa < 1) {
        throw DomainError("kappa must be at least 1");
    }
    const Dims d(1, 1);
    CoefficientPolynomial out = constant_polynomial(d, DerivativeSymbol::Y(1, std::vector<int>(kappa, 1)));
    for (const auto &spec : weight_specs(kappa, SpecKind::prolongation)) {
        const auto c = scalar_coefficients(kappa, spec);
        const int W = spec.W();
        const int H = spec.H();
        const auto mono = scalar_monomial(spec);
        if (W <= kappa) {
            out.add_term(mono, DerivativeSymbol::Y(1, std::vector<int>(kappa - W, 1), std::vector<int>(H, 1)),
                         c.y_coeff);
        }
        out.add_term(mono, DerivativeSymbol::X(1, std::vector<int>(kappa - W + 1, 1), std::vector<int>(H - 1, 1)),
                     c.x_coeff);
    }
    return out;
}

BinomialSlice binomial_slice(int kappa)
{
    const auto full = prolongation_closed_scalar(kappa);
    BinomialSlice slice;
    for (int lam = 1; lam <= kappa + 1; ++lam) {
        const JetMonomial mono(std::vector<JetVariable>(static_cast<std::size_t>(lam), JetVariable(1, {1})));
        auto got = coefficient_of(full, mono);
        SymbolCombination want;
        if (lam <= kappa) {
            want[DerivativeSymbol::Y(1, std::vector<int>(kappa - lam, 1), std::vector<int>(lam, 1))] =
                binomial(kappa, lam);
        }
        want[DerivativeSymbol::X(1, std::vector<int>(kappa - lam + 1, 1), std::vector<int>(lam - 1, 1))] =
            -binomial(kappa, lam - 1);
        if (got != want) {
            std::ostringstream os;
            os << "(y_1)^" << lam << " coefficient differs from the binomial shape";
            slice.mismatches.push_back(os.str());
        }
        slice.coefficients.emplace(lam, std::move(got));
    }
    return slice;
}

} // namespace jetprolong
