#ifndef JETPROLONG_CLOSED_FORM_HPP
#define JETPROLONG_CLOSED_FORM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <jetprolong/combinatorics.hpp>
#include <jetprolong/jet_algebra.hpp>

namespace jetprolong
{

struct ClosedFormRequest {
    Dims dims;
    int j = 1;
    std::vector<int> indices; // i_1..i_kappa, any order
};

using TransversalProvider = std::function<std::vector<TransversalElement>(const WeightSpec &)>;

struct ClosedFormOptions {
    unsigned jobs = 1;
    // Replaces the canonical coset representatives, e.g. with other elements of the same cosets.
    TransversalProvider transversal;
};

// Y^j_{i_1..i_kappa} summed directly over weight specs, shuffles and coset representatives.
// Kronecker deltas are contracted while the terms are generated.
CoefficientPolynomial prolongation_closed(const ClosedFormRequest &req, const ClosedFormOptions &opts = {});

// Integer factors of the two symbols attached to one weight spec in the n = m = 1 formula.
struct ScalarCoefficients {
    BigInt y_coeff; // multiplies Y_{x^{kappa-W} y^H}
    BigInt x_coeff; // multiplies X_{x^{kappa-W+1} y^{H-1}}, sign included
};

ScalarCoefficients scalar_coefficients(int kappa, const WeightSpec &spec);

// Y_kappa for n = m = 1 from the integer coefficient formula.
CoefficientPolynomial prolongation_closed_scalar(int kappa);

// Coefficients of (y_1)^lambda, lambda = 1..kappa+1, for n = m = 1.
struct BinomialSlice {
    std::map<int, SymbolCombination> coefficients;
    // Differences against C(kappa, lambda) Y_{x^{kappa-lambda} y^lambda} - C(kappa, lambda-1) X_{x^{kappa-lambda+1} y^{lambda-1}}.
    // Empty when consistent.
    std::vector<std::string> mismatches;
};

BinomialSlice binomial_slice(int kappa);

// The monomial prod_e (y_{lambda_e})^{mu_e} for n = m = 1.
JetMonomial scalar_monomial(const WeightSpec &spec);

} // namespace jetprolong

#endif
