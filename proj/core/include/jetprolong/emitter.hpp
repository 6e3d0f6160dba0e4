#ifndef JETPROLONG_EMITTER_HPP
#define JETPROLONG_EMITTER_HPP

#include <string>

#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/jet_algebra.hpp>

namespace jetprolong
{

enum class LatexStyle {
    bracketed, // one bracket of symbols per monomial
    compact,   // every symbol times its monomial as a separate summand
};

// Scalar notation (Y_{x^2y}, y_1) when n = m = 1, explicit indices (Y^{1}_{x^{1}x^{2}y^{1}}, y^{1}_{1,2}) otherwise.
std::string to_latex(const CoefficientPolynomial &p, LatexStyle style = LatexStyle::bracketed);
std::string to_latex(const FaaPolynomial &p);
std::string to_latex(const DerivativeSymbol &s, const Dims &dims);
std::string to_latex(const JetMonomial &m, const Dims &dims);

std::string to_text(const CoefficientPolynomial &p);
std::string to_text(const FaaPolynomial &p);

// Array of {"monomial": [[l, [k..]]..], "coeff": [[symbol, integer]..]}; symbols are ["Y", j, [x..], [y..]],
// ["X", k, [x..], [y..]] or ["1"]. Integers outside int64 are written as decimal strings.
std::string to_json(const CoefficientPolynomial &p);
// Array of {"f": [l..], "g": [[l, [k..]]..], "coeff": integer}.
std::string to_json(const FaaPolynomial &p);

// Throws DomainError on malformed input and DimensionError on out-of-range indices.
CoefficientPolynomial polynomial_from_json(const std::string &text, const Dims &dims);
FaaPolynomial faa_from_json(const std::string &text, const Dims &dims);

} // namespace jetprolong

#endif
