#ifndef JETPROLONG_VERIFY_HPP
#define JETPROLONG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <jetprolong/faa_di_bruno.hpp>
#include <jetprolong/jet_algebra.hpp>
#include <jetprolong/rational_poly.hpp>

namespace jetprolong
{

// One monomial whose coefficients differ, all three rendered as text.
struct TermDifference {
    std::string monomial;
    std::string a;
    std::string b;

    auto operator<=>(const TermDifference &) const = default;
};

// Every differing monomial, in canonical order.
std::vector<TermDifference> differences(const CoefficientPolynomial &a, const CoefficientPolynomial &b);
std::vector<TermDifference> differences(const FaaPolynomial &a, const FaaPolynomial &b);

// First monomial, in canonical order, whose coefficients differ; nullopt when equal.
std::optional<std::string> first_difference(const CoefficientPolynomial &a, const CoefficientPolynomial &b);
std::optional<std::string> first_difference(const FaaPolynomial &a, const FaaPolynomial &b);

struct Mismatch {
    std::string input;
    std::string engine_a;
    std::string engine_b;
    std::string first_diff;
};

struct SuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<Mismatch> failures;
    double elapsed_ms = 0;

    bool ok() const
    {
        return failures.empty();
    }
};

struct VerifyOptions {
    int max_n = 2;
    int max_m = 2;
    int max_kappa = 3;
    std::uint64_t seed = 1;
    int random_cases = 50;
    // Largest W for the brute-force orbit enumeration.
    int max_orbit_weight = 6;
    unsigned jobs = 1;
};

// Closed sum against the repeated-derivative recursion for every (n, m, kappa) in range, every j and
// every ordered index tuple; the recursion itself runs with its symmetry check on.
SuiteReport verify_prolongation(const VerifyOptions &opts);

// Closed, recursive and set-partition forms of the composite derivative, the top-weight part of the
// prolongation, and random exact evaluations at rational points.
SuiteReport verify_faa(const VerifyOptions &opts);

// Shuffle and weight-spec enumeration, transversal sizes against brute-force orbits, and
// independence of the closed sums from the choice of coset representatives.
SuiteReport verify_combinatorics(const VerifyOptions &opts);

// A known misprint in a published coefficient table, recorded so reports can flag it.
struct TableCorrection {
    std::string entry;    // fixture section, e.g. "Y5"
    std::string monomial; // e.g. "y_5"
    std::string reference;
    std::string computed;
};

const std::vector<TableCorrection> &table_corrections();

// Deterministic pseudo-random instances; uses only the raw engine output so results do not depend
// on the standard library's distribution implementations.
class InstanceGenerator
{
public:
    explicit InstanceGenerator(std::uint64_t seed) : m_rng(seed) {}

    int uniform(int lo, int hi);
    Rational small_rational();
    // Random polynomial in `arity` variables with total degree at most max_degree.
    RationalPoly polynomial(int arity, int max_degree, int max_terms);

private:
    std::mt19937_64 m_rng;
};

struct NumericInstance {
    RationalPoly f;
    std::vector<RationalPoly> g;
    std::vector<int> indices;
    std::vector<Rational> point;
};

NumericInstance random_instance(InstanceGenerator &gen, int n, int m, int kappa);

} // namespace jetprolong

#endif
