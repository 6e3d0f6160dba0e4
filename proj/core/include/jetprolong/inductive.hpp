#ifndef JETPROLONG_INDUCTIVE_HPP
#define JETPROLONG_INDUCTIVE_HPP

#include <map>
#include <utility>
#include <vector>

#include <jetprolong/jet_algebra.hpp>

namespace jetprolong
{

struct InductiveOptions {
    // Compute every ordered index tuple and check that permutations of a tuple agree.
    bool verify_symmetry = false;
    unsigned jobs = 1;
};

// Coefficients Y^j_{i_1..i_lambda} of the prolonged vector field for all orders up to kappa,
// obtained by repeated total differentiation.
class ProlongationTable
{
public:
    using Key = std::pair<int, std::vector<int>>;

    ProlongationTable(Dims dims, int kappa) : m_dims(dims), m_kappa(kappa) {}

    const Dims &dims() const
    {
        return m_dims;
    }
    int kappa() const
    {
        return m_kappa;
    }
    // Entries stored for exactly this tuple, in computation order.
    const std::map<Key, CoefficientPolynomial> &entries() const
    {
        return m_entries;
    }

    // Looks the tuple up as given, then by its sorted form. Throws LookupError when not computed,
    // DimensionError for out-of-range indices.
    const CoefficientPolynomial &entry(int j, const std::vector<int> &indices) const;

    void insert(int j, std::vector<int> indices, CoefficientPolynomial p);

private:
    Dims m_dims;
    int m_kappa;
    std::map<Key, CoefficientPolynomial> m_entries;
};

// Throws DomainError for kappa < 1 and VerificationError if the symmetry check fails.
ProlongationTable prolong_inductive(const Dims &dims, int kappa, const InductiveOptions &opts = {});

// One step of the recursion: given Y^j_{I} for the tuple I, returns Y^j_{I,i}.
CoefficientPolynomial inductive_step(const CoefficientPolynomial &prev, int j, const std::vector<int> &prev_indices,
                                     int i);

} // namespace jetprolong

#endif
