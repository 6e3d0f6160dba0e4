#ifndef JETPROLONG_COMBINATORICS_HPP
#define JETPROLONG_COMBINATORICS_HPP

#include <string>
#include <utility>
#include <vector>

#include <jetprolong/numeric.hpp>

namespace jetprolong
{

// Monomial shape prod_e (y_{lambda_e})^{mu_e} with lambda strictly increasing.
struct WeightSpec {
    std::vector<int> lambda;
    std::vector<int> mu;

    int d() const
    {
        return static_cast<int>(lambda.size());
    }
    // Total number of lower indices, sum mu_e lambda_e.
    int W() const;
    // Degree of the monomial, sum mu_e.
    int H() const;

    bool operator==(const WeightSpec &) const = default;
};

enum class SpecKind {
    prolongation, // W <= kappa + 1, every lambda_e <= kappa
    faa,          // W == kappa
};

// Lexicographic in (d, lambda, mu). Throws DomainError for kappa < 1.
std::vector<WeightSpec> weight_specs(int kappa, SpecKind kind);

// Label e:nu:gamma, 1-based, of one lower-index position inside a monomial shape.
struct Slot {
    int e;
    int nu;
    int gamma;

    bool operator==(const Slot &) const = default;
};

// Slots in lexicographic order together with the (e, nu) grouping used by the projection pi.
struct SlotLayout {
    std::vector<Slot> slots;
    std::vector<int> group_of_slot;            // slot -> group index
    std::vector<std::pair<int, int>> groups;   // group -> (e, nu)
    std::vector<std::vector<int>> group_slots; // group -> its slots, ascending
    std::vector<int> group_order;              // group -> lambda_e
};

SlotLayout slot_layout(const WeightSpec &spec);

// pi(e:nu:gamma) = (e, nu) for the slot at the given lexicographic index.
std::pair<int, int> project_pi(const WeightSpec &spec, int slot_index);

// tau in S_p with tau increasing on the first q and on the last p - q positions.
// image holds 0-based positions: image[a] = tau(a + 1) - 1.
struct Shuffle {
    std::vector<int> image;
    int split = 0;
};

// Empty when q > p. Throws DomainError on negative arguments.
std::vector<Shuffle> shuffles(int p, int q);

// |H| = prod_e mu_e! (lambda_e!)^{mu_e}, the order of the group fixing the monomial shape.
BigInt stabilizer_order(const WeightSpec &spec);

// One representative of a left coset of H in the permutations of the W slots.
// position_of_slot[s] is the 0-based position that slot s occupies.
struct TransversalElement {
    std::vector<int> position_of_slot;

    std::vector<int> slot_of_position() const;
};

// Canonical representatives: blocks of a family ordered by their smallest position, slots inside a block
// filled in increasing position order. Size W! / |H|.
std::vector<TransversalElement> coset_transversal(const WeightSpec &spec);

// "(1 2 3 / 2 3 1)" for the 0-based permutation [1, 2, 0].
std::string two_line(const std::vector<int> &perm);

std::string to_string(const WeightSpec &spec);

} // namespace jetprolong

#endif
