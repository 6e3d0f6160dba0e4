#include <jetprolong/errors.hpp>
#include <jetprolong/oracles.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace jetprolong::oracle
{

FaaPolynomial faa_partitions(const Dims &dims, const std::vector<int> &indices)
{
    if (indices.empty()) {
        throw DomainError("kappa must be at least 1");
    }
    const std::size_t k = indices.size();
    FaaPolynomial out(dims);
    // Restricted growth strings enumerate set partitions.
    std::vector<int> block(k, 0);
    std::function<void(std::size_t, int)> visit = [&](std::size_t pos, int blocks) {
        if (pos == k) {
            std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
            for (std::size_t p = 0; p < k; ++p) {
                parts[static_cast<std::size_t>(block[p])].push_back(indices[p]);
            }
            std::vector<int> l(static_cast<std::size_t>(blocks), 1);
            while (true) {
                std::vector<GSymbol> gs;
                for (std::size_t b = 0; b < parts.size(); ++b) {
                    gs.emplace_back(l[b], parts[b]);
                }
                out.add_term(FaaMonomial(FSymbol{l}, std::move(gs)), 1);
                std::size_t b = 0;
                while (b < l.size() && l[b] == dims.m) {
                    l[b++] = 1;
                }
                if (b == l.size()) {
                    break;
                }
                ++l[b];
            }
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[pos] = b;
            visit(pos + 1, std::max(blocks, b + 1));
        }
    };
    visit(0, 0);
    return out;
}

namespace
{

// Multiset of slot groups, read through a relabelling of the slots.
std::multiset<std::set<int>> shape(const SlotLayout &lay, const std::vector<int> &h)
{
    std::multiset<std::set<int>> out;
    for (const auto &slots : lay.group_slots) {
        std::set<int> img;
        for (int s : slots) {
            img.insert(h[static_cast<std::size_t>(s)]);
        }
        out.insert(std::move(img));
    }
    return out;
}

} // namespace

std::vector<std::vector<int>> stabilizer_elements(const WeightSpec &spec)
{
    const auto lay = slot_layout(spec);
    std::vector<int> h(lay.slots.size());
    std::iota(h.begin(), h.end(), 0);
    const auto base = shape(lay, h);
    std::vector<std::vector<int>> out;
    do {
        // The slot at a given gamma within a group is distinguishable only through its group, so
        // h fixes the monomial exactly when it maps the groups onto groups.
        if (shape(lay, h) == base) {
            out.push_back(h);
        }
    } while (std::next_permutation(h.begin(), h.end()));
    return out;
}

std::vector<int> orbit_key(const std::vector<std::vector<int>> &stabilizer, const std::vector<int> &slot_of_position)
{
    std::vector<int> best;
    for (const auto &h : stabilizer) {
        std::vector<int> c(slot_of_position.size());
        for (std::size_t a = 0; a < c.size(); ++a) {
            c[a] = h[static_cast<std::size_t>(slot_of_position[a])];
        }
        if (best.empty() || c < best) {
            best = std::move(c);
        }
    }
    return best;
}

std::size_t orbit_count(const WeightSpec &spec)
{
    const auto stab = stabilizer_elements(spec);
    std::vector<int> sigma(static_cast<std::size_t>(spec.W()));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::set<std::vector<int>> keys;
    do {
        keys.insert(orbit_key(stab, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return keys.size();
}

std::vector<std::vector<int>> shuffles_by_filter(int p, int q)
{
    std::vector<std::vector<int>> out;
    if (q > p || q < 0) {
        return out;
    }
    std::vector<int> t(static_cast<std::size_t>(p));
    std::iota(t.begin(), t.end(), 0);
    do {
        if (std::is_sorted(t.begin(), t.begin() + q) && std::is_sorted(t.begin() + q, t.end())) {
            out.push_back(t);
        }
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
}

} // namespace jetprolong::oracle
