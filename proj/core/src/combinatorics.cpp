#include <jetprolong/combinatorics.hpp>
#include <jetprolong/errors.hpp>

#include <functional>
#include <numeric>
#include <sstream>

namespace jetprolong
{

int WeightSpec::W() const
{
    int w = 0;
    for (std::size_t e = 0; e < lambda.size(); ++e) {
        w += lambda[e] * mu[e];
    }
    return w;
}

int WeightSpec::H() const
{
    return std::accumulate(mu.begin(), mu.end(), 0);
}

std::vector<WeightSpec> weight_specs(int kappa, SpecKind kind)
{
    if (kappa < 1) {
        throw DomainError("kappa must be at least 1");
    }
    const int bound = kind == SpecKind::prolongation ? kappa + 1 : kappa;
    std::vector<WeightSpec> out;
    std::vector<int> lambda;
    std::vector<int> mu;

    std::function<void(std::size_t, int)> fill_mu = [&](std::size_t e, int used) {
        if (e == lambda.size()) {
            if (kind == SpecKind::prolongation || used == kappa) {
                out.push_back({lambda, mu});
            }
            return;
        }
        for (int c = 1; used + c * lambda[e] <= bound; ++c) {
            mu.push_back(c);
            fill_mu(e + 1, used + c * lambda[e]);
            mu.pop_back();
        }
    };
    std::function<void(int, int)> fill_lambda = [&](int remaining, int start) {
        if (remaining == 0) {
            fill_mu(0, 0);
            return;
        }
        for (int v = start; v <= kappa; ++v) {
            lambda.push_back(v);
            fill_lambda(remaining - 1, v + 1);
            lambda.pop_back();
        }
    };
    for (int d = 1; d <= bound; ++d) {
        // Smallest weight with d distinct orders is 1 + 2 + ... + d.
        if (d * (d + 1) / 2 > bound) {
            break;
        }
        fill_lambda(d, 1);
    }
    return out;
}

SlotLayout slot_layout(const WeightSpec &spec)
{
    SlotLayout lay;
    for (int e = 0; e < spec.d(); ++e) {
        for (int nu = 0; nu < spec.mu[e]; ++nu) {
            const int g = static_cast<int>(lay.groups.size());
            lay.groups.emplace_back(e + 1, nu + 1);
            lay.group_order.push_back(spec.lambda[e]);
            lay.group_slots.emplace_back();
            for (int gamma = 0; gamma < spec.lambda[e]; ++gamma) {
                lay.group_slots.back().push_back(static_cast<int>(lay.slots.size()));
                lay.slots.push_back({e + 1, nu + 1, gamma + 1});
                lay.group_of_slot.push_back(g);
            }
        }
    }
    return lay;
}

std::pair<int, int> project_pi(const WeightSpec &spec, int slot_index)
{
    auto lay = slot_layout(spec);
    if (slot_index < 0 || slot_index >= static_cast<int>(lay.slots.size())) {
        throw DomainError("slot index out of range");
    }
    const auto &s = lay.slots[static_cast<std::size_t>(slot_index)];
    return {s.e, s.nu};
}

std::vector<Shuffle> shuffles(int p, int q)
{
    if (p < 0 || q < 0) {
        throw DomainError("shuffle sizes must be nonnegative");
    }
    std::vector<Shuffle> out;
    if (q > p) {
        return out;
    }
    // Choose the q positions of the first block; the rest follow in order.
    std::vector<int> pick(static_cast<std::size_t>(q));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Shuffle s;
        s.split = q;
        s.image = pick;
        std::vector<bool> used(static_cast<std::size_t>(p), false);
        for (int v : pick) {
            used[static_cast<std::size_t>(v)] = true;
        }
        for (int v = 0; v < p; ++v) {
            if (!used[static_cast<std::size_t>(v)]) {
                s.image.push_back(v);
            }
        }
        out.push_back(std::move(s));
        int k = q - 1;
        while (k >= 0 && pick[static_cast<std::size_t>(k)] == p - q + k) {
            --k;
        }
        if (k < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(k)];
        for (int r = k + 1; r < q; ++r) {
            pick[static_cast<std::size_t>(r)] = pick[static_cast<std::size_t>(r - 1)] + 1;
        }
    }
    return out;
}

BigInt stabilizer_order(const WeightSpec &spec)
{
    BigInt h = 1;
    for (int e = 0; e < spec.d(); ++e) {
        h *= factorial(spec.mu[e]) * pow(factorial(spec.lambda[e]), static_cast<unsigned>(spec.mu[e]));
    }
    return h;
}

std::vector<int> TransversalElement::slot_of_position() const
{
    std::vector<int> inv(position_of_slot.size());
    for (std::size_t s = 0; s < position_of_slot.size(); ++s) {
        inv[static_cast<std::size_t>(position_of_slot[s])] = static_cast<int>(s);
    }
    return inv;
}

std::vector<TransversalElement> coset_transversal(const WeightSpec &spec)
{
    const auto lay = slot_layout(spec);
    const int W = static_cast<int>(lay.slots.size());
    const int G = static_cast<int>(lay.groups.size());

    // First group of each family; groups of a family are contiguous.
    std::vector<int> family_first(static_cast<std::size_t>(spec.d()));
    for (int g = G - 1; g >= 0; --g) {
        family_first[static_cast<std::size_t>(lay.groups[static_cast<std::size_t>(g)].first - 1)] = g;
    }

    std::vector<int> opened(static_cast<std::size_t>(spec.d()), 0); // groups opened per family
    std::vector<int> fill(static_cast<std::size_t>(G), 0);          // slots filled per group
    std::vector<int> pos_of_slot(static_cast<std::size_t>(W), -1);
    std::vector<TransversalElement> out;

    std::function<void(int)> place = [&](int p) {
        if (p == W) {
            out.push_back({pos_of_slot});
            return;
        }
        auto put = [&](int g) {
            const auto ug = static_cast<std::size_t>(g);
            const int slot = lay.group_slots[ug][static_cast<std::size_t>(fill[ug])];
            pos_of_slot[static_cast<std::size_t>(slot)] = p;
            ++fill[ug];
            place(p + 1);
            --fill[ug];
            pos_of_slot[static_cast<std::size_t>(slot)] = -1;
        };
        for (int g = 0; g < G; ++g) {
            const auto ug = static_cast<std::size_t>(g);
            if (fill[ug] > 0 && fill[ug] < lay.group_order[ug]) {
                put(g);
            }
        }
        for (int e = 0; e < spec.d(); ++e) {
            const auto ue = static_cast<std::size_t>(e);
            if (opened[ue] < spec.mu[ue]) {
                const int g = family_first[ue] + opened[ue];
                ++opened[ue];
                put(g);
                --opened[ue];
            }
        }
    };
    place(0);
    return out;
}

std::string two_line(const std::vector<int> &perm)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t a = 0; a < perm.size(); ++a) {
        os << (a ? " " : "") << a + 1;
    }
    os << " /";
    for (int v : perm) {
        os << ' ' << v + 1;
    }
    os << ')';
    return os.str();
}

std::string to_string(const WeightSpec &spec)
{
    std::ostringstream os;
    os << '{';
    for (int e = 0; e < spec.d(); ++e) {
        os << (e ? "," : "") << '(' << spec.lambda[static_cast<std::size_t>(e)] << ','
           << spec.mu[static_cast<std::size_t>(e)] << ')';
    }
    os << '}';
    return os.str();
}

} // namespace jetprolong
