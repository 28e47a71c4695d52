#include "cwhom/dvf.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace cwhom {

long long CriticalCells::total() const {
    long long s = 0;
    for (const auto& v : cells) s += (long long)v.size();
    return s;
}

namespace {

enum State : char { kPotential = 0, kNonCritical = 1, kCritical = 2 };

struct OrderKey {
    int dim;
    int prio;
    cell_t idx;
    bool operator<(const OrderKey& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (prio != o.prio) return prio < o.prio;
        return idx < o.idx;
    }
    bool operator>(const OrderKey& o) const { return o < *this; }
};

} // namespace

DiscreteVectorField build_maximal_dvf(const RegularCW& x,
                                      const std::vector<std::vector<int>>* priority) {
    const int dim = x.dimension();
    auto prio = [&](int d, cell_t k) -> int {
        if (!priority) return 0;
        return (*priority)[size_t(d)][size_t(k)];
    };

    std::vector<std::vector<char>> state(size_t(dim) + 1);
    std::vector<std::vector<int>> pc_facets(size_t(dim) + 1); // potentially-critical facet count
    for (int d = 0; d <= dim; ++d) {
        state[size_t(d)].assign(size_t(x.ncells(d)), kPotential);
        pc_facets[size_t(d)].assign(size_t(x.ncells(d)), 0);
        for (cell_t k = 0; k < x.ncells(d); ++k)
            pc_facets[size_t(d)][size_t(k)] = int(x.boundary(d, k).size());
    }

    DiscreteVectorField v;
    v.vector_field.resize(size_t(dim) + 1);
    v.inverse_vector_field.resize(size_t(dim) + 1);
    for (int d = 1; d <= dim; ++d) {
        v.vector_field[size_t(d)].assign(size_t(x.ncells(d - 1)), -1);
        v.inverse_vector_field[size_t(d)].assign(size_t(x.ncells(d)), -1);
    }

    // pair candidates keyed by the order of the source cell; lazily validated
    using Pair = std::pair<OrderKey, std::pair<std::pair<int, cell_t>, cell_t>>; // (key,(s,t))
    std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
    // remaining potentially critical cells, keyed by order; lazily validated
    using Cand = std::pair<OrderKey, std::pair<int, cell_t>>;
    std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> potentials;
    for (int d = 0; d <= dim; ++d)
        for (cell_t k = 0; k < x.ncells(d); ++k)
            potentials.push({{d, prio(d, k), k}, {d, k}});

    auto enqueue_if_pairable = [&](int d, cell_t t) {
        // t of dimension d, needs exactly one potentially critical facet
        if (d < 1 || state[size_t(d)][size_t(t)] != kPotential) return;
        if (pc_facets[size_t(d)][size_t(t)] != 1) return;
        for (cell_t s : x.boundary(d, t))
            if (state[size_t(d) - 1][size_t(s)] == kPotential) {
                pairs.push({{d - 1, prio(d - 1, s), s}, {{d - 1, s}, t}});
                return;
            }
    };

    auto leave_potential = [&](int d, cell_t k, char new_state) {
        state[size_t(d)][size_t(k)] = new_state;
        for (cell_t up : x.coboundary(d, k)) {
            --pc_facets[size_t(d) + 1][size_t(up)];
            enqueue_if_pairable(d + 1, up);
        }
    };

    for (;;) {
        // drain valid pairs
        while (!pairs.empty()) {
            auto [key, st] = pairs.top();
            pairs.pop();
            auto [sc, t] = st;
            auto [sd, s] = sc;
            const int td = sd + 1;
            if (state[size_t(sd)][size_t(s)] != kPotential ||
                state[size_t(td)][size_t(t)] != kPotential)
                continue;
            if (pc_facets[size_t(td)][size_t(t)] != 1) continue;
            // s must still be the unique potentially critical facet of t
            bool s_is_it = false;
            for (cell_t f : x.boundary(td, t))
                if (state[size_t(sd)][size_t(f)] == kPotential) {
                    s_is_it = (f == s);
                    break;
                }
            if (!s_is_it) continue;
            v.vector_field[size_t(td)][size_t(s)] = t;
            v.inverse_vector_field[size_t(td)][size_t(t)] = s;
            leave_potential(sd, s, kNonCritical);
            leave_potential(td, t, kNonCritical);
        }
        // criticalize the minimal remaining potentially critical cell
        bool found = false;
        while (!potentials.empty()) {
            auto [key, ck] = potentials.top();
            potentials.pop();
            auto [d, k] = ck;
            if (state[size_t(d)][size_t(k)] != kPotential) continue;
            leave_potential(d, k, kCritical);
            found = true;
            break;
        }
        if (!found) break;
    }

#ifndef NDEBUG
    assert(is_admissible(x, v));
#endif
    return v;
}

bool is_admissible(const RegularCW& x, const DiscreteVectorField& v) {
    const int dim = x.dimension();
    if ((int)v.vector_field.size() != dim + 1 || (int)v.inverse_vector_field.size() != dim + 1)
        return false;
    // structural checks: mutual inverse, source in boundary of target,
    // no cell in two arrows
    for (int d = 1; d <= dim; ++d) {
        for (cell_t s = 0; s < x.ncells(d - 1); ++s) {
            cell_t t = v.vector_field[size_t(d)][size_t(s)];
            if (t < 0) continue;
            if (t >= x.ncells(d)) return false;
            if (v.inverse_vector_field[size_t(d)][size_t(t)] != s) return false;
            auto b = x.boundary(d, t);
            if (!std::binary_search(b.begin(), b.end(), s)) return false;
            // source must not itself be the target of a lower arrow
            if (v.arrow_source(d - 1, s) >= 0) return false;
        }
        for (cell_t t = 0; t < x.ncells(d); ++t) {
            cell_t s = v.inverse_vector_field[size_t(d)][size_t(t)];
            if (s >= 0 && v.vector_field[size_t(d)][size_t(s)] != t) return false;
        }
    }

    // circuit check per level: arrows with source dimension d-1
    for (int d = 1; d <= dim; ++d) {
        const auto& vf = v.vector_field[size_t(d)];
        // node = source cell s with an arrow; edges s -> s' iff s' in boundary(target(s))
        std::vector<char> color(size_t(x.ncells(d - 1)), 0); // 0 white, 1 grey, 2 black
        for (cell_t s0 = 0; s0 < x.ncells(d - 1); ++s0) {
            if (vf[size_t(s0)] < 0 || color[size_t(s0)]) continue;
            std::vector<std::pair<cell_t, size_t>> stack{{s0, 0}};
            color[size_t(s0)] = 1;
            while (!stack.empty()) {
                auto& [s, pos] = stack.back();
                auto nb = x.boundary(d, vf[size_t(s)]);
                bool descended = false;
                while (pos < nb.size()) {
                    cell_t nxt = nb[pos++];
                    if (nxt == s || vf[size_t(nxt)] < 0) continue;
                    if (color[size_t(nxt)] == 1) return false; // circuit
                    if (color[size_t(nxt)] == 0) {
                        color[size_t(nxt)] = 1;
                        stack.push_back({nxt, 0});
                        descended = true;
                        break;
                    }
                }
                if (!descended && pos >= nb.size()) {
                    color[size_t(s)] = 2;
                    stack.pop_back();
                }
            }
        }
    }
    return true;
}

CriticalCells critical_cells(const RegularCW& x, const DiscreteVectorField& v) {
    CriticalCells out;
    out.cells.resize(size_t(x.dimension()) + 1);
    for (int d = 0; d <= x.dimension(); ++d)
        for (cell_t k = 0; k < x.ncells(d); ++k)
            if (!v.involved(d, k)) out.cells[size_t(d)].push_back(k);
    return out;
}

IntChainComplex morse_chain_complex(const RegularCW& x, const DiscreteVectorField& v) {
    const int dim = x.dimension();
    SignedChainComplexZ s = signed_chain_complex(x);
    CriticalCells crit = critical_cells(x, v);

    // positions of critical cells inside their dimension
    std::vector<std::vector<cell_t>> pos(size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        pos[size_t(d)].assign(size_t(x.ncells(d)), -1);
        for (size_t i = 0; i < crit.cells[size_t(d)].size(); ++i)
            pos[size_t(d)][size_t(crit.cells[size_t(d)][i])] = cell_t(i);
    }

    // lifted (here: plain signed) boundary provider
    std::vector<std::vector<std::vector<FlowTerm<TrivialRing>>>> bnd(size_t(dim) + 1);
    for (int d = 1; d <= dim; ++d) {
        bnd[size_t(d)].resize(size_t(x.ncells(d)));
        for (cell_t k = 0; k < x.ncells(d); ++k)
            for (cell_t f : x.boundary(d, k))
                bnd[size_t(d)][size_t(k)].push_back({s.sign(x, d, k, f), f, 0});
    }
    auto provider = [&](int d, cell_t k) -> const std::vector<FlowTerm<TrivialRing>>& {
        return bnd[size_t(d)][size_t(k)];
    };
    MorseFlow<TrivialRing, decltype(provider)> flow(x, v, TrivialRing{}, provider);

    IntChainComplex c;
    c.ranks.resize(size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) c.ranks[size_t(d)] = crit.count(d);
    c.boundaries.resize(size_t(dim) + 1);
    c.relations.resize(size_t(dim) + 1);
    c.relation_maps.resize(size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) c.relations[size_t(d)] = TMat(c.ranks[size_t(d)], 0);
    for (int d = 1; d <= dim; ++d) {
        TMat m(c.ranks[size_t(d) - 1], c.ranks[size_t(d)]);
        for (size_t j = 0; j < crit.cells[size_t(d)].size(); ++j) {
            cell_t ccell = crit.cells[size_t(d)][j];
            for (const auto& term : bnd[size_t(d)][size_t(ccell)])
                for (const auto& ft : flow.flow(d - 1, term.cell))
                    m.add(pos[size_t(d) - 1][size_t(ft.cell)], (long long)j,
                          term.coeff * ft.coeff);
        }
        m.normalize();
        c.boundaries[size_t(d)] = std::move(m);
    }
    return c;
}

} // namespace cwhom
