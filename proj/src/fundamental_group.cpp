#include "cwhom/fundamental_group.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace cwhom {

OmegaMap maximal_tree(const RegularCW& x) {
    const long long nv = x.ncells(0), ne = x.ncells(1);
    OmegaMap om;
    om.tree.assign(size_t(ne), 0);
    om.words.assign(size_t(ne), {});
    if (nv == 0) return om;

    std::vector<char> seen(size_t(nv), 0);
    std::queue<cell_t> q;
    q.push(0);
    seen[0] = 1;
    long long reached = 1;
    while (!q.empty()) {
        cell_t v = q.front();
        q.pop();
        for (cell_t e : x.coboundary(0, v)) {
            auto b = x.boundary(1, e);
            cell_t w = b[0] == v ? b[1] : b[0];
            if (!seen[size_t(w)]) {
                seen[size_t(w)] = 1;
                om.tree[size_t(e)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    if (reached != nv) throw NotConnected("1-skeleton is not connected");
    for (cell_t e = 0; e < ne; ++e)
        if (!om.tree[size_t(e)]) {
            ++om.generator_count;
            om.generator_edges.push_back(e);
            om.words[size_t(e)] = {om.generator_count};
        }
    return om;
}

std::vector<std::pair<cell_t, int>> boundary_circuit(const RegularCW& x, cell_t two_cell) {
    auto edges = x.boundary(2, two_cell);
    std::map<cell_t, std::pair<cell_t, cell_t>> at_vertex; // vertex -> its two edges
    for (cell_t e : edges)
        for (cell_t v : x.boundary(1, e)) {
            auto it = at_vertex.find(v);
            if (it == at_vertex.end())
                at_vertex[v] = {e, -1};
            else if (it->second.second < 0)
                it->second.second = e;
            else
                throw MalformedLattice("2-cell boundary is not a circle");
        }
    for (auto& [v, pr] : at_vertex)
        if (pr.second < 0) throw MalformedLattice("2-cell boundary is not a circle");

    std::vector<std::pair<cell_t, int>> circuit;
    cell_t e = edges[0];
    auto b0 = x.boundary(1, e);
    cell_t start = b0[0], at = b0[1];
    circuit.push_back({e, +1});
    while (at != start) {
        auto [e1, e2] = at_vertex[at];
        cell_t nxt = (e1 == e) ? e2 : e1;
        auto b = x.boundary(1, nxt);
        circuit.push_back({nxt, b[0] == at ? +1 : -1});
        at = b[0] == at ? b[1] : b[0];
        e = nxt;
    }
    if (circuit.size() != edges.size())
        throw MalformedLattice("2-cell boundary is not a single circle");
    return circuit;
}

OmegaMap omega_from_dvf(const RegularCW& x, const DiscreteVectorField& v) {
    const long long ne = x.ncells(1);
    OmegaMap om;
    om.tree.assign(size_t(ne), 0);
    om.words.assign(size_t(ne), {});

    enum Kind : char { kTree, kCritical, kPaired };
    std::vector<Kind> kind(static_cast<size_t>(ne));
    for (cell_t e = 0; e < ne; ++e) {
        if (v.arrow_source(1, e) >= 0)
            kind[size_t(e)] = kTree;
        else if (v.arrow_target(1, e) >= 0)
            kind[size_t(e)] = kPaired;
        else
            kind[size_t(e)] = kCritical;
    }
    for (cell_t e = 0; e < ne; ++e) {
        if (kind[size_t(e)] == kTree) {
            om.tree[size_t(e)] = 1;
        } else if (kind[size_t(e)] == kCritical) {
            ++om.generator_count;
            om.generator_edges.push_back(e);
            om.words[size_t(e)] = {om.generator_count};
        }
    }

    // expand edges paired with 2-cells by walking their circuits; iterative
    // so long slide chains cannot overflow the call stack
    std::vector<char> done(size_t(ne), 0);
    std::vector<char> active(size_t(ne), 0);
    for (cell_t e = 0; e < ne; ++e) done[size_t(e)] = kind[size_t(e)] != kPaired;

    for (cell_t e0 = 0; e0 < ne; ++e0) {
        if (done[size_t(e0)]) continue;
        std::vector<cell_t> stack{e0};
        active[size_t(e0)] = 1;
        while (!stack.empty()) {
            cell_t e = stack.back();
            if (done[size_t(e)]) {
                stack.pop_back();
                continue;
            }
            cell_t t = v.arrow_target(1, e);
            auto circuit = boundary_circuit(x, t);
            bool ready = true;
            for (auto [f, dir] : circuit) {
                if (f == e || done[size_t(f)]) continue;
                if (active[size_t(f)])
                    throw TopologyError("discrete vector field has a circuit");
                active[size_t(f)] = 1;
                stack.push_back(f);
                ready = false;
            }
            if (!ready) continue;

            size_t pos = 0;
            while (circuit[pos].first != e) ++pos;
            GroupWord rest;
            for (size_t i = 1; i < circuit.size(); ++i) {
                auto [f, dir] = circuit[(pos + i) % circuit.size()];
                const GroupWord& wf = om.words[size_t(f)];
                if (dir > 0)
                    rest.insert(rest.end(), wf.begin(), wf.end());
                else {
                    GroupWord inv = word_inverse(wf);
                    rest.insert(rest.end(), inv.begin(), inv.end());
                }
            }
            rest = free_reduce(std::move(rest));
            om.words[size_t(e)] =
                circuit[pos].second > 0 ? word_inverse(rest) : std::move(rest);
            done[size_t(e)] = 1;
            active[size_t(e)] = 0;
            stack.pop_back();
        }
    }
    return om;
}

GroupWord deform_circuit(const RegularCW& x, const OmegaMap& omega,
                         const std::vector<std::int32_t>& circuit) {
    if (circuit.empty()) return {};
    auto endpoints = [&](std::int32_t step) -> std::pair<cell_t, cell_t> {
        cell_t e = cell_t(std::abs(step)) - 1;
        if (e < 0 || e >= x.ncells(1)) throw NotClosed("edge index out of range");
        auto b = x.boundary(1, e);
        return step > 0 ? std::pair<cell_t, cell_t>{b[0], b[1]}
                        : std::pair<cell_t, cell_t>{b[1], b[0]};
    };
    cell_t start = endpoints(circuit[0]).first;
    cell_t at = start;
    GroupWord w;
    for (std::int32_t step : circuit) {
        auto [from, to] = endpoints(step);
        if (from != at) throw NotClosed("edge path is not contiguous");
        const GroupWord& we = omega.words[size_t(std::abs(step)) - 1];
        if (step > 0)
            w.insert(w.end(), we.begin(), we.end());
        else {
            GroupWord inv = word_inverse(we);
            w.insert(w.end(), inv.begin(), inv.end());
        }
        at = to;
    }
    if (at != start) throw NotClosed("edge path does not close up");
    return free_reduce(std::move(w));
}

FpPresentation pi1_presentation(const RegularCW& x, const DiscreteVectorField& v) {
    if (!is_connected(x)) throw NotConnected("fundamental group needs a connected complex");
    CriticalCells crit = critical_cells(x, v);
    if (crit.count(0) != 1)
        throw TopologyError("vector field must have a unique critical 0-cell");

    OmegaMap om = omega_from_dvf(x, v);
    FpPresentation p;
    p.generator_count = om.generator_count;
    p.generator_cells = om.generator_edges;
    if (x.dimension() >= 2)
        for (cell_t c : crit.cells[2]) {
            std::vector<std::int32_t> path;
            for (auto [e, dir] : boundary_circuit(x, c)) path.push_back(dir * (e + 1));
            p.relators.push_back(deform_circuit(x, om, path));
            p.relator_cells.push_back(c);
        }
    return p;
}

FpPresentation pi1_presentation(const RegularCW& x) {
    DiscreteVectorField v = build_maximal_dvf(x);
    return pi1_presentation(x, v);
}

} // namespace cwhom
