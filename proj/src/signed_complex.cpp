#include "cwhom/signed_complex.hpp"

#include <algorithm>
#include <map>

namespace cwhom {

namespace {

long long row_start(const RegularCW& x, int d, cell_t k) {
    // recover the flat offset of the row: boundary(d,k) points into the CSR data
    return x.boundary(d, k).data() - x.boundary(d, 0).data();
}

int face_pos(std::span<const cell_t> row, cell_t f) {
    auto it = std::lower_bound(row.begin(), row.end(), f);
    if (it == row.end() || *it != f) throw MalformedLattice("face lookup failed");
    return int(it - row.begin());
}

} // namespace

int SignedChainComplexZ::sign(const RegularCW& x, int d, cell_t k, cell_t f) const {
    auto row = x.boundary(d, k);
    return signs[size_t(d)][size_t(row_start(x, d, k) + face_pos(row, f))];
}

TMat SignedChainComplexZ::matrix(const RegularCW& x, int d) const {
    TMat m(x.ncells(d - 1), x.ncells(d));
    for (cell_t k = 0; k < x.ncells(d); ++k) {
        auto row = x.boundary(d, k);
        long long base = row_start(x, d, k);
        for (size_t i = 0; i < row.size(); ++i)
            m.add(row[i], k, signs[size_t(d)][size_t(base + (long long)i)]);
    }
    return m;
}

IntChainComplex SignedChainComplexZ::chain_complex(const RegularCW& x) const {
    IntChainComplex c;
    c.ranks = ranks;
    c.boundaries.resize(ranks.size());
    c.relations.resize(ranks.size());
    c.relation_maps.resize(ranks.size());
    for (size_t d = 0; d < ranks.size(); ++d) c.relations[d] = TMat((long long)ranks[d], 0);
    for (int d = 1; d < (int)ranks.size(); ++d) c.boundaries[size_t(d)] = matrix(x, d);
    return c;
}

std::vector<AbelianInvariants> cw_homology(const RegularCW& x) {
    SignedChainComplexZ s = signed_chain_complex(x);
    return homology_all(s.chain_complex(x));
}

SignedChainComplexZ signed_chain_complex(const RegularCW& x) {
    const int dim = x.dimension();
    SignedChainComplexZ s;
    s.ranks.resize(size_t(dim) + 1);
    s.signs.resize(size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) s.ranks[size_t(d)] = x.ncells(d);

    if (dim >= 1) {
        // edges: boundary rows are sorted, orient min -> max
        s.signs[1].reserve(size_t(x.ncells(1)) * 2);
        for (cell_t k = 0; k < x.ncells(1); ++k) {
            s.signs[1].push_back(-1);
            s.signs[1].push_back(+1);
        }
    }

    std::vector<int8_t> eps;
    std::vector<char> seen;
    for (int d = 2; d <= dim; ++d) {
        auto& flat = s.signs[size_t(d)];
        for (cell_t k = 0; k < x.ncells(d); ++k) {
            auto faces = x.boundary(d, k);
            const int m = int(faces.size());
            // graph on the faces: one edge per common (d-2)-cell
            std::map<cell_t, std::pair<int, int>> via;
            for (int i = 0; i < m; ++i)
                for (cell_t g : x.boundary(d - 1, faces[size_t(i)])) {
                    auto it = via.find(g);
                    if (it == via.end())
                        via[g] = {i, -1};
                    else
                        it->second.second = i;
                }
            eps.assign(size_t(m), 0);
            seen.assign(size_t(m), 0);
            eps[0] = 1;
            seen[0] = 1;
            std::vector<int> stack{0};
            int visited = 1;
            while (!stack.empty()) {
                int i = stack.back();
                stack.pop_back();
                for (cell_t g : x.boundary(d - 1, faces[size_t(i)])) {
                    auto [a, b] = via[g];
                    int j = (a == i) ? b : a;
                    if (j < 0) throw MalformedLattice("dangling ridge in cell boundary");
                    int rel = -s.sign(x, d - 1, faces[size_t(i)], g) *
                              s.sign(x, d - 1, faces[size_t(j)], g);
                    if (!seen[size_t(j)]) {
                        eps[size_t(j)] = int8_t(rel * eps[size_t(i)]);
                        seen[size_t(j)] = 1;
                        stack.push_back(j);
                        ++visited;
                    } else if (eps[size_t(j)] != rel * eps[size_t(i)]) {
                        throw MalformedLattice("inconsistent orientation on a cell boundary");
                    }
                }
            }
            if (visited != m) throw MalformedLattice("disconnected cell boundary");
            flat.insert(flat.end(), eps.begin(), eps.end());
        }
    }
    return s;
}

} // namespace cwhom
