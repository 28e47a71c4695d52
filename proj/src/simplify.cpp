#include "cwhom/simplify.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace cwhom {

namespace {

struct Work {
    // mutable jagged copy of the lattice, with alive flags
    std::vector<std::vector<std::vector<cell_t>>> bnd, cob;
    std::vector<std::vector<char>> alive;

    explicit Work(const RegularCW& x) {
        const int dim = x.dimension();
        bnd.resize(size_t(dim) + 1);
        cob.resize(size_t(dim) + 1);
        alive.resize(size_t(dim) + 1);
        for (int d = 0; d <= dim; ++d) {
            bnd[size_t(d)].resize(size_t(x.ncells(d)));
            cob[size_t(d)].resize(size_t(x.ncells(d)));
            alive[size_t(d)].assign(size_t(x.ncells(d)), 1);
            for (cell_t k = 0; k < x.ncells(d); ++k) {
                auto b = x.boundary(d, k);
                bnd[size_t(d)][size_t(k)].assign(b.begin(), b.end());
                auto c = x.coboundary(d, k);
                cob[size_t(d)][size_t(k)].assign(c.begin(), c.end());
            }
        }
    }

    // all cells strictly below (d, k), as (dim, idx) pairs
    std::set<std::pair<int, cell_t>> closed_boundary(int d, cell_t k) const {
        std::set<std::pair<int, cell_t>> out;
        std::vector<std::pair<int, cell_t>> stack;
        for (cell_t f : bnd[size_t(d)][size_t(k)]) stack.push_back({d - 1, f});
        while (!stack.empty()) {
            auto [dd, kk] = stack.back();
            stack.pop_back();
            if (!out.insert({dd, kk}).second) continue;
            for (cell_t f : bnd[size_t(dd)][size_t(kk)]) stack.push_back({dd - 1, f});
        }
        return out;
    }

    static void erase_val(std::vector<cell_t>& v, cell_t a) {
        v.erase(std::remove(v.begin(), v.end(), a), v.end());
    }

    // Try the merge at k-cell e; true if performed.
    bool try_merge(int k, cell_t e) {
        auto& cofaces = cob[size_t(k)][size_t(e)];
        if (cofaces.size() != 2) return false;
        cell_t e1 = cofaces[0], e2 = cofaces[1];
        if (e1 == e2) return false;
        auto c1 = cob[size_t(k) + 1][size_t(e1)];
        auto c2 = cob[size_t(k) + 1][size_t(e2)];
        std::sort(c1.begin(), c1.end());
        std::sort(c2.begin(), c2.end());
        if (c1 != c2) return false;

        auto v0 = closed_boundary(k, e);
        auto v1 = closed_boundary(k + 1, e1);
        auto v2 = closed_boundary(k + 1, e2);
        size_t inter = 0;
        for (const auto& c : v1) inter += v2.count(c);
        if (inter != 1 + v0.size()) return false;

        // new (k+1)-cell: boundary = (bnd e1 union bnd e2) minus e
        std::vector<cell_t> nb;
        nb.insert(nb.end(), bnd[size_t(k) + 1][size_t(e1)].begin(),
                  bnd[size_t(k) + 1][size_t(e1)].end());
        nb.insert(nb.end(), bnd[size_t(k) + 1][size_t(e2)].begin(),
                  bnd[size_t(k) + 1][size_t(e2)].end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        erase_val(nb, e);

        cell_t f = cell_t(bnd[size_t(k) + 1].size());
        bnd[size_t(k) + 1].push_back(nb);
        cob[size_t(k) + 1].push_back(c1);
        alive[size_t(k) + 1].push_back(1);

        for (cell_t b : nb) {
            erase_val(cob[size_t(k)][size_t(b)], e1);
            erase_val(cob[size_t(k)][size_t(b)], e2);
            cob[size_t(k)][size_t(b)].push_back(f);
        }
        for (cell_t c : c1) {
            erase_val(bnd[size_t(k) + 2][size_t(c)], e1);
            erase_val(bnd[size_t(k) + 2][size_t(c)], e2);
            bnd[size_t(k) + 2][size_t(c)].push_back(f);
        }
        for (cell_t b : bnd[size_t(k)][size_t(e)]) erase_val(cob[size_t(k) - 1][size_t(b)], e);

        alive[size_t(k)][size_t(e)] = 0;
        alive[size_t(k) + 1][size_t(e1)] = 0;
        alive[size_t(k) + 1][size_t(e2)] = 0;
        bnd[size_t(k)][size_t(e)].clear();
        cob[size_t(k)][size_t(e)].clear();
        bnd[size_t(k) + 1][size_t(e1)].clear();
        cob[size_t(k) + 1][size_t(e1)].clear();
        bnd[size_t(k) + 1][size_t(e2)].clear();
        cob[size_t(k) + 1][size_t(e2)].clear();
        return true;
    }
};

} // namespace

RegularCW simplify(const RegularCW& x) {
    const int dim = x.dimension();
    if (dim == 0) return x;
    Work w(x);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int k = 0; k < dim; ++k)
            for (size_t e = 0; e < w.bnd[size_t(k)].size(); ++e)
                if (w.alive[size_t(k)][e] && w.try_merge(k, cell_t(e))) changed = true;
    }

    // compact the survivors
    std::vector<std::vector<cell_t>> newidx(size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        newidx[size_t(d)].assign(w.bnd[size_t(d)].size(), -1);
        cell_t next = 0;
        for (size_t kk = 0; kk < w.bnd[size_t(d)].size(); ++kk)
            if (w.alive[size_t(d)][kk]) newidx[size_t(d)][kk] = next++;
    }
    std::vector<CellRows> rows(size_t(dim) + 1);
    std::vector<cell_t> buf;
    for (int d = 0; d <= dim; ++d)
        for (size_t kk = 0; kk < w.bnd[size_t(d)].size(); ++kk) {
            if (!w.alive[size_t(d)][kk]) continue;
            buf.clear();
            for (cell_t b : w.bnd[size_t(d)][kk]) buf.push_back(newidx[size_t(d - 1)][size_t(b)]);
            rows[size_t(d)].push_row(buf);
        }
    return RegularCW::from_rows(std::move(rows));
}

} // namespace cwhom
