#include "cwhom/cell_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cwhom {

RegularCW RegularCW::from_boundaries(const std::vector<std::vector<std::vector<cell_t>>>& b) {
    std::vector<CellRows> rows(b.size());
    for (size_t d = 0; d < b.size(); ++d)
        for (const auto& faces : b[d]) {
            std::vector<cell_t> r;
            r.reserve(faces.size());
            for (cell_t a : faces) r.push_back(a - 1); // to 0-based
            rows[d].push_row(r);
        }
    return from_rows(std::move(rows));
}

RegularCW RegularCW::from_rows(std::vector<CellRows> bnd) {
    // trim trailing empty dimensions
    while (bnd.size() > 1 && bnd.back().count() == 0) bnd.pop_back();
    RegularCW x;
    x.bnd_ = std::move(bnd);
    x.finish();
    return x;
}

void RegularCW::finish() {
    const int dim = int(bnd_.size()) - 1;

    for (int d = 0; d <= dim; ++d) {
        CellRows& rows = bnd_[size_t(d)];
        const long long nprev = d == 0 ? 0 : bnd_[size_t(d - 1)].count();
        for (cell_t k = 0; k < rows.count(); ++k) {
            cell_t* beg = rows.dat.data() + rows.off[size_t(k)];
            cell_t* end = rows.dat.data() + rows.off[size_t(k) + 1];
            std::sort(beg, end);
            if (d == 0) {
                if (beg != end) throw MalformedLattice("0-cell with nonempty boundary");
                continue;
            }
            if (beg == end)
                throw MalformedLattice("empty boundary of a " + std::to_string(d) + "-cell");
            for (cell_t* p = beg; p != end; ++p) {
                if (*p < 0 || *p >= nprev)
                    throw MalformedLattice("boundary index out of range in dimension " +
                                           std::to_string(d));
                if (p + 1 != end && *p == *(p + 1))
                    throw MalformedLattice("repeated face in a boundary list");
            }
            if (d == 1 && end - beg != 2)
                throw MalformedLattice("1-cell without exactly 2 distinct vertices");
        }
    }

    // diamond condition: each (d-2)-cell under a d-cell is under exactly two
    // of its (d-1)-faces
    for (int d = 2; d <= dim; ++d) {
        const CellRows& rows = bnd_[size_t(d)];
        const CellRows& prev = bnd_[size_t(d - 1)];
        std::vector<cell_t> grand;
        for (cell_t k = 0; k < rows.count(); ++k) {
            grand.clear();
            for (cell_t f : rows.row(k)) {
                auto r = prev.row(f);
                grand.insert(grand.end(), r.begin(), r.end());
            }
            std::sort(grand.begin(), grand.end());
            for (size_t i = 0; i < grand.size();) {
                size_t j = i;
                while (j < grand.size() && grand[j] == grand[i]) ++j;
                if (j - i != 2)
                    throw MalformedLattice("diamond condition fails at a " + std::to_string(d) +
                                           "-cell");
                i = j;
            }
        }
    }

    // coboundaries = transpose
    cob_.assign(bnd_.size(), CellRows{});
    for (int d = 0; d <= dim; ++d) {
        CellRows& out = cob_[size_t(d)];
        const long long n = bnd_[size_t(d)].count();
        if (d == dim) {
            out.off.assign(size_t(n) + 1, 0);
            continue;
        }
        const CellRows& up = bnd_[size_t(d + 1)];
        std::vector<std::int64_t> cnt(size_t(n) + 1, 0);
        for (cell_t v : up.dat) ++cnt[size_t(v) + 1];
        std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
        out.off = cnt;
        out.dat.resize(up.dat.size());
        std::vector<std::int64_t> cursor(cnt.begin(), cnt.end() - 1);
        for (cell_t k = 0; k < up.count(); ++k)
            for (cell_t v : up.row(k)) out.dat[size_t(cursor[size_t(v)]++)] = k;
    }

    props_ = {{"dimension", std::to_string(dim)}};
}

long long RegularCW::size() const {
    long long s = 0;
    for (const auto& r : bnd_) s += r.count();
    return s;
}

long long RegularCW::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d < (int)bnd_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * bnd_[size_t(d)].count();
    return chi;
}

long long size(const RegularCW& x) { return x.size(); }
int dimension(const RegularCW& x) { return x.dimension(); }
long long euler_characteristic(const RegularCW& x) { return x.euler_characteristic(); }

std::vector<std::vector<char>> closure_mask(const RegularCW& x,
                                            const std::vector<std::vector<char>>& seed) {
    std::vector<std::vector<char>> mask(seed);
    mask.resize(size_t(x.dimension()) + 1);
    for (int d = 0; d <= x.dimension(); ++d) mask[size_t(d)].resize(size_t(x.ncells(d)), 0);
    for (int d = x.dimension(); d >= 1; --d)
        for (cell_t k = 0; k < x.ncells(d); ++k)
            if (mask[size_t(d)][size_t(k)])
                for (cell_t f : x.boundary(d, k)) mask[size_t(d - 1)][size_t(f)] = 1;
    return mask;
}

std::vector<CellRef> closure(const RegularCW& x, const std::vector<CellRef>& cells) {
    std::vector<std::vector<char>> seed(size_t(x.dimension()) + 1);
    for (int d = 0; d <= x.dimension(); ++d) seed[size_t(d)].assign(size_t(x.ncells(d)), 0);
    for (const CellRef& c : cells) {
        if (c.dim < 0 || c.dim > x.dimension() || c.index < 1 || c.index > x.ncells(c.dim))
            throw MalformedLattice("cell reference out of range");
        seed[size_t(c.dim)][size_t(c.index - 1)] = 1;
    }
    auto mask = closure_mask(x, seed);
    std::vector<CellRef> out;
    for (int d = 0; d <= x.dimension(); ++d)
        for (cell_t k = 0; k < x.ncells(d); ++k)
            if (mask[size_t(d)][size_t(k)]) out.push_back({d, k + 1});
    return out;
}

Subcomplex subcomplex_masked(const RegularCW& x, const std::vector<std::vector<char>>& mask) {
    const int dim = x.dimension();
    std::vector<std::vector<cell_t>> newidx(size_t(dim) + 1);
    Subcomplex out;
    out.parent.resize(size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        newidx[size_t(d)].assign(size_t(x.ncells(d)), -1);
        for (cell_t k = 0; k < x.ncells(d); ++k)
            if (mask[size_t(d)][size_t(k)]) {
                newidx[size_t(d)][size_t(k)] = cell_t(out.parent[size_t(d)].size());
                out.parent[size_t(d)].push_back(k);
            }
    }
    std::vector<CellRows> rows(size_t(dim) + 1);
    std::vector<cell_t> buf;
    for (int d = 0; d <= dim; ++d)
        for (cell_t k : out.parent[size_t(d)]) {
            buf.clear();
            for (cell_t f : x.boundary(d, k)) {
                cell_t nf = newidx[size_t(d - 1)][size_t(f)];
                if (nf < 0) throw NotClosed("cell set is not downward closed");
                buf.push_back(nf);
            }
            rows[size_t(d)].push_row(buf);
        }
    out.complex = RegularCW::from_rows(std::move(rows));
    out.parent.resize(size_t(out.complex.dimension()) + 1);
    return out;
}

Subcomplex subcomplex(const RegularCW& x, const std::vector<CellRef>& cells) {
    std::vector<std::vector<char>> mask(size_t(x.dimension()) + 1);
    for (int d = 0; d <= x.dimension(); ++d) mask[size_t(d)].assign(size_t(x.ncells(d)), 0);
    for (const CellRef& c : cells) {
        if (c.dim < 0 || c.dim > x.dimension() || c.index < 1 || c.index > x.ncells(c.dim))
            throw MalformedLattice("cell reference out of range");
        mask[size_t(c.dim)][size_t(c.index - 1)] = 1;
    }
    return subcomplex_masked(x, mask);
}

namespace {

// Union-find over all cells, flattened.
struct UF {
    std::vector<long long> p;
    explicit UF(long long n) : p(size_t(n)) { std::iota(p.begin(), p.end(), 0); }
    long long find(long long a) {
        while (p[size_t(a)] != a) a = p[size_t(a)] = p[size_t(p[size_t(a)])];
        return a;
    }
    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) p[size_t(b)] = a;
    }
};

} // namespace

std::vector<Subcomplex> path_components(const RegularCW& x) {
    const int dim = x.dimension();
    std::vector<long long> base(size_t(dim) + 2, 0);
    for (int d = 0; d <= dim; ++d) base[size_t(d) + 1] = base[size_t(d)] + x.ncells(d);
    UF uf(base[size_t(dim) + 1]);
    for (int d = 1; d <= dim; ++d)
        for (cell_t k = 0; k < x.ncells(d); ++k)
            for (cell_t f : x.boundary(d, k)) uf.unite(base[size_t(d)] + k, base[size_t(d - 1)] + f);

    std::vector<long long> roots;
    std::vector<int> comp(size_t(base.back()), -1);
    for (long long i = 0; i < base.back(); ++i) {
        long long r = uf.find(i);
        if (comp[size_t(r)] < 0) {
            comp[size_t(r)] = int(roots.size());
            roots.push_back(r);
        }
    }
    std::vector<Subcomplex> out;
    for (size_t c = 0; c < roots.size(); ++c) {
        std::vector<std::vector<char>> mask(size_t(dim) + 1);
        for (int d = 0; d <= dim; ++d) {
            mask[size_t(d)].assign(size_t(x.ncells(d)), 0);
            for (cell_t k = 0; k < x.ncells(d); ++k)
                if (comp[size_t(uf.find(base[size_t(d)] + k))] == int(c))
                    mask[size_t(d)][size_t(k)] = 1;
        }
        out.push_back(subcomplex_masked(x, mask));
    }
    return out;
}

bool is_connected(const RegularCW& x) { return path_components(x).size() == 1; }

namespace {

// Offset of the (dim_e, dim_f) block inside product dimension dim_e + dim_f.
long long block_offset(const RegularCW& x, const RegularCW& y, int dim_e, int dim_f) {
    long long off = 0;
    const int d = dim_e + dim_f;
    for (int p = 0; p < dim_e; ++p) off += x.ncells(p) * y.ncells(d - p);
    return off;
}

} // namespace

cell_t product_cell_index(const RegularCW& x, const RegularCW& y, int dim_e, cell_t e,
                          int dim_f, cell_t f) {
    return cell_t(block_offset(x, y, dim_e, dim_f) + (long long)e * y.ncells(dim_f) + f);
}

RegularCW direct_product(const RegularCW& x, const RegularCW& y) {
    const int dim = x.dimension() + y.dimension();
    std::vector<CellRows> rows(size_t(dim) + 1);
    std::vector<cell_t> buf;
    for (int d = 0; d <= dim; ++d) {
        for (int p = std::max(0, d - y.dimension()); p <= std::min(d, x.dimension()); ++p) {
            const int q = d - p;
            const long long prev_pm1 = p > 0 ? block_offset(x, y, p - 1, q) : 0;
            const long long prev_qm1 = q > 0 ? block_offset(x, y, p, q - 1) : 0;
            for (cell_t e = 0; e < x.ncells(p); ++e)
                for (cell_t f = 0; f < y.ncells(q); ++f) {
                    buf.clear();
                    if (p > 0)
                        for (cell_t ep : x.boundary(p, e))
                            buf.push_back(cell_t(prev_pm1 + (long long)ep * y.ncells(q) + f));
                    if (q > 0)
                        for (cell_t fp : y.boundary(q, f))
                            buf.push_back(cell_t(prev_qm1 + (long long)e * y.ncells(q - 1) + fp));
                    rows[size_t(d)].push_row(buf);
                }
        }
    }
    return RegularCW::from_rows(std::move(rows));
}

} // namespace cwhom
