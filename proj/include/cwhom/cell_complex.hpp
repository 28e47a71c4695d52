#ifndef CWHOM_CELL_COMPLEX_HPP
#define CWHOM_CELL_COMPLEX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cwhom/errors.hpp"

namespace cwhom {

using cell_t = std::int32_t;

/// A cell addressed by (dimension, 1-based index), the interchange convention.
struct CellRef {
    int dim = 0;
    cell_t index = 1;
    bool operator==(const CellRef&) const = default;
    bool operator<(const CellRef& o) const {
        return dim != o.dim ? dim < o.dim : index < o.index;
    }
};

/// Compressed jagged rows of cell indices.
struct CellRows {
    std::vector<std::int64_t> off{0};
    std::vector<cell_t> dat;

    long long count() const { return (long long)off.size() - 1; }
    std::span<const cell_t> row(cell_t k) const {
        return {dat.data() + off[size_t(k)], dat.data() + off[size_t(k) + 1]};
    }
    void push_row(std::span<const cell_t> r) {
        dat.insert(dat.end(), r.begin(), r.end());
        off.push_back((std::int64_t)dat.size());
    }
};

/// Face lattice of a finite regular CW-complex. Immutable once built.
///
/// boundary(d, k) lists the (d-1)-cells of the k-th d-cell (0-based
/// internally, sorted ascending); coboundary is the exact transpose.
class RegularCW {
public:
    RegularCW() = default;

    /// Builds from 1-based boundary lists: b[d][k] = faces of the k-th d-cell.
    static RegularCW from_boundaries(const std::vector<std::vector<std::vector<cell_t>>>& b);

    /// Builds from 0-based compressed rows (bulk constructions).
    static RegularCW from_rows(std::vector<CellRows> bnd);

    int dimension() const { return int(bnd_.size()) - 1; }
    long long size() const;
    long long ncells(int d) const {
        return (d >= 0 && d < (int)bnd_.size()) ? bnd_[size_t(d)].count() : 0;
    }
    long long euler_characteristic() const;

    std::span<const cell_t> boundary(int d, cell_t k) const { return bnd_[size_t(d)].row(k); }
    std::span<const cell_t> coboundary(int d, cell_t k) const { return cob_[size_t(d)].row(k); }

    const std::vector<std::pair<std::string, std::string>>& properties() const {
        return props_;
    }

private:
    std::vector<CellRows> bnd_; // bnd_[d], d = 0..dimension
    std::vector<CellRows> cob_; // cob_[d]: d-cell -> (d+1)-cells
    std::vector<std::pair<std::string, std::string>> props_;

    void finish(); // sort rows, transpose, validate, set properties
};

long long size(const RegularCW& x);
int dimension(const RegularCW& x);
long long euler_characteristic(const RegularCW& x);

/// A subcomplex together with the index maps back into its parent.
struct Subcomplex {
    RegularCW complex;
    std::vector<std::vector<cell_t>> parent; // parent[d][i] = 0-based cell of the parent
};

/// Smallest downward-closed set of cells containing the input (1-based refs).
std::vector<CellRef> closure(const RegularCW& x, const std::vector<CellRef>& cells);

/// Per-dimension 0-based membership masks of the closure.
std::vector<std::vector<char>> closure_mask(const RegularCW& x,
                                            const std::vector<std::vector<char>>& seed);

/// Subcomplex on a downward-closed cell set; throws NotClosed otherwise.
Subcomplex subcomplex(const RegularCW& x, const std::vector<CellRef>& cells);
Subcomplex subcomplex_masked(const RegularCW& x, const std::vector<std::vector<char>>& mask);

/// Partition into path components of the incidence graph.
std::vector<Subcomplex> path_components(const RegularCW& x);

bool is_connected(const RegularCW& x);

/// Direct product; cells are pairs (e, f) ordered lexicographically by
/// (dim e, index e, index f) within each product dimension.
RegularCW direct_product(const RegularCW& x, const RegularCW& y);

/// Index of product cell (e, f) inside direct_product(x, y).
cell_t product_cell_index(const RegularCW& x, const RegularCW& y, int dim_e, cell_t e,
                          int dim_f, cell_t f);

} // namespace cwhom

#endif
