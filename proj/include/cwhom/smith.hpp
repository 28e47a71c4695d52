#ifndef CWHOM_SMITH_HPP
#define CWHOM_SMITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "cwhom/errors.hpp"

namespace cwhom {

using Int = boost::multiprecision::cpp_int;

/// Dense arbitrary-precision integer matrix, row-major.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IMat operator*(const IMat& o) const;
    IMat operator-(const IMat& o) const;
    bool operator==(const IMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const;
    IMat transposed() const;
    std::vector<Int> col(int j) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Sparse integer matrix as int64 triplets; values of repeated positions add.
struct TMat {
    long long rows = 0, cols = 0;
    std::vector<long long> ri, ci;
    std::vector<long long> val;

    TMat() = default;
    TMat(long long r, long long c) : rows(r), cols(c) {}

    void add(long long r, long long c, long long v) {
        ri.push_back(r);
        ci.push_back(c);
        val.push_back(v);
    }
    size_t nnz() const { return val.size(); }

    /// Sort by (row, col) and merge duplicates, dropping zeros.
    void normalize();

    TMat operator*(const TMat& o) const;
    bool is_zero() const;
    IMat dense() const;
    static TMat from_dense(const IMat& m);
};

struct SmithForm {
    /// Nonzero invariant factors d1 | d2 | ... | dr (positive). Zeros implicit.
    std::vector<Int> diagonal;
    int rank() const { return int(diagonal.size()); }

    bool has_transforms = false;
    IMat U, V, Uinv, Vinv; // U * M * V = D when kept
};

/// Full Smith normal form of a dense matrix; min-abs pivoting, exact arithmetic.
SmithForm smith_normal_form(IMat m, bool want_transforms = false);

/// Invariant factors of a sparse integer matrix. Unit pivots are eliminated
/// sparsely; whatever dense core remains goes through smith_normal_form.
std::vector<Int> smith_diagonal(const TMat& m);

long long sparse_rank(const TMat& m);

/// Basis of the integer kernel lattice of m (columns of the result).
IMat kernel_basis(const IMat& m);

/// Solves K x = b exactly over the integers for a fixed full-column-rank K.
class LatticeSolver {
public:
    explicit LatticeSolver(IMat k);
    /// Throws TopologyError when b is not in the column lattice of K.
    std::vector<Int> solve(const std::vector<Int>& b) const;
    const IMat& matrix() const { return k_; }

private:
    IMat k_;
    SmithForm snf_;
};

/// Finitely generated abelian group as invariant factors.
/// Printed GAP-style with one 0 per free summand first, then torsion.
struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<Int> torsion; // entries > 1 in divisibility order

    bool operator==(const AbelianInvariants& o) const = default;
    bool operator<(const AbelianInvariants& o) const; // GAP list order on gap_list()

    std::vector<Int> gap_list() const;
    std::string gap_str() const;   // "[ 0, 0, 2, 8 ]"
    std::string human_str() const; // "Z^2 + Z/2 + Z/8"

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    static AbelianInvariants free(long long rank) { return AbelianInvariants{rank, {}}; }
};

/// Group invariants of coker(relations) inside Z^ambient_rank,
/// where the relation lattice is spanned by the given diagonal plus columns.
AbelianInvariants cokernel_invariants(long long ambient_rank, const TMat& relations);

} // namespace cwhom

#endif
