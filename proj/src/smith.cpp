#include "cwhom/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cwhom {

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw TopologyError("matrix product dimension mismatch");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += v * o(k, j);
        }
    return r;
}

IMat IMat::operator-(const IMat& o) const {
    IMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

bool IMat::is_zero() const {
    for (const Int& v : a_)
        if (v != 0) return false;
    return true;
}

IMat IMat::transposed() const {
    IMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

std::vector<Int> IMat::col(int j) const {
    std::vector<Int> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void TMat::normalize() {
    std::vector<size_t> order(val.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return ri[a] != ri[b] ? ri[a] < ri[b] : ci[a] < ci[b];
    });
    std::vector<long long> nri, nci, nval;
    for (size_t t : order) {
        if (!nri.empty() && nri.back() == ri[t] && nci.back() == ci[t]) {
            nval.back() += val[t];
            if (nval.back() == 0) {
                nri.pop_back();
                nci.pop_back();
                nval.pop_back();
            }
        } else if (val[t] != 0) {
            nri.push_back(ri[t]);
            nci.push_back(ci[t]);
            nval.push_back(val[t]);
        }
    }
    ri.swap(nri);
    ci.swap(nci);
    val.swap(nval);
}

TMat TMat::operator*(const TMat& o) const {
    if (cols != o.rows) throw TopologyError("sparse product dimension mismatch");
    // index o by row
    std::vector<std::vector<size_t>> byrow(size_t(o.rows));
    for (size_t t = 0; t < o.val.size(); ++t) byrow[size_t(o.ri[t])].push_back(t);
    TMat r(rows, o.cols);
    for (size_t t = 0; t < val.size(); ++t)
        for (size_t u : byrow[size_t(ci[t])]) r.add(ri[t], o.ci[u], val[t] * o.val[u]);
    r.normalize();
    return r;
}

bool TMat::is_zero() const {
    TMat c = *this;
    c.normalize();
    return c.val.empty();
}

IMat TMat::dense() const {
    IMat m(static_cast<int>(rows), static_cast<int>(cols));
    for (size_t t = 0; t < val.size(); ++t) m(int(ri[t]), int(ci[t])) += val[t];
    return m;
}

TMat TMat::from_dense(const IMat& m) {
    TMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                if (m(i, j) > std::numeric_limits<long long>::max() ||
                    m(i, j) < std::numeric_limits<long long>::min())
                    throw TopologyError("entry does not fit sparse int64 storage");
                r.add(i, j, m(i, j).convert_to<long long>());
            }
    return r;
}

namespace {

// ------------------------------------------------------------------
// Dense Smith normal form, min-abs pivoting.
// ------------------------------------------------------------------

struct Transforms {
    bool keep = false;
    IMat U, V, Uinv, Vinv;

    void init(int m, int n, bool k) {
        keep = k;
        if (!keep) return;
        U = IMat::identity(m);
        Uinv = IMat::identity(m);
        V = IMat::identity(n);
        Vinv = IMat::identity(n);
    }
    void swap_rows(int i, int j) {
        if (!keep) return;
        for (int c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
        for (int r = 0; r < Uinv.rows(); ++r) std::swap(Uinv(r, i), Uinv(r, j));
    }
    void swap_cols(int i, int j) {
        if (!keep) return;
        for (int r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
        for (int c = 0; c < Vinv.cols(); ++c) std::swap(Vinv(i, c), Vinv(j, c));
    }
    // row_i -= q * row_j
    void row_op(int i, int j, const Int& q) {
        if (!keep || q == 0) return;
        for (int c = 0; c < U.cols(); ++c) U(i, c) -= q * U(j, c);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv(r, j) += q * Uinv(r, i);
    }
    // col_i -= q * col_j
    void col_op(int i, int j, const Int& q) {
        if (!keep || q == 0) return;
        for (int r = 0; r < V.rows(); ++r) V(r, i) -= q * V(r, j);
        for (int c = 0; c < Vinv.cols(); ++c) Vinv(j, c) += q * Vinv(i, c);
    }
    void negate_row(int i) {
        if (!keep) return;
        for (int c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv(r, i) = -Uinv(r, i);
    }
};

} // namespace

SmithForm smith_normal_form(IMat a, bool want_transforms) {
    const int m = a.rows(), n = a.cols();
    Transforms tr;
    tr.init(m, n, want_transforms);

    int t = 0;
    while (t < m && t < n) {
        // min-abs nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int& v = a(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (pi < 0 || av < best) {
                    pi = i;
                    pj = j;
                    best = av;
                }
            }
        if (pi < 0) break;
        if (pi != t) {
            for (int j = 0; j < n; ++j) std::swap(a(t, j), a(pi, j));
            tr.swap_rows(t, pi);
        }
        if (pj != t) {
            for (int i = 0; i < m; ++i) std::swap(a(i, t), a(i, pj));
            tr.swap_cols(t, pj);
        }

        for (;;) {
            // clear column t by division with remainder; rotate in a smaller
            // pivot whenever a remainder survives
            bool reduced = true;
            for (int i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0) {
                    for (int j = t; j < n; ++j) a(i, j) -= q * a(t, j);
                    tr.row_op(i, t, q);
                }
                if (a(i, t) != 0) {
                    for (int j = 0; j < n; ++j) std::swap(a(t, j), a(i, j));
                    tr.swap_rows(t, i);
                    reduced = false;
                    break;
                }
            }
            if (!reduced) continue;
            for (int j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0) {
                    for (int i = t; i < m; ++i) a(i, j) -= q * a(i, t);
                    tr.col_op(j, t, q);
                }
                if (a(t, j) != 0) {
                    for (int i = 0; i < m; ++i) std::swap(a(i, t), a(i, j));
                    tr.swap_cols(t, j);
                    reduced = false;
                    break;
                }
            }
            if (!reduced) continue;

            // pivot must divide every remaining entry
            bool divides = true;
            for (int i = t + 1; i < m && divides; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (int c = t; c < n; ++c) a(t, c) += a(i, c);
                        tr.row_op(t, i, Int(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }

        if (a(t, t) < 0) {
            for (int j = t; j < n; ++j) a(t, j) = -a(t, j);
            tr.negate_row(t);
        }
        ++t;
    }

    SmithForm out;
    for (int i = 0; i < t; ++i) out.diagonal.push_back(a(i, i));
    out.has_transforms = want_transforms;
    if (want_transforms) {
        out.U = std::move(tr.U);
        out.V = std::move(tr.V);
        out.Uinv = std::move(tr.Uinv);
        out.Vinv = std::move(tr.Vinv);
    }
    return out;
}

// ------------------------------------------------------------------
// Sparse unit-pivot reduction; the dense core takes whatever is left.
// ------------------------------------------------------------------

namespace {

struct SparseElim {
    std::vector<std::map<long long, long long>> row; // live rows
    std::vector<std::set<long long>> col_rows;       // col -> rows with nonzero
    long long units = 0;

    bool overflowed = false;

    static long long checked_mul(long long a, long long b, bool& ovf) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) ovf = true;
        return r;
    }
    static long long checked_sub(long long a, long long b, bool& ovf) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) ovf = true;
        return r;
    }

    void load(const TMat& m) {
        row.assign(size_t(m.rows), {});
        col_rows.assign(size_t(m.cols), {});
        TMat c = m;
        c.normalize();
        for (size_t t = 0; t < c.val.size(); ++t) {
            row[size_t(c.ri[t])][c.ci[t]] = c.val[t];
            col_rows[size_t(c.ci[t])].insert(c.ri[t]);
        }
    }

    // Repeatedly pivot out +-1 entries, preferring low-fill pivots.
    void run() {
        for (;;) {
            long long pr = -1, pc = -1;
            long long best_cost = -1;
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i].empty()) continue;
                for (const auto& [c, v] : row[i]) {
                    if (v != 1 && v != -1) continue;
                    long long cost =
                        (long long)(row[i].size() - 1) * (long long)(col_rows[size_t(c)].size() - 1);
                    if (best_cost < 0 || cost < best_cost) {
                        best_cost = cost;
                        pr = (long long)i;
                        pc = c;
                    }
                    if (best_cost == 0) break;
                }
                if (best_cost == 0) break;
            }
            if (pr < 0) return;
            pivot(pr, pc);
            if (overflowed) return;
            ++units;
        }
    }

    void pivot(long long pr, long long pc) {
        const long long s = row[size_t(pr)][pc]; // +-1
        auto prow = row[size_t(pr)];             // copy: pivot row
        // clear column pc with row operations, then delete row pr / col pc
        std::vector<long long> rows_in_col(col_rows[size_t(pc)].begin(), col_rows[size_t(pc)].end());
        for (long long i : rows_in_col) {
            if (i == pr) continue;
            auto it = row[size_t(i)].find(pc);
            if (it == row[size_t(i)].end()) continue;
            long long f = it->second * s; // row_i -= f * row_pr  (f = a_ic / s)
            for (const auto& [c, v] : prow) {
                long long delta = checked_mul(f, v, overflowed);
                auto jt = row[size_t(i)].find(c);
                long long nv = checked_sub(jt == row[size_t(i)].end() ? 0 : jt->second, delta,
                                           overflowed);
                if (overflowed) return;
                if (nv == 0) {
                    if (jt != row[size_t(i)].end()) {
                        row[size_t(i)].erase(jt);
                        col_rows[size_t(c)].erase(i);
                    }
                } else {
                    row[size_t(i)][c] = nv;
                    col_rows[size_t(c)].insert(i);
                }
            }
        }
        for (const auto& [c, v] : prow) col_rows[size_t(c)].erase(pr);
        row[size_t(pr)].clear();
        for (long long i : col_rows[size_t(pc)]) row[size_t(i)].erase(pc);
        col_rows[size_t(pc)].clear();
    }

    IMat core() const {
        std::vector<long long> live_rows, live_cols;
        std::set<long long> cols_used;
        for (size_t i = 0; i < row.size(); ++i)
            if (!row[i].empty()) {
                live_rows.push_back((long long)i);
                for (const auto& [c, v] : row[i]) cols_used.insert(c);
            }
        live_cols.assign(cols_used.begin(), cols_used.end());
        std::map<long long, int> cidx;
        for (size_t j = 0; j < live_cols.size(); ++j) cidx[live_cols[j]] = int(j);
        IMat m(int(live_rows.size()), int(live_cols.size()));
        for (size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : row[size_t(live_rows[i])]) m(int(i), cidx[c]) = v;
        return m;
    }
};

} // namespace

std::vector<Int> smith_diagonal(const TMat& m) {
    SparseElim e;
    e.load(m);
    e.run();
    std::vector<Int> diag;
    if (e.overflowed) {
        // rare: redo the whole thing densely in exact arithmetic
        diag = smith_normal_form(m.dense()).diagonal;
        return diag;
    }
    diag.assign(size_t(e.units), Int(1));
    IMat core = e.core();
    if (core.rows() > 0 && core.cols() > 0) {
        auto rest = smith_normal_form(std::move(core)).diagonal;
        diag.insert(diag.end(), rest.begin(), rest.end());
    }
    return diag;
}

long long sparse_rank(const TMat& m) { return (long long)smith_diagonal(m).size(); }

IMat kernel_basis(const IMat& m) {
    SmithForm s = smith_normal_form(m, true);
    const int n = m.cols(), r = s.rank();
    IMat k(n, n - r);
    for (int j = r; j < n; ++j)
        for (int i = 0; i < n; ++i) k(i, j - r) = s.V(i, j);
    return k;
}

LatticeSolver::LatticeSolver(IMat k) : k_(std::move(k)), snf_(smith_normal_form(k_, true)) {
    if (snf_.rank() != k_.cols()) throw TopologyError("lattice basis is not independent");
}

std::vector<Int> LatticeSolver::solve(const std::vector<Int>& b) const {
    if ((int)b.size() != k_.rows()) throw TopologyError("lattice solve: length mismatch");
    const int r = snf_.rank();
    std::vector<Int> ub(k_.rows());
    for (int i = 0; i < k_.rows(); ++i) {
        Int s = 0;
        for (int j = 0; j < k_.rows(); ++j)
            if (snf_.U(i, j) != 0 && b[j] != 0) s += snf_.U(i, j) * b[j];
        ub[i] = s;
    }
    std::vector<Int> z(k_.cols());
    for (int i = 0; i < k_.rows(); ++i) {
        if (i < r) {
            if (ub[i] % snf_.diagonal[i] != 0)
                throw TopologyError("vector not in lattice (divisibility)");
            z[i] = ub[i] / snf_.diagonal[i];
        } else if (ub[i] != 0) {
            throw TopologyError("vector not in lattice (span)");
        }
    }
    std::vector<Int> x(k_.cols());
    for (int i = 0; i < k_.cols(); ++i) {
        Int s = 0;
        for (int j = 0; j < k_.cols(); ++j)
            if (snf_.V(i, j) != 0 && z[j] != 0) s += snf_.V(i, j) * z[j];
        x[i] = s;
    }
    return x;
}

bool AbelianInvariants::operator<(const AbelianInvariants& o) const {
    auto a = gap_list(), b = o.gap_list();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Int> AbelianInvariants::gap_list() const {
    std::vector<Int> out(size_t(free_rank), Int(0));
    out.insert(out.end(), torsion.begin(), torsion.end());
    return out;
}

std::string AbelianInvariants::gap_str() const {
    std::ostringstream os;
    os << "[ ";
    auto l = gap_list();
    for (size_t i = 0; i < l.size(); ++i) os << l[i] << (i + 1 < l.size() ? ", " : " ");
    if (l.empty()) os << " ";
    os << "]";
    return os.str();
}

std::string AbelianInvariants::human_str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianInvariants cokernel_invariants(long long ambient_rank, const TMat& relations) {
    if (relations.rows != ambient_rank) throw TopologyError("cokernel: relation row mismatch");
    auto diag = smith_diagonal(relations);
    AbelianInvariants inv;
    inv.free_rank = ambient_rank - (long long)diag.size();
    for (const Int& d : diag)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

} // namespace cwhom
