#ifndef CWHOM_DVF_HPP
#define CWHOM_DVF_HPP

#include <optional>

#include "cwhom/cell_complex.hpp"
#include "cwhom/chain_complex.hpp"
#include "cwhom/signed_complex.hpp"

namespace cwhom {

/// Arrow pairing on a regular CW-complex. vector_field[n][k] is the n-cell
/// paired with the k-th (n-1)-cell (or -1); inverse_vector_field is its
/// exact inverse.
struct DiscreteVectorField {
    std::vector<std::vector<cell_t>> vector_field;         // index 1..dim
    std::vector<std::vector<cell_t>> inverse_vector_field; // index 1..dim

    /// Target of the arrow whose source is the k-th d-cell, or -1.
    cell_t arrow_target(int d, cell_t k) const {
        if (d + 1 >= (int)vector_field.size()) return -1;
        return vector_field[size_t(d) + 1][size_t(k)];
    }
    /// Source of the arrow whose target is the k-th d-cell, or -1.
    cell_t arrow_source(int d, cell_t k) const {
        if (d < 1 || d >= (int)inverse_vector_field.size()) return -1;
        return inverse_vector_field[size_t(d)][size_t(k)];
    }
    bool involved(int d, cell_t k) const {
        return arrow_target(d, k) >= 0 || arrow_source(d, k) >= 0;
    }
};

struct CriticalCells {
    std::vector<std::vector<cell_t>> cells; // per dimension, sorted

    long long count(int d) const {
        return (d >= 0 && d < (int)cells.size()) ? (long long)cells[size_t(d)].size() : 0;
    }
    long long total() const;
};

/// Maximal admissible field built by coreduction pairing. The cell order is
/// dimension-graded then by index, optionally refined by per-dimension
/// priorities; a path-connected complex gets exactly one critical 0-cell.
DiscreteVectorField build_maximal_dvf(const RegularCW& x,
                                      const std::vector<std::vector<int>>* priority = nullptr);

/// True when the arrow-chain digraph has no circuit (and the pairing data is
/// structurally a vector field).
bool is_admissible(const RegularCW& x, const DiscreteVectorField& v);

CriticalCells critical_cells(const RegularCW& x, const DiscreteVectorField& v);

/// Contracted integer chain complex on the critical cells; boundary entries
/// count signed gradient paths.
IntChainComplex morse_chain_complex(const RegularCW& x, const DiscreteVectorField& v);

// ------------------------------------------------------------------
// Gradient flow, generic over the coefficient group.
//
// Ring requirements:
//   using Elt;                 // value type, equality-comparable
//   Elt one();
//   Elt mul(Elt, Elt);
//   Elt inv_mul(Elt a, Elt b); // a^-1 * b
// A term (c, cell, g) stands for c * (g * lifted cell).
// ------------------------------------------------------------------

template <class Ring> struct FlowTerm {
    long long coeff;
    cell_t cell;
    typename Ring::Elt g;
};

/// Pushes chains down the vector field onto critical cells. The boundary
/// provider maps (d, k) to the lifted boundary terms of the k-th d-cell.
template <class Ring, class BoundaryFn> class MorseFlow {
public:
    MorseFlow(const RegularCW& x, const DiscreteVectorField& v, Ring ring, BoundaryFn bnd)
        : x_(x), v_(v), ring_(ring), bnd_(bnd), memo_(size_t(x.dimension()) + 1) {
        for (int d = 0; d <= x.dimension(); ++d)
            memo_[size_t(d)].assign(size_t(x.ncells(d)), std::nullopt);
    }

    using Terms = std::vector<FlowTerm<Ring>>;

    /// Flow of the (plain) k-th d-cell onto critical d-cells.
    const Terms& flow(int d, cell_t k) {
        ensure(d, k);
        return *memo_[size_t(d)][size_t(k)];
    }

private:
    const RegularCW& x_;
    const DiscreteVectorField& v_;
    Ring ring_;
    BoundaryFn bnd_;
    std::vector<std::vector<std::optional<Terms>>> memo_;

    static void add_term(Terms& acc, long long c, cell_t cell, typename Ring::Elt g) {
        for (auto& t : acc)
            if (t.cell == cell && t.g == g) {
                t.coeff += c;
                return;
            }
        acc.push_back({c, cell, g});
    }

    void ensure(int d, cell_t start) {
        if (memo_[size_t(d)][size_t(start)]) return;
        // iterative DFS over the intra-dimension dependency DAG
        std::vector<cell_t> stack{start};
        std::vector<char> active(size_t(x_.ncells(d)), 0);
        while (!stack.empty()) {
            cell_t k = stack.back();
            if (memo_[size_t(d)][size_t(k)]) {
                stack.pop_back();
                continue;
            }
            if (v_.arrow_source(d, k) >= 0) { // target of an arrow: dies
                memo_[size_t(d)][size_t(k)] = Terms{};
                stack.pop_back();
                continue;
            }
            cell_t t = v_.arrow_target(d, k);
            if (t < 0) { // critical
                memo_[size_t(d)][size_t(k)] = Terms{{1, k, ring_.one()}};
                stack.pop_back();
                continue;
            }
            bool ready = true;
            for (const auto& term : bnd_(d + 1, t)) {
                if (term.cell == k) continue;
                if (!memo_[size_t(d)][size_t(term.cell)]) {
                    if (active[size_t(term.cell)])
                        throw TopologyError("discrete vector field has a circuit");
                    active[size_t(term.cell)] = 1;
                    stack.push_back(term.cell);
                    ready = false;
                }
            }
            if (!ready) continue;

            // slide across the arrow k -> t
            long long eta_k = 0;
            typename Ring::Elt w_k = ring_.one();
            for (const auto& term : bnd_(d + 1, t))
                if (term.cell == k) {
                    eta_k = term.coeff;
                    w_k = term.g;
                    break;
                }
            if (eta_k != 1 && eta_k != -1)
                throw TopologyError("arrow source is not a face of its target");
            Terms acc;
            for (const auto& term : bnd_(d + 1, t)) {
                if (term.cell == k) continue;
                auto u = ring_.inv_mul(w_k, term.g); // w_k^-1 * w_m
                for (const auto& ft : *memo_[size_t(d)][size_t(term.cell)])
                    add_term(acc, -eta_k * term.coeff * ft.coeff, ft.cell, ring_.mul(u, ft.g));
            }
            acc.erase(std::remove_if(acc.begin(), acc.end(),
                                     [](const FlowTerm<Ring>& t2) { return t2.coeff == 0; }),
                      acc.end());
            memo_[size_t(d)][size_t(k)] = std::move(acc);
            active[size_t(k)] = 0;
            stack.pop_back();
        }
    }
};

struct TrivialRing {
    using Elt = unsigned char;
    Elt one() const { return 0; }
    Elt mul(Elt, Elt) const { return 0; }
    Elt inv_mul(Elt, Elt) const { return 0; }
};

} // namespace cwhom

#endif
