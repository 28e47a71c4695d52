#ifndef CWHOM_FUNDAMENTAL_GROUP_HPP
#define CWHOM_FUNDAMENTAL_GROUP_HPP

#include "cwhom/dvf.hpp"
#include "cwhom/words.hpp"

namespace cwhom {

/// A maximal tree in the 1-skeleton plus the word assigned to each oriented
/// edge. Edges are oriented from their smaller to their larger boundary
/// vertex; words[e] is the word spelled by the positive traversal, trivial
/// on tree edges.
struct OmegaMap {
    std::vector<char> tree;               // per 1-cell
    std::vector<GroupWord> words;         // per 1-cell
    int generator_count = 0;
    std::vector<cell_t> generator_edges;  // edge realizing each generator
};

/// Breadth-first spanning tree from vertex 1; every non-tree edge becomes its
/// own generator. Throws NotConnected.
OmegaMap maximal_tree(const RegularCW& x);

/// Omega map determined by an admissible vector field with a unique critical
/// 0-cell: the targets of the vertex arrows form the tree, critical edges
/// are the generators, and edges paired with 2-cells deform across them.
OmegaMap omega_from_dvf(const RegularCW& x, const DiscreteVectorField& v);

/// Oriented boundary circuit of a 2-cell: (edge, +-1) pairs, +1 meaning the
/// edge is traversed from its smaller to its larger vertex.
std::vector<std::pair<cell_t, int>> boundary_circuit(const RegularCW& x, cell_t two_cell);

/// Word of a closed oriented edge path (entries +-(edge index + 1), 0-based
/// edges in, 1-based letters out). Throws NotClosed.
GroupWord deform_circuit(const RegularCW& x, const OmegaMap& omega,
                         const std::vector<std::int32_t>& circuit);

/// One generator per critical 1-cell, one relator per critical 2-cell.
FpPresentation pi1_presentation(const RegularCW& x, const DiscreteVectorField& v);
FpPresentation pi1_presentation(const RegularCW& x);

} // namespace cwhom

#endif
