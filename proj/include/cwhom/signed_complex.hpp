#ifndef CWHOM_SIGNED_COMPLEX_HPP
#define CWHOM_SIGNED_COMPLEX_HPP

#include "cwhom/cell_complex.hpp"
#include "cwhom/chain_complex.hpp"

namespace cwhom {

/// Incidence signs of the cellular chain complex of a regular CW-complex.
/// signs[d] runs parallel to the complex's flattened (sorted) boundary rows.
struct SignedChainComplexZ {
    std::vector<long long> ranks;
    std::vector<std::vector<std::int8_t>> signs;

    /// Sign of face f inside the boundary of the k-th d-cell.
    int sign(const RegularCW& x, int d, cell_t k, cell_t f) const;

    /// Boundary matrix of degree d (ranks[d-1] x ranks[d]).
    TMat matrix(const RegularCW& x, int d) const;

    IntChainComplex chain_complex(const RegularCW& x) const;
};

/// Chooses incidence signs degree by degree so consecutive boundary matrices
/// compose to zero exactly.
SignedChainComplexZ signed_chain_complex(const RegularCW& x);

/// Integral homology in all degrees, straight from the cellular chain complex.
std::vector<AbelianInvariants> cw_homology(const RegularCW& x);

} // namespace cwhom

#endif
