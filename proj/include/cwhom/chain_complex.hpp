#ifndef CWHOM_CHAIN_COMPLEX_HPP
#define CWHOM_CHAIN_COMPLEX_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cwhom/smith.hpp"

namespace cwhom {

/// Chain (or cochain) complex of finitely generated abelian groups over Z.
///
/// Degrees run 0..length. For a chain complex boundary(k) maps degree k to
/// k-1 (defined for k >= 1); for a cochain complex boundary(k) maps degree k
/// to k+1 (defined for k < length). A degree may additionally carry a
/// relation matrix presenting the group as a quotient of Z^rank; relations
/// come with lifts ("relation_map") expressing boundary-of-relations in terms
/// of relations one degree over, so homology can be taken through a mapping
/// cone of free groups.
struct IntChainComplex {
    bool cochain = false;
    std::vector<long long> ranks;
    std::vector<TMat> boundaries;    // boundaries[k] as described above
    std::vector<TMat> relations;     // relations[k]: ranks[k] x s_k, may be empty
    std::vector<TMat> relation_maps; // lambda[k]: covers boundary on relations[k]
    std::vector<std::pair<std::string, std::string>> properties;

    int length() const { return int(ranks.size()) - 1; }
    long long dimension(int k) const {
        return (k >= 0 && k < (int)ranks.size()) ? ranks[size_t(k)] : 0;
    }
    bool has_relations() const;
    const TMat& boundary(int k) const { return boundaries[size_t(k)]; }

    /// Exactness check d(d(x)) = 0 at every degree (through the cone when
    /// relations are present).
    void verify_dd_zero() const;
};

/// H_n for chain complexes, H^n for cochain complexes. Throws NotAComplex
/// when consecutive boundaries fail to compose to zero.
AbelianInvariants homology(const IntChainComplex& c, int n);

std::vector<AbelianInvariants> homology_all(const IntChainComplex& c);

/// Homology of a free complex at degree n together with explicit generators,
/// usable for computing induced maps and group actions on homology.
class HomologyPresentation {
public:
    HomologyPresentation(const IntChainComplex& c, int n);

    const AbelianInvariants& invariants() const { return inv_; }
    int num_gens() const { return int(surviving_.size()); }

    /// Chain representing generator i (length = rank of the complex in degree n).
    std::vector<Int> generator_chain(int i) const;

    /// Coordinates of a degree-n cycle in the generators, torsion coordinates
    /// reduced into [0, d). Throws when the vector is not a cycle.
    std::vector<Int> cycle_coords(const std::vector<Int>& cycle) const;

    /// The torsion modulus of generator i (0 for free generators).
    const Int& gen_modulus(int i) const { return moduli_[size_t(i)]; }

private:
    int n_;
    long long rank_;
    IMat kernel_;                          // rank_ x k
    std::unique_ptr<LatticeSolver> solver_;
    SmithForm rel_snf_;                    // of relations in kernel coordinates
    std::vector<int> surviving_;           // generator rows (d != 1) in U-coords
    std::vector<Int> moduli_;
    AbelianInvariants inv_;
};

/// Matrix of a chain map on homology plus its end groups.
struct InducedMap {
    AbelianInvariants source, target;
    IMat matrix; // target gens x source gens, torsion rows reduced mod d
    std::vector<Int> target_moduli;
};

/// f[k] is the degree-k matrix of the chain map (target rank x source rank).
/// Commutation with the boundaries is checked in degrees n and n+1.
InducedMap induced_map(const IntChainComplex& src, const IntChainComplex& tgt,
                       const std::vector<TMat>& f, int n);

AbelianInvariants cokernel(const InducedMap& m);

} // namespace cwhom

#endif
