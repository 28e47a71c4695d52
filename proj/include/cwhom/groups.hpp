#ifndef CWHOM_GROUPS_HPP
#define CWHOM_GROUPS_HPP

#include "cwhom/words.hpp"

namespace cwhom {

/// Permutation action of a finitely presented group on the right cosets of a
/// finite-index subgroup. Cosets are 0-based with the subgroup itself coset 0.
struct CosetTable {
    int index = 0;
    int generator_count = 0;
    std::vector<std::vector<cell_t>> action;     // action[g][c] = c . g
    std::vector<std::vector<cell_t>> action_inv; // action_inv[g][c] = c . g^-1
    std::vector<GroupWord> subgroup_generators;

    cell_t apply(cell_t c, const GroupWord& w) const;
    std::vector<cell_t> word_perm(const GroupWord& w) const;

    /// Word reaching each coset from coset 0 (breadth-first over generators).
    std::vector<GroupWord> coset_rep_words() const;

    /// Relators act trivially, the action is transitive, and the subgroup
    /// generators fix coset 0; throws TopologyError on violation.
    void validate(const FpPresentation& p) const;
};

/// HLT coset enumeration with a scan-only lookahead pass when the coset
/// bound is hit; throws Overflow when enumeration cannot complete.
CosetTable todd_coxeter(const FpPresentation& p, const std::vector<GroupWord>& subgroup_gens,
                        long long max_cosets = 1000000);

/// Conjugacy-class representatives of subgroups of index <= n, as canonical
/// coset tables in depth-first order.
std::vector<CosetTable> low_index_subgroups(const FpPresentation& p, int n);

/// Right-action permutation of a word on the cosets.
std::vector<cell_t> word_action(const CosetTable& t, const GroupWord& w);

} // namespace cwhom

#endif
