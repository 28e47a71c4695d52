#ifndef CWHOM_WORDS_HPP
#define CWHOM_WORDS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cwhom/cell_complex.hpp"

namespace cwhom {

/// Freely reduced word: nonzero signed 1-based generator indices.
using GroupWord = std::vector<std::int32_t>;

GroupWord free_reduce(GroupWord w);
GroupWord word_inverse(const GroupWord& w);
GroupWord word_concat(const GroupWord& a, const GroupWord& b);

/// Finite presentation of a group, with cell provenance when it came from a
/// discrete vector field (generator i <-> critical 1-cell, relator j <->
/// critical 2-cell; 0-based cell indices).
struct FpPresentation {
    int generator_count = 0;
    std::vector<GroupWord> relators;
    std::vector<cell_t> generator_cells;
    std::vector<cell_t> relator_cells;
};

/// Intern table for freely reduced words; id 0 is the identity.
class WordTable {
public:
    WordTable() { intern({}); }

    std::int32_t intern(GroupWord w);
    const GroupWord& word(std::int32_t id) const { return words_[size_t(id)]; }
    std::int32_t compose(std::int32_t a, std::int32_t b);
    std::int32_t inverse(std::int32_t a);
    std::int32_t single(std::int32_t signed_gen) { return intern({signed_gen}); }
    size_t count() const { return words_.size(); }

private:
    struct Hash {
        size_t operator()(const GroupWord& w) const {
            size_t h = 1469598103934665603ull;
            for (std::int32_t v : w) {
                h ^= size_t(std::uint32_t(v));
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::vector<GroupWord> words_;
    std::unordered_map<GroupWord, std::int32_t, Hash> index_;
};

/// Result of bounded Tietze simplification. images[g] rewrites original
/// generator g+1 as a word in the reduced presentation's generators.
struct TietzeReduced {
    FpPresentation pres;
    std::vector<GroupWord> images;
};

/// Eliminates generators that occur exactly once in some relator, preferring
/// short relators, while total relator length stays within a growth cap.
/// Cell provenance is dropped on the reduced presentation.
TietzeReduced tietze_reduce(const FpPresentation& p);

} // namespace cwhom

#endif
