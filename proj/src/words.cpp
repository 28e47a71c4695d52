#include "cwhom/words.hpp"

#include <algorithm>
#include <numeric>

namespace cwhom {

GroupWord free_reduce(GroupWord w) {
    GroupWord out;
    out.reserve(w.size());
    for (std::int32_t a : w) {
        if (a == 0) throw TopologyError("zero letter in word");
        if (!out.empty() && out.back() == -a)
            out.pop_back();
        else
            out.push_back(a);
    }
    return out;
}

GroupWord word_inverse(const GroupWord& w) {
    GroupWord out(w.rbegin(), w.rend());
    for (std::int32_t& a : out) a = -a;
    return out;
}

GroupWord word_concat(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(std::move(out));
}

std::int32_t WordTable::intern(GroupWord w) {
    w = free_reduce(std::move(w));
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    std::int32_t id = std::int32_t(words_.size());
    index_.emplace(w, id);
    words_.push_back(std::move(w));
    return id;
}

std::int32_t WordTable::compose(std::int32_t a, std::int32_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return intern(word_concat(words_[size_t(a)], words_[size_t(b)]));
}

std::int32_t WordTable::inverse(std::int32_t a) {
    if (a == 0) return 0;
    return intern(word_inverse(words_[size_t(a)]));
}

namespace {

GroupWord cyclic_reduce(GroupWord w) {
    w = free_reduce(std::move(w));
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(std::move(w));
    }
    return w;
}

// substitute generator x (positive index) by word sub in w
GroupWord substitute(const GroupWord& w, std::int32_t x, const GroupWord& sub) {
    GroupWord out;
    GroupWord sub_inv = word_inverse(sub);
    for (std::int32_t a : w) {
        if (a == x)
            out.insert(out.end(), sub.begin(), sub.end());
        else if (a == -x)
            out.insert(out.end(), sub_inv.begin(), sub_inv.end());
        else
            out.push_back(a);
    }
    return free_reduce(std::move(out));
}

// drop generator x from the numbering: indices above shift down
GroupWord renumber_down(const GroupWord& w, std::int32_t x) {
    GroupWord out = w;
    for (std::int32_t& a : out) {
        if (std::abs(a) > x) a = a > 0 ? a - 1 : a + 1;
    }
    return out;
}

} // namespace

TietzeReduced tietze_reduce(const FpPresentation& p) {
    TietzeReduced out;
    out.pres.generator_count = p.generator_count;
    for (const auto& r : p.relators) {
        GroupWord w = cyclic_reduce(r);
        if (!w.empty()) out.pres.relators.push_back(std::move(w));
    }
    out.images.resize(size_t(p.generator_count));
    for (int g = 0; g < p.generator_count; ++g) out.images[size_t(g)] = {g + 1};

    size_t initial_len = 0;
    for (const auto& r : out.pres.relators) initial_len += r.size();
    const size_t cap = 4 * initial_len + 400;

    bool progress = true;
    while (progress) {
        progress = false;
        auto& rel = out.pres.relators;
        std::vector<size_t> order(rel.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return rel[a].size() < rel[b].size(); });

        for (size_t oi = 0; oi < order.size() && !progress; ++oi) {
            const GroupWord& r = rel[order[oi]];
            for (size_t pos = 0; pos < r.size(); ++pos) {
                std::int32_t x = std::abs(r[pos]);
                int occ = 0;
                for (std::int32_t a : r) occ += std::abs(a) == x;
                if (occ != 1) continue;

                // rotate so the x-letter leads, then x^eps = tail^-1
                GroupWord rot(r.begin() + long(pos), r.end());
                rot.insert(rot.end(), r.begin(), r.begin() + long(pos));
                GroupWord tail(rot.begin() + 1, rot.end());
                GroupWord sub = rot[0] > 0 ? word_inverse(tail) : free_reduce(std::move(tail));

                size_t projected = 0;
                for (size_t j = 0; j < rel.size(); ++j) {
                    if (j == order[oi]) continue;
                    size_t extra = 0;
                    for (std::int32_t a : rel[j]) extra += std::abs(a) == x ? sub.size() : 1;
                    projected += extra;
                }
                if (projected > cap) continue;

                std::vector<GroupWord> next;
                for (size_t j = 0; j < rel.size(); ++j) {
                    if (j == order[oi]) continue;
                    GroupWord w = cyclic_reduce(substitute(rel[j], x, sub));
                    if (!w.empty()) next.push_back(renumber_down(w, x));
                }
                for (auto& img : out.images)
                    img = renumber_down(substitute(img, x, sub), x);
                rel = std::move(next);
                --out.pres.generator_count;
                progress = true;
                break;
            }
        }
    }

    std::sort(out.pres.relators.begin(), out.pres.relators.end());
    out.pres.relators.erase(std::unique(out.pres.relators.begin(), out.pres.relators.end()),
                            out.pres.relators.end());
    return out;
}

} // namespace cwhom
