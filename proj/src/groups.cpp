#include "cwhom/groups.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace cwhom {

cell_t CosetTable::apply(cell_t c, const GroupWord& w) const {
    for (std::int32_t a : w)
        c = a > 0 ? action[size_t(a) - 1][size_t(c)] : action_inv[size_t(-a) - 1][size_t(c)];
    return c;
}

std::vector<cell_t> CosetTable::word_perm(const GroupWord& w) const {
    std::vector<cell_t> p(static_cast<size_t>(index));
    for (cell_t c = 0; c < index; ++c) p[size_t(c)] = apply(c, w);
    return p;
}

std::vector<GroupWord> CosetTable::coset_rep_words() const {
    std::vector<GroupWord> rep(static_cast<size_t>(index));
    std::vector<char> seen(size_t(index), 0);
    std::queue<cell_t> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        cell_t c = q.front();
        q.pop();
        for (int g = 0; g < generator_count; ++g) {
            for (int s : {+1, -1}) {
                cell_t d = s > 0 ? action[size_t(g)][size_t(c)] : action_inv[size_t(g)][size_t(c)];
                if (!seen[size_t(d)]) {
                    seen[size_t(d)] = 1;
                    rep[size_t(d)] = word_concat(rep[size_t(c)], {s * (g + 1)});
                    q.push(d);
                }
            }
        }
    }
    return rep;
}

void CosetTable::validate(const FpPresentation& p) const {
    if (p.generator_count != generator_count)
        throw PresentationMismatch("coset table generator count");
    for (const GroupWord& r : p.relators)
        for (cell_t c = 0; c < index; ++c)
            if (apply(c, r) != c) throw TopologyError("relator acts nontrivially on cosets");
    for (const GroupWord& g : subgroup_generators)
        if (apply(0, g) != 0) throw TopologyError("subgroup generator moves coset 0");
    std::vector<char> seen(size_t(index), 0);
    std::queue<cell_t> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        cell_t c = q.front();
        q.pop();
        for (int g = 0; g < generator_count; ++g)
            for (cell_t d : {action[size_t(g)][size_t(c)], action_inv[size_t(g)][size_t(c)]})
                if (!seen[size_t(d)]) {
                    seen[size_t(d)] = 1;
                    ++reached;
                    q.push(d);
                }
    }
    if (reached != index) throw TopologyError("coset action is not transitive");
}

std::vector<cell_t> word_action(const CosetTable& t, const GroupWord& w) {
    return t.word_perm(w);
}

// ------------------------------------------------------------------
// HLT enumeration on a (Tietze-reduced) presentation.
// ------------------------------------------------------------------

namespace {

std::vector<int> word_cols(const GroupWord& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (std::int32_t a : w) out.push_back(a > 0 ? 2 * (a - 1) : 2 * (-a - 1) + 1);
    return out;
}

struct HLT {
    int ng;
    long long bound;
    std::vector<std::vector<std::int32_t>> tab; // tab[c][col], -1 undefined
    std::vector<std::int32_t> uf;
    std::deque<std::pair<std::int32_t, std::int32_t>> pending;
    std::vector<std::vector<int>> relator_cols;

    HLT(int ngens, long long b) : ng(ngens), bound(b) { add_row(); }

    static int inv(int col) { return col ^ 1; }

    std::int32_t rep(std::int32_t a) {
        while (uf[size_t(a)] != a) a = uf[size_t(a)] = uf[size_t(uf[size_t(a)])];
        return a;
    }
    bool live(std::int32_t a) { return rep(a) == a; }

    std::int32_t add_row() {
        tab.emplace_back(size_t(2 * ng), -1);
        uf.push_back(std::int32_t(tab.size()) - 1);
        return std::int32_t(tab.size()) - 1;
    }

    long long live_count() {
        long long n = 0;
        for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c) n += live(c);
        return n;
    }

    void set(std::int32_t a, int col, std::int32_t b) {
        tab[size_t(a)][size_t(col)] = b;
        std::int32_t& back = tab[size_t(b)][size_t(inv(col))];
        if (back == -1)
            back = a;
        else if (rep(back) != rep(a))
            coincide(back, a);
    }

    void coincide(std::int32_t a, std::int32_t b) {
        pending.push_back({a, b});
        while (!pending.empty()) {
            auto [x, y] = pending.front();
            pending.pop_front();
            x = rep(x);
            y = rep(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            uf[size_t(y)] = x;
            for (int col = 0; col < 2 * ng; ++col) {
                std::int32_t d = tab[size_t(y)][size_t(col)];
                if (d == -1) continue;
                tab[size_t(y)][size_t(col)] = -1;
                d = rep(d);
                std::int32_t& slot = tab[size_t(x)][size_t(col)];
                if (slot == -1) {
                    slot = d;
                    std::int32_t& back = tab[size_t(d)][size_t(inv(col))];
                    if (back == -1)
                        back = x;
                    else if (rep(back) != x)
                        pending.push_back({back, x});
                } else if (rep(slot) != d) {
                    pending.push_back({slot, d});
                }
            }
        }
    }

    bool compacted = false; // signals that coset numbers changed

    // scan word at coset a; fill gaps with new cosets when filling is allowed
    void scan(std::int32_t a, const std::vector<int>& cols, bool fill) {
    restart:
        a = rep(a);
        std::int32_t f = a, b = a;
        size_t i = 0, j = cols.size();
        for (;;) {
            while (i < j && tab[size_t(f)][size_t(cols[i])] != -1) {
                f = rep(tab[size_t(f)][size_t(cols[i])]);
                ++i;
            }
            if (i == j) {
                if (f != b) coincide(f, b);
                return;
            }
            while (j > i && tab[size_t(b)][size_t(inv(cols[j - 1]))] != -1) {
                b = rep(tab[size_t(b)][size_t(inv(cols[j - 1]))]);
                --j;
            }
            if (i == j) {
                if (f != b) coincide(f, b);
                return;
            }
            if (i + 1 == j) { // deduction closes the gap
                set(f, cols[i], b);
                return;
            }
            if (!fill) return;
            std::int32_t n = make_coset();
            if (compacted) return; // caller rescans everything
            set(f, cols[i], n);
            // coincidences may have collapsed any of the involved cosets
            if (rep(a) != a || rep(f) != f || rep(n) != n) goto restart;
            f = n;
            ++i;
        }
    }

    int compactions = 0;

    std::int32_t make_coset() {
        if ((long long)tab.size() >= bound) {
            if (++compactions > 50) throw Overflow(bound);
            lookahead();
            compact();
            compacted = true;
            if ((long long)tab.size() >= bound) throw Overflow(bound);
            return -1;
        }
        return add_row();
    }

    void lookahead() {
        for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c) {
            if (!live(c)) continue;
            for (const auto& cols : relator_cols) {
                scan(c, cols, false);
                if (!live(c)) break;
            }
        }
    }

    void compact() {
        std::vector<std::int32_t> remap(tab.size(), -1);
        std::int32_t next = 0;
        for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c)
            if (live(c)) remap[size_t(c)] = next++;
        std::vector<std::vector<std::int32_t>> nt(static_cast<size_t>(next));
        for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c) {
            if (!live(c)) continue;
            auto& row = nt[size_t(remap[size_t(c)])];
            row.assign(size_t(2 * ng), -1);
            for (int col = 0; col < 2 * ng; ++col) {
                std::int32_t d = tab[size_t(c)][size_t(col)];
                if (d != -1) row[size_t(col)] = remap[size_t(rep(d))];
            }
        }
        tab = std::move(nt);
        uf.resize(tab.size());
        for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c) uf[size_t(c)] = c;
    }

    void run(const std::vector<GroupWord>& relators, const std::vector<GroupWord>& sub_gens) {
        relator_cols.clear();
        for (const auto& r : relators)
            if (!r.empty()) relator_cols.push_back(word_cols(r));
    restart:
        compacted = false;
        for (const auto& g : sub_gens)
            if (!g.empty()) {
                scan(0, word_cols(g), true);
                if (compacted) goto restart;
            }
        for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c) {
            if (!live(c)) continue;
            for (const auto& cols : relator_cols) {
                scan(c, cols, true);
                if (compacted) goto restart;
                if (!live(c)) break;
            }
            if (!live(c)) continue;
            for (int col = 0; col < 2 * ng; ++col)
                if (live(c) && tab[size_t(c)][size_t(col)] == -1) {
                    std::int32_t n = make_coset();
                    if (compacted) goto restart;
                    set(c, col, n);
                }
        }
        compact();
        for (const auto& row : tab)
            for (std::int32_t v : row)
                if (v == -1) throw TopologyError("coset enumeration left undefined entries");
    }
};

// deterministic breadth-first renumbering of a complete table
std::vector<std::vector<std::int32_t>> standardize(std::vector<std::vector<std::int32_t>> tab,
                                                   int ng) {
    const std::int32_t n = std::int32_t(tab.size());
    std::vector<std::int32_t> old2new(size_t(n), -1), new2old;
    old2new[0] = 0;
    new2old.push_back(0);
    for (std::int32_t i = 0; i < n; ++i) {
        std::int32_t c = new2old[size_t(i)];
        for (int col = 0; col < 2 * ng; ++col) {
            std::int32_t d = tab[size_t(c)][size_t(col)];
            if (old2new[size_t(d)] == -1) {
                old2new[size_t(d)] = std::int32_t(new2old.size());
                new2old.push_back(d);
            }
        }
    }
    std::vector<std::vector<std::int32_t>> out(size_t(n),
                                               std::vector<std::int32_t>(size_t(2 * ng)));
    for (std::int32_t c = 0; c < n; ++c)
        for (int col = 0; col < 2 * ng; ++col)
            out[size_t(old2new[size_t(c)])][size_t(col)] = old2new[size_t(tab[size_t(c)][size_t(col)])];
    return out;
}

// table over reduced generators -> table over the original presentation
CosetTable translate_table(const FpPresentation& original, const TietzeReduced& tr,
                           const std::vector<std::vector<std::int32_t>>& tab,
                           std::vector<GroupWord> subgroup_gens) {
    const std::int32_t n = std::int32_t(tab.size());
    CosetTable out;
    out.index = n;
    out.generator_count = original.generator_count;
    out.subgroup_generators = std::move(subgroup_gens);

    // action of reduced generators
    const int ngr = tr.pres.generator_count;
    std::vector<std::vector<cell_t>> red(static_cast<size_t>(ngr)), red_inv(static_cast<size_t>(ngr));
    for (int g = 0; g < ngr; ++g) {
        red[size_t(g)].resize(size_t(n));
        red_inv[size_t(g)].resize(size_t(n));
        for (std::int32_t c = 0; c < n; ++c) {
            red[size_t(g)][size_t(c)] = tab[size_t(c)][size_t(2 * g)];
            red_inv[size_t(g)][size_t(c)] = tab[size_t(c)][size_t(2 * g + 1)];
        }
    }
    auto apply_red = [&](cell_t c, const GroupWord& w) {
        for (std::int32_t a : w)
            c = a > 0 ? red[size_t(a) - 1][size_t(c)] : red_inv[size_t(-a) - 1][size_t(c)];
        return c;
    };
    out.action.resize(size_t(original.generator_count));
    out.action_inv.resize(size_t(original.generator_count));
    for (int g = 0; g < original.generator_count; ++g) {
        out.action[size_t(g)].resize(size_t(n));
        out.action_inv[size_t(g)].resize(size_t(n));
        const GroupWord& img = tr.images[size_t(g)];
        GroupWord img_inv = word_inverse(img);
        for (std::int32_t c = 0; c < n; ++c) {
            out.action[size_t(g)][size_t(c)] = apply_red(c, img);
            out.action_inv[size_t(g)][size_t(c)] = apply_red(c, img_inv);
        }
    }
    out.validate(original);
    return out;
}

} // namespace

CosetTable todd_coxeter(const FpPresentation& p, const std::vector<GroupWord>& subgroup_gens,
                        long long max_cosets) {
    TietzeReduced tr = tietze_reduce(p);
    std::vector<GroupWord> gens_red;
    for (const GroupWord& g : subgroup_gens) {
        GroupWord w;
        for (std::int32_t a : g) {
            const GroupWord& img = tr.images[size_t(std::abs(a)) - 1];
            GroupWord part = a > 0 ? img : word_inverse(img);
            w.insert(w.end(), part.begin(), part.end());
        }
        gens_red.push_back(free_reduce(std::move(w)));
    }
    HLT h(std::max(tr.pres.generator_count, 1), max_cosets);
    h.run(tr.pres.relators, gens_red);
    auto tab = standardize(std::move(h.tab), std::max(tr.pres.generator_count, 1));
    if (tr.pres.generator_count == 0) {
        // free-trivial presentation: a single coset
        CosetTable out;
        out.index = 1;
        out.generator_count = p.generator_count;
        out.action.assign(size_t(p.generator_count), {0});
        out.action_inv.assign(size_t(p.generator_count), {0});
        out.subgroup_generators = subgroup_gens;
        out.validate(p);
        return out;
    }
    return translate_table(p, tr, tab, subgroup_gens);
}

// ------------------------------------------------------------------
// Low-index subgroups: canonical backtracking over coset tables.
// ------------------------------------------------------------------

namespace {

struct LowIndex {
    int ng;
    int max_cosets;
    std::vector<std::vector<int>> relcols;
    std::vector<std::vector<std::int32_t>> tab;
    std::vector<std::vector<std::vector<std::int32_t>>> results;

    static int inv(int col) { return col ^ 1; }

    struct Undo {
        size_t assignments;
        size_t rows;
    };
    std::vector<std::pair<std::int32_t, int>> log; // (coset, col) of each assignment

    void assign(std::int32_t a, int col, std::int32_t b) {
        tab[size_t(a)][size_t(col)] = b;
        log.push_back({a, col});
        tab[size_t(b)][size_t(inv(col))] = a;
        log.push_back({b, inv(col)});
    }

    void rewind(const Undo& u) {
        while (log.size() > u.assignments) {
            auto [c, col] = log.back();
            log.pop_back();
            tab[size_t(c)][size_t(col)] = -1;
        }
        tab.resize(u.rows);
    }

    // returns false on contradiction; true when a deduction fixpoint held
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::int32_t c = 0; c < (std::int32_t)tab.size(); ++c)
                for (const auto& cols : relcols) {
                    std::int32_t f = c;
                    size_t i = 0, j = cols.size();
                    while (i < j && tab[size_t(f)][size_t(cols[i])] != -1)
                        f = tab[size_t(f)][size_t(cols[i++])];
                    std::int32_t b = c;
                    while (j > i && tab[size_t(b)][size_t(inv(cols[j - 1]))] != -1)
                        b = tab[size_t(b)][size_t(inv(cols[j - 1]))], --j;
                    if (i == j) {
                        if (f != b) return false;
                    } else if (i + 1 == j) {
                        std::int32_t slot = tab[size_t(f)][size_t(cols[i])];
                        std::int32_t back = tab[size_t(b)][size_t(inv(cols[i]))];
                        if (slot != -1 || back != -1) return false; // would clash
                        assign(f, cols[i], b);
                        changed = true;
                    }
                }
        }
        return true;
    }

    // reject tables that renumber strictly smaller from another base coset
    bool canonical() const {
        const std::int32_t n = std::int32_t(tab.size());
        for (std::int32_t base = 1; base < n; ++base) {
            std::vector<std::int32_t> old2new(size_t(n), -1), new2old;
            old2new[size_t(base)] = 0;
            new2old.push_back(base);
            int cmp = 0; // -1: renumbered smaller, +1: larger
            for (std::int32_t i = 0; i < n && cmp == 0; ++i) {
                std::int32_t c = new2old[size_t(i)];
                for (int col = 0; col < 2 * ng; ++col) {
                    std::int32_t d = tab[size_t(c)][size_t(col)];
                    if (old2new[size_t(d)] == -1) {
                        old2new[size_t(d)] = std::int32_t(new2old.size());
                        new2old.push_back(d);
                    }
                    std::int32_t mine = old2new[size_t(d)];
                    std::int32_t ref = tab[size_t(i)][size_t(col)];
                    if (mine != ref) {
                        cmp = mine < ref ? -1 : 1;
                        break;
                    }
                }
            }
            if (cmp < 0) return false;
        }
        return true;
    }

    void search() {
        // first undefined slot in row-major order
        std::int32_t a = -1;
        int col = -1;
        for (std::int32_t c = 0; c < (std::int32_t)tab.size() && a < 0; ++c)
            for (int x = 0; x < 2 * ng; ++x)
                if (tab[size_t(c)][size_t(x)] == -1) {
                    a = c;
                    col = x;
                    break;
                }
        if (a < 0) {
            if (canonical()) results.push_back(tab);
            return;
        }
        std::vector<std::int32_t> candidates;
        for (std::int32_t b = 0; b < (std::int32_t)tab.size(); ++b)
            if (tab[size_t(b)][size_t(inv(col))] == -1) candidates.push_back(b);
        bool can_extend = (int)tab.size() < max_cosets;
        for (size_t pick = 0; pick <= candidates.size(); ++pick) {
            bool fresh = pick == candidates.size();
            if (fresh && !can_extend) break;
            Undo u{log.size(), tab.size()};
            std::int32_t b;
            if (fresh) {
                b = std::int32_t(tab.size());
                tab.emplace_back(size_t(2 * ng), -1);
            } else {
                b = candidates[pick];
            }
            assign(a, col, b);
            if (propagate()) search();
            rewind(u);
        }
    }
};

} // namespace

std::vector<CosetTable> low_index_subgroups(const FpPresentation& p, int n) {
    if (n < 1) throw TopologyError("index bound must be at least 1");
    TietzeReduced tr = tietze_reduce(p);

    std::vector<CosetTable> out;
    if (tr.pres.generator_count == 0) {
        CosetTable t;
        t.index = 1;
        t.generator_count = p.generator_count;
        t.action.assign(size_t(p.generator_count), {0});
        t.action_inv.assign(size_t(p.generator_count), {0});
        t.validate(p);
        out.push_back(std::move(t));
        return out;
    }

    LowIndex li;
    li.ng = tr.pres.generator_count;
    li.max_cosets = n;
    for (const auto& r : tr.pres.relators)
        if (!r.empty()) li.relcols.push_back(word_cols(r));
    li.tab.emplace_back(size_t(2 * li.ng), -1);
    li.search();

    for (auto& tab : li.results) out.push_back(translate_table(p, tr, tab, {}));
    return out;
}

} // namespace cwhom
