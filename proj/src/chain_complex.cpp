#include "cwhom/chain_complex.hpp"

#include <algorithm>

namespace cwhom {

namespace {

// Places b into dest at row/col offsets, scaled by sign.
void paste(TMat& dest, const TMat& b, long long roff, long long coff, long long scale = 1) {
    for (size_t t = 0; t < b.val.size(); ++t)
        dest.add(b.ri[t] + roff, b.ci[t] + coff, b.val[t] * scale);
}

TMat empty_map(long long rows, long long cols) { return TMat(rows, cols); }

/// Free mapping cone quasi-isomorphic to a complex with relations. Cochain
/// complexes come back shifted one degree up: query at n + offset.
struct Cone {
    IntChainComplex complex;
    int offset = 0;
};

Cone cone_of(const IntChainComplex& c) {
    const int len = c.length();
    auto crank = [&](int k) -> long long {
        return (k >= 0 && k <= len) ? c.ranks[size_t(k)] : 0;
    };
    auto srank = [&](int k) -> long long {
        return (k >= 0 && k <= len) ? c.relations[size_t(k)].cols : 0;
    };
    Cone out;
    IntChainComplex& d = out.complex;
    d.cochain = c.cochain;
    d.properties = c.properties;
    d.ranks.resize(size_t(len) + 2);
    d.boundaries.resize(size_t(len) + 2);
    if (!c.cochain) {
        // D_n = C_n + R_{n-1}, degrees 0..len+1
        for (int n = 0; n <= len + 1; ++n) d.ranks[size_t(n)] = crank(n) + srank(n - 1);
        for (int n = 1; n <= len + 1; ++n) {
            TMat m(d.ranks[size_t(n - 1)], d.ranks[size_t(n)]);
            if (n <= len) paste(m, c.boundaries[size_t(n)], 0, 0);
            if (srank(n - 1) > 0) {
                paste(m, c.relations[size_t(n - 1)], 0, crank(n));
                if (srank(n - 2) > 0)
                    paste(m, c.relation_maps[size_t(n - 1)], crank(n - 1), crank(n), -1);
            }
            m.normalize();
            d.boundaries[size_t(n)] = std::move(m);
        }
    } else {
        // shifted: D^m = C^(m-1) + R^m, degrees 0..len+1; query at n+1
        out.offset = 1;
        for (int m = 0; m <= len + 1; ++m) d.ranks[size_t(m)] = crank(m - 1) + srank(m);
        for (int m = 0; m <= len; ++m) {
            TMat t(d.ranks[size_t(m + 1)], d.ranks[size_t(m)]);
            if (m >= 1 && m - 1 < len) paste(t, c.boundaries[size_t(m - 1)], 0, 0);
            if (srank(m) > 0) {
                paste(t, c.relations[size_t(m)], 0, crank(m - 1));
                if (srank(m + 1) > 0)
                    paste(t, c.relation_maps[size_t(m)], crank(m), crank(m - 1), -1);
            }
            t.normalize();
            d.boundaries[size_t(m)] = std::move(t);
        }
    }
    d.relations.resize(d.ranks.size());
    for (size_t k = 0; k < d.ranks.size(); ++k) d.relations[k] = TMat(d.ranks[k], 0);
    d.relation_maps.resize(d.ranks.size());
    return out;
}

} // namespace

bool IntChainComplex::has_relations() const {
    for (const TMat& r : relations)
        if (r.cols > 0) return true;
    return false;
}

void IntChainComplex::verify_dd_zero() const {
    const IntChainComplex* c = this;
    Cone coned;
    if (has_relations()) {
        coned = cone_of(*this);
        c = &coned.complex;
    }
    const int len = c->length();
    if (!c->cochain) {
        for (int k = 2; k <= len; ++k)
            if (!(c->boundaries[size_t(k - 1)] * c->boundaries[size_t(k)]).is_zero())
                throw NotAComplex("d^2 != 0 between degrees " + std::to_string(k) + " and " +
                                  std::to_string(k - 2));
    } else {
        for (int k = 0; k + 1 < len; ++k)
            if (!(c->boundaries[size_t(k + 1)] * c->boundaries[size_t(k)]).is_zero())
                throw NotAComplex("d^2 != 0 between degrees " + std::to_string(k) + " and " +
                                  std::to_string(k + 2));
    }
}

AbelianInvariants homology(const IntChainComplex& cc, int n) {
    const IntChainComplex* c = &cc;
    Cone coned;
    if (cc.has_relations()) {
        coned = cone_of(cc);
        c = &coned.complex;
        n += coned.offset;
    }
    const int len = c->length();
    if (n < 0 || n > len) return {};

    // incoming: the differential whose image is divided out;
    // outgoing: the differential whose kernel is taken
    const TMat* outgoing = nullptr;
    const TMat* incoming = nullptr;
    if (!c->cochain) {
        if (n >= 1) outgoing = &c->boundaries[size_t(n)];
        if (n + 1 <= len) incoming = &c->boundaries[size_t(n + 1)];
    } else {
        if (n < len) outgoing = &c->boundaries[size_t(n)];
        if (n >= 1) incoming = &c->boundaries[size_t(n - 1)];
    }
    if (outgoing && incoming && !((*outgoing) * (*incoming)).is_zero())
        throw NotAComplex("boundaries do not compose to zero at degree " + std::to_string(n));

    long long rank_out = outgoing ? sparse_rank(*outgoing) : 0;
    std::vector<Int> in_diag = incoming ? smith_diagonal(*incoming) : std::vector<Int>{};
    AbelianInvariants inv;
    inv.free_rank = c->ranks[size_t(n)] - rank_out - (long long)in_diag.size();
    for (const Int& d : in_diag)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

std::vector<AbelianInvariants> homology_all(const IntChainComplex& c) {
    std::vector<AbelianInvariants> out;
    for (int n = 0; n <= c.length(); ++n) out.push_back(homology(c, n));
    return out;
}

HomologyPresentation::HomologyPresentation(const IntChainComplex& c, int n) : n_(n) {
    if (c.has_relations())
        throw TopologyError("homology presentation requires a free complex");
    if (c.cochain) throw TopologyError("homology presentation is for chain complexes");
    if (n < 0 || n > c.length()) throw TopologyError("degree out of range");
    rank_ = c.ranks[size_t(n)];

    if (n >= 1) {
        kernel_ = kernel_basis(c.boundaries[size_t(n)].dense());
    } else {
        kernel_ = IMat::identity(int(rank_));
    }
    solver_ = std::make_unique<LatticeSolver>(kernel_);

    const int k = kernel_.cols();
    long long nrel = (n + 1 <= c.length()) ? c.ranks[size_t(n + 1)] : 0;
    IMat rel(k, int(nrel));
    if (nrel > 0) {
        IMat bnd = c.boundaries[size_t(n + 1)].dense();
        for (int j = 0; j < (int)nrel; ++j) {
            auto coords = solver_->solve(bnd.col(j));
            for (int i = 0; i < k; ++i) rel(i, j) = coords[size_t(i)];
        }
    }
    rel_snf_ = smith_normal_form(std::move(rel), true);

    const int r = rel_snf_.rank();
    for (int i = 0; i < r; ++i)
        if (rel_snf_.diagonal[size_t(i)] != 1) {
            surviving_.push_back(i);
            moduli_.push_back(rel_snf_.diagonal[size_t(i)]);
            inv_.torsion.push_back(rel_snf_.diagonal[size_t(i)]);
        }
    for (int i = r; i < k; ++i) {
        surviving_.push_back(i);
        moduli_.push_back(0);
    }
    inv_.free_rank = k - r;
}

std::vector<Int> HomologyPresentation::generator_chain(int i) const {
    const int k = kernel_.cols();
    const int s = surviving_[size_t(i)];
    std::vector<Int> x(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) x[size_t(j)] = rel_snf_.Uinv(j, s);
    std::vector<Int> chain(static_cast<size_t>(rank_));
    for (int r = 0; r < (int)rank_; ++r) {
        Int v = 0;
        for (int j = 0; j < k; ++j)
            if (kernel_(r, j) != 0 && x[size_t(j)] != 0) v += kernel_(r, j) * x[size_t(j)];
        chain[size_t(r)] = v;
    }
    return chain;
}

std::vector<Int> HomologyPresentation::cycle_coords(const std::vector<Int>& cycle) const {
    auto x = solver_->solve(cycle);
    const int k = kernel_.cols();
    std::vector<Int> out(surviving_.size());
    for (size_t i = 0; i < surviving_.size(); ++i) {
        const int s = surviving_[i];
        Int v = 0;
        for (int j = 0; j < k; ++j)
            if (rel_snf_.U(s, j) != 0 && x[size_t(j)] != 0) v += rel_snf_.U(s, j) * x[size_t(j)];
        if (moduli_[i] != 0) {
            v %= moduli_[i];
            if (v < 0) v += moduli_[i];
        }
        out[i] = v;
    }
    return out;
}

InducedMap induced_map(const IntChainComplex& src, const IntChainComplex& tgt,
                       const std::vector<TMat>& f, int n) {
    if (src.cochain || tgt.cochain) throw TopologyError("induced_map is for chain complexes");
    auto fmat = [&](int k) -> const TMat* {
        return (k >= 0 && k < (int)f.size()) ? &f[size_t(k)] : nullptr;
    };
    // chain-map property in degrees n and n+1
    for (int k = n; k <= n + 1; ++k) {
        if (k < 1 || k > src.length() || k > tgt.length()) continue;
        const TMat* fk = fmat(k);
        const TMat* fk1 = fmat(k - 1);
        if (!fk || !fk1) throw NotChainMap("missing degree " + std::to_string(k) + " data");
        TMat lhs = tgt.boundaries[size_t(k)] * (*fk);
        TMat rhs = (*fk1) * src.boundaries[size_t(k)];
        TMat diff = lhs;
        for (size_t t = 0; t < rhs.val.size(); ++t) diff.add(rhs.ri[t], rhs.ci[t], -rhs.val[t]);
        if (!diff.is_zero())
            throw NotChainMap("does not commute with boundaries in degree " + std::to_string(k));
    }

    HomologyPresentation hs(src, n), ht(tgt, n);
    const TMat* fn = fmat(n);
    if (!fn) throw NotChainMap("missing degree " + std::to_string(n) + " data");
    IMat fd = fn->dense();

    InducedMap out;
    out.source = hs.invariants();
    out.target = ht.invariants();
    out.matrix = IMat(ht.num_gens(), hs.num_gens());
    for (int i = 0; i < ht.num_gens(); ++i) out.target_moduli.push_back(ht.gen_modulus(i));
    for (int j = 0; j < hs.num_gens(); ++j) {
        auto chain = hs.generator_chain(j);
        std::vector<Int> image(static_cast<size_t>(fd.rows()));
        for (int r = 0; r < fd.rows(); ++r) {
            Int v = 0;
            for (int c = 0; c < fd.cols(); ++c)
                if (fd(r, c) != 0 && chain[size_t(c)] != 0) v += fd(r, c) * chain[size_t(c)];
            image[size_t(r)] = v;
        }
        auto coords = ht.cycle_coords(image);
        for (int i = 0; i < ht.num_gens(); ++i) out.matrix(i, j) = coords[size_t(i)];
    }
    return out;
}

AbelianInvariants cokernel(const InducedMap& m) {
    const long long ambient = m.matrix.rows();
    TMat rel(ambient, 0);
    long long col = 0;
    for (int j = 0; j < m.matrix.cols(); ++j, ++col)
        for (int i = 0; i < m.matrix.rows(); ++i)
            if (m.matrix(i, j) != 0) {
                // induced-map entries are reduced mod target torsion, so they
                // fit int64 except for huge free parts; go through from_dense
                // to keep the conversion checked
                rel.add(i, col, m.matrix(i, j).convert_to<long long>());
            }
    for (size_t i = 0; i < m.target_moduli.size(); ++i)
        if (m.target_moduli[i] != 0) {
            rel.add((long long)i, col, m.target_moduli[i].convert_to<long long>());
            ++col;
        }
    rel.cols = col;
    return cokernel_invariants(ambient, rel);
}

} // namespace cwhom
