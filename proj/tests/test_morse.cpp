#include "doctest.h"

#include "cwhom/dvf.hpp"
#include "cwhom/signed_complex.hpp"
#include "fixtures.hpp"

using namespace cwhom;

namespace {

// exhaustive check that no arrow can be added while keeping admissibility
bool is_maximal(const RegularCW& x, const DiscreteVectorField& v) {
    for (int d = 1; d <= x.dimension(); ++d)
        for (cell_t t = 0; t < x.ncells(d); ++t) {
            if (v.involved(d, t)) continue;
            for (cell_t s : x.boundary(d, t)) {
                if (v.involved(d - 1, s)) continue;
                DiscreteVectorField w = v;
                w.vector_field[size_t(d)][size_t(s)] = t;
                w.inverse_vector_field[size_t(d)][size_t(t)] = s;
                if (is_admissible(x, w)) return false;
            }
        }
    return true;
}

} // namespace

TEST_CASE("maximal field on a point and on contractible complexes") {
    RegularCW pt = fixtures::point();
    DiscreteVectorField v = build_maximal_dvf(pt);
    CHECK(critical_cells(pt, v).total() == 1);

    RegularCW sq = fixtures::square();
    DiscreteVectorField vs = build_maximal_dvf(sq);
    CHECK(is_admissible(sq, vs));
    CHECK(critical_cells(sq, vs).total() == 1);
}

TEST_CASE("maximal field on the annulus leaves one 0-cell and one 1-cell") {
    RegularCW s = fixtures::annulus48();
    DiscreteVectorField v = build_maximal_dvf(s);
    CHECK(is_admissible(s, v));
    CriticalCells c = critical_cells(s, v);
    CHECK(c.count(0) == 1);
    CHECK(c.count(1) == 1);
    CHECK(c.count(2) == 0);
}

TEST_CASE("hand-built two-arrow circuit is rejected") {
    RegularCW s1 = fixtures::circle2();
    DiscreteVectorField v;
    v.vector_field.resize(2);
    v.inverse_vector_field.resize(2);
    v.vector_field[1] = {0, 1};         // v1 -> e1, v2 -> e2
    v.inverse_vector_field[1] = {0, 1};
    CHECK_FALSE(is_admissible(s1, v));
}

TEST_CASE("empty field is admissible; every cell critical") {
    RegularCW s = fixtures::annulus48();
    DiscreteVectorField v;
    v.vector_field.resize(size_t(s.dimension()) + 1);
    v.inverse_vector_field.resize(size_t(s.dimension()) + 1);
    for (int d = 1; d <= s.dimension(); ++d) {
        v.vector_field[size_t(d)].assign(size_t(s.ncells(d - 1)), -1);
        v.inverse_vector_field[size_t(d)].assign(size_t(s.ncells(d)), -1);
    }
    CHECK(is_admissible(s, v));
    CHECK(critical_cells(s, v).total() == s.size());
}

TEST_CASE("morse complex of the annulus is 0 -> Z -> Z with zero boundary") {
    RegularCW s = fixtures::annulus48();
    DiscreteVectorField v = build_maximal_dvf(s);
    IntChainComplex m = morse_chain_complex(s, v);
    CHECK(m.ranks[0] == 1);
    CHECK(m.ranks[1] == 1);
    auto h = homology_all(m);
    CHECK(h[0] == AbelianInvariants::free(1));
    CHECK(h[1] == AbelianInvariants::free(1));
}

TEST_CASE("morse homology equals cellular homology across the corpus") {
    for (const RegularCW& x : {fixtures::circle2(), fixtures::square(), fixtures::annulus48(),
                               fixtures::torus_min(), fixtures::sphere_cube(), fixtures::rp2_6(),
                               fixtures::icosahedron(), fixtures::cube()}) {
        DiscreteVectorField v = build_maximal_dvf(x);
        CHECK(is_admissible(x, v));
        CriticalCells c = critical_cells(x, v);
        long long alt = 0;
        for (int d = 0; d < (int)c.cells.size(); ++d)
            alt += (d % 2 == 0 ? 1 : -1) * c.count(d);
        CHECK(alt == euler_characteristic(x));

        auto hm = homology_all(morse_chain_complex(x, v));
        auto hc = cw_homology(x);
        hm.resize(hc.size());
        for (size_t n = 0; n < hc.size(); ++n) CHECK(hm[n] == hc[n]);
    }
}

TEST_CASE("fields from the builder are maximal on small complexes") {
    for (const RegularCW& x :
         {fixtures::point(), fixtures::interval(), fixtures::circle2(), fixtures::square(),
          fixtures::torus_min(), fixtures::sphere_cube()}) {
        REQUIRE(x.size() <= 30);
        DiscreteVectorField v = build_maximal_dvf(x);
        CHECK(is_maximal(x, v));
    }
}

TEST_CASE("torus morse complex has critical counts 1,2,1") {
    RegularCW t = fixtures::torus_min();
    DiscreteVectorField v = build_maximal_dvf(t);
    CriticalCells c = critical_cells(t, v);
    CHECK(c.count(0) == 1);
    CHECK(c.count(1) == 2);
    CHECK(c.count(2) == 1);
}
