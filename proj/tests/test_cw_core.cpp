#include "doctest.h"

#include <algorithm>

#include "cwhom/cell_complex.hpp"
#include "cwhom/signed_complex.hpp"
#include "cwhom/simplify.hpp"
#include "fixtures.hpp"

using namespace cwhom;

TEST_CASE("from_boundaries basics") {
    RegularCW pt = fixtures::point();
    CHECK(pt.size() == 1);
    CHECK(pt.dimension() == 0);

    RegularCW s1 = fixtures::circle2();
    CHECK(s1.size() == 4);
    CHECK(s1.dimension() == 1);

    RegularCW s = fixtures::annulus48();
    CHECK(s.size() == 48);
    CHECK(s.ncells(0) == 16);
    CHECK(s.ncells(1) == 24);
    CHECK(s.ncells(2) == 8);
    CHECK(euler_characteristic(s) == 0);
}

TEST_CASE("from_boundaries rejects malformed lattices") {
    CHECK_THROWS_AS(RegularCW::from_boundaries({{{}}, {{1, 5}}}), MalformedLattice);
    CHECK_THROWS_AS(RegularCW::from_boundaries({{{}, {}}, {{}}}), MalformedLattice);
    CHECK_THROWS_AS(RegularCW::from_boundaries({{{}, {}}, {{1, 1}}}), MalformedLattice);
    CHECK_THROWS_AS(RegularCW::from_boundaries({{{}, {}, {}}, {{1, 2, 3}}}), MalformedLattice);
    // diamond failure: 2-cell attached along one edge only
    CHECK_THROWS_AS(RegularCW::from_boundaries({{{}, {}}, {{1, 2}}, {{1}}}), MalformedLattice);
}

TEST_CASE("coboundaries transpose boundaries") {
    RegularCW s = fixtures::annulus48();
    for (int d = 1; d <= s.dimension(); ++d)
        for (cell_t k = 0; k < s.ncells(d); ++k)
            for (cell_t f : s.boundary(d, k)) {
                auto cb = s.coboundary(d - 1, f);
                CHECK(std::count(cb.begin(), cb.end(), k) == 1);
            }
}

TEST_CASE("direct product sizes multiply and chi is multiplicative") {
    RegularCW s = fixtures::annulus48();
    RegularCW pt = fixtures::point();
    RegularCW p = direct_product(pt, s);
    CHECK(p.size() == s.size());
    CHECK(p.dimension() == 2);

    RegularCW t = fixtures::torus_min();
    CHECK(t.size() == 16);
    CHECK(euler_characteristic(t) == 0);

    RegularCW ss = direct_product(s, s);
    CHECK(ss.size() == 48 * 48);
    CHECK(euler_characteristic(ss) == 0);
}

TEST_CASE("closure and subcomplex") {
    RegularCW s = fixtures::annulus48();
    auto cl = closure(s, {{1, 1}});
    CHECK(cl.size() == 3); // edge plus its 2 vertices

    auto cl2 = closure(s, {{2, 1}});
    CHECK(cl2.size() == 9); // square, 4 edges, 4 vertices

    std::vector<CellRef> everything;
    for (int d = 0; d <= s.dimension(); ++d)
        for (cell_t k = 1; k <= s.ncells(d); ++k) everything.push_back({d, k});
    Subcomplex whole = subcomplex(s, everything);
    CHECK(whole.complex.size() == s.size());

    CHECK_THROWS_AS(subcomplex(s, {{2, 1}}), NotClosed);
}

TEST_CASE("path components") {
    RegularCW s = fixtures::annulus48();
    CHECK(path_components(s).size() == 1);

    RegularCW e2 = RegularCW::from_boundaries({{{}, {}, {}, {}}, {{1, 2}, {3, 4}}});
    auto comps = path_components(e2);
    CHECK(comps.size() == 2);
    CHECK(comps[0].complex.size() == 3);
    CHECK(comps[1].complex.size() == 3);
    CHECK(comps[0].parent[1][0] == 0);
    CHECK(comps[1].parent[1][0] == 1);
}

TEST_CASE("signed chain complex has dd = 0 and correct homology") {
    for (const RegularCW& x : {fixtures::circle2(), fixtures::square(), fixtures::annulus48(),
                               fixtures::torus_min(), fixtures::sphere_cube(),
                               fixtures::icosahedron(), fixtures::rp2_6()}) {
        SignedChainComplexZ s = signed_chain_complex(x);
        IntChainComplex c = s.chain_complex(x);
        c.verify_dd_zero();
    }
    auto h = cw_homology(fixtures::annulus48());
    CHECK(h[0] == AbelianInvariants::free(1));
    CHECK(h[1] == AbelianInvariants::free(1));
    CHECK(h[2].is_trivial());

    auto ht = cw_homology(fixtures::torus_min());
    CHECK(ht[0] == AbelianInvariants::free(1));
    CHECK(ht[1] == AbelianInvariants::free(2));
    CHECK(ht[2] == AbelianInvariants::free(1));

    auto hs = cw_homology(fixtures::sphere_cube());
    CHECK(hs[0] == AbelianInvariants::free(1));
    CHECK(hs[1].is_trivial());
    CHECK(hs[2] == AbelianInvariants::free(1));

    auto hr = cw_homology(fixtures::rp2_6());
    CHECK(hr[0] == AbelianInvariants::free(1));
    CHECK(hr[1] == AbelianInvariants{0, {Int(2)}});
    CHECK(hr[2].is_trivial());
}

TEST_CASE("rp2 fixture has the right cell counts") {
    RegularCW r = fixtures::rp2_6();
    CHECK(r.ncells(0) == 6);
    CHECK(r.ncells(1) == 15);
    CHECK(r.ncells(2) == 10);
    RegularCW ico = fixtures::icosahedron();
    CHECK(ico.ncells(0) == 12);
    CHECK(ico.ncells(1) == 30);
    CHECK(ico.ncells(2) == 20);
}

TEST_CASE("simplify shrinks the annulus to 12 cells and preserves homology") {
    RegularCW s = fixtures::annulus48();
    RegularCW t = simplify(s);
    CHECK(t.size() <= 12);
    CHECK(euler_characteristic(t) == euler_characteristic(s));
    auto h0 = cw_homology(s), h1 = cw_homology(t);
    CHECK(h0[0] == h1[0]);
    CHECK(h0[1] == h1[1]);

    RegularCW t2 = simplify(t);
    CHECK(t2.size() == t.size());

    RegularCW tor = fixtures::torus_min();
    CHECK(simplify(tor).size() == tor.size()); // already minimal regular
}

TEST_CASE("simplify preserves homology on the corpus") {
    for (const RegularCW& x : {fixtures::annulus48(), fixtures::sphere_cube(), fixtures::rp2_6(),
                               fixtures::icosahedron()}) {
        RegularCW y = simplify(x);
        CHECK(y.size() <= x.size());
        CHECK(euler_characteristic(y) == euler_characteristic(x));
        auto hx = cw_homology(x), hy = cw_homology(y);
        hy.resize(hx.size());
        for (size_t n = 0; n < hx.size(); ++n) CHECK(hx[n] == hy[n]);
    }
}
