// Shared small complexes for the test suite.
#ifndef CWHOM_TESTS_FIXTURES_HPP
#define CWHOM_TESTS_FIXTURES_HPP

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "cwhom/cell_complex.hpp"

namespace fixtures {

using namespace cwhom;

inline RegularCW point() { return RegularCW::from_boundaries({{{}}}); }

inline RegularCW interval() { return RegularCW::from_boundaries({{{}, {}}, {{1, 2}}}); }

/// Minimal regular circle: 2 vertices, 2 edges.
inline RegularCW circle2() { return RegularCW::from_boundaries({{{}, {}}, {{1, 2}, {1, 2}}}); }

/// Closed square: 4 vertices, 4 edges, 1 face.
inline RegularCW square() {
    return RegularCW::from_boundaries(
        {{{}, {}, {}, {}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{1, 2, 3, 4}}});
}

/// m x n grid of unit squares, with the listed faces (x, y) omitted.
inline RegularCW grid(int m, int n, const std::vector<std::pair<int, int>>& holes = {}) {
    auto vid = [&](int x, int y) { return cell_t(y * (m + 1) + x + 1) ; };
    std::vector<std::vector<cell_t>> verts((size_t(m) + 1) * (size_t(n) + 1));
    std::vector<std::vector<cell_t>> edges;
    std::map<std::pair<cell_t, cell_t>, cell_t> eid;
    auto add_edge = [&](cell_t a, cell_t b) {
        if (a > b) std::swap(a, b);
        auto it = eid.find({a, b});
        if (it != eid.end()) return it->second;
        edges.push_back({a, b});
        return eid[{a, b}] = cell_t(edges.size());
    };
    std::vector<std::vector<cell_t>> faces;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < m; ++x) {
            bool hole = false;
            for (auto [hx, hy] : holes) hole |= (hx == x && hy == y);
            cell_t s = add_edge(vid(x, y), vid(x + 1, y));
            cell_t e = add_edge(vid(x + 1, y), vid(x + 1, y + 1));
            cell_t t = add_edge(vid(x, y + 1), vid(x + 1, y + 1));
            cell_t w = add_edge(vid(x, y), vid(x, y + 1));
            if (!hole) faces.push_back({s, e, t, w});
        }
    std::vector<std::vector<cell_t>> vb(verts.size());
    return RegularCW::from_boundaries({vb, edges, faces});
}

/// The 48-cell annulus: 3x3 grid of squares with the middle square removed.
inline RegularCW annulus48() { return grid(3, 3, {{1, 1}}); }

inline RegularCW torus_min() { return direct_product(circle2(), circle2()); }

inline RegularCW cube() {
    RegularCW i = interval();
    return direct_product(direct_product(i, i), i);
}

/// Boundary 2-sphere of the solid cube (26 cells).
inline RegularCW sphere_cube() {
    RegularCW c = cube();
    std::vector<std::vector<char>> mask(4);
    for (int d = 0; d <= 3; ++d) mask[size_t(d)].assign(size_t(c.ncells(d)), d < 3);
    return subcomplex_masked(c, mask).complex;
}

/// Icosahedron surface: 12 vertices, 30 edges, 20 triangles.
inline RegularCW icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> v;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            v.push_back({0, s1, s2 * phi});
            v.push_back({s1, s2 * phi, 0});
            v.push_back({s1 * phi, 0, s2});
        }
    auto d2 = [&](int a, int b) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (v[size_t(a)][size_t(k)] - v[size_t(b)][size_t(k)]) *
                                         (v[size_t(a)][size_t(k)] - v[size_t(b)][size_t(k)]);
        return s;
    };
    std::vector<std::vector<cell_t>> edges;
    std::map<std::pair<int, int>, cell_t> eid;
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b)
            if (d2(a, b) < 4.5) {
                edges.push_back({cell_t(a + 1), cell_t(b + 1)});
                eid[{a, b}] = cell_t(edges.size());
            }
    std::vector<std::vector<cell_t>> faces;
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b)
            for (int c = b + 1; c < 12; ++c)
                if (eid.count({a, b}) && eid.count({b, c}) && eid.count({a, c}))
                    faces.push_back({eid[{a, b}], eid[{b, c}], eid[{a, c}]});
    std::vector<std::vector<cell_t>> vb(12);
    return RegularCW::from_boundaries({vb, edges, faces});
}

/// 6-vertex projective plane: antipodal quotient of the icosahedron, plus the
/// antipodal involution on the quotient's double cover is recorded by callers
/// that need it. Returns the quotient lattice only.
inline RegularCW rp2_6() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> v;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            v.push_back({0, s1, s2 * phi});
            v.push_back({s1, s2 * phi, 0});
            v.push_back({s1 * phi, 0, s2});
        }
    auto antipode = [&](int a) {
        for (int b = 0; b < 12; ++b) {
            bool neg = true;
            for (int k = 0; k < 3; ++k) neg &= std::abs(v[size_t(a)][size_t(k)] + v[size_t(b)][size_t(k)]) < 1e-9;
            if (neg) return b;
        }
        return -1;
    };
    // orbit representative = smaller index
    std::vector<int> rep(12), orbit(12, -1);
    int nv = 0;
    for (int a = 0; a < 12; ++a) {
        int b = antipode(a);
        rep[size_t(a)] = std::min(a, b);
        if (rep[size_t(a)] == a) orbit[size_t(a)] = nv++;
    }
    auto vclass = [&](int a) { return orbit[size_t(rep[size_t(a)])]; };

    auto d2 = [&](int a, int b) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (v[size_t(a)][size_t(k)] - v[size_t(b)][size_t(k)]) *
                                         (v[size_t(a)][size_t(k)] - v[size_t(b)][size_t(k)]);
        return s;
    };
    std::map<std::pair<int, int>, int> eclass;
    std::vector<std::vector<cell_t>> edges;
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b)
            if (d2(a, b) < 4.5) {
                int a2 = antipode(a), b2 = antipode(b);
                auto key = std::minmax(a, b);
                auto key2 = std::minmax(a2, b2);
                if (eclass.count({key2.first, key2.second}) && !eclass.count({key.first, key.second}))
                    eclass[{key.first, key.second}] = eclass[{key2.first, key2.second}];
                else if (!eclass.count({key.first, key.second})) {
                    edges.push_back({cell_t(vclass(a) + 1), cell_t(vclass(b) + 1)});
                    eclass[{key.first, key.second}] = int(edges.size());
                }
            }
    auto ec = [&](int a, int b) {
        auto key = std::minmax(a, b);
        return eclass.at({key.first, key.second});
    };
    std::map<std::array<int, 3>, int> fclass;
    std::vector<std::vector<cell_t>> faces;
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b)
            for (int c = b + 1; c < 12; ++c) {
                if (!(d2(a, b) < 4.5 && d2(b, c) < 4.5 && d2(a, c) < 4.5)) continue;
                std::array<int, 3> key{a, b, c};
                int a2 = antipode(a), b2 = antipode(b), c2 = antipode(c);
                std::array<int, 3> key2{a2, b2, c2};
                std::sort(key2.begin(), key2.end());
                if (fclass.count(key2) && !fclass.count(key))
                    fclass[key] = fclass[key2];
                else if (!fclass.count(key)) {
                    faces.push_back({cell_t(ec(a, b)), cell_t(ec(b, c)), cell_t(ec(a, c))});
                    fclass[key] = int(faces.size());
                }
            }
    std::vector<std::vector<cell_t>> vb(static_cast<size_t>(nv));
    return RegularCW::from_boundaries({vb, edges, faces});
}

} // namespace fixtures

#endif
