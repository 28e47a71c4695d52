#include "doctest.h"

#include <random>

#include "cwhom/chain_complex.hpp"
#include "cwhom/smith.hpp"

using namespace cwhom;

namespace {

// Independent determinant via Bareiss fraction-free elimination.
Int bareiss_det(IMat a) {
    const int n = a.rows();
    REQUIRE(a.cols() == n);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Int gcd_of_entries(const IMat& a) {
    Int g = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) g = gcd(g, a(i, j));
    return g;
}

IMat random_matrix(std::mt19937& rng, int maxdim, int maxabs) {
    std::uniform_int_distribution<int> dim(1, maxdim), val(-maxabs, maxabs);
    IMat m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    return m;
}

} // namespace

TEST_CASE("smith normal form on small fixed matrices") {
    SUBCASE("identity") {
        auto s = smith_normal_form(IMat::identity(4));
        CHECK(s.diagonal == std::vector<Int>{1, 1, 1, 1});
    }
    SUBCASE("[[2,4],[6,8]] has invariants 2, 4") {
        IMat m(2, 2);
        m(0, 0) = 2;
        m(0, 1) = 4;
        m(1, 0) = 6;
        m(1, 1) = 8;
        auto s = smith_normal_form(m);
        CHECK(s.diagonal == std::vector<Int>{2, 4});
    }
    SUBCASE("zero matrix has empty diagonal") {
        auto s = smith_normal_form(IMat(3, 5));
        CHECK(s.diagonal.empty());
    }
}

TEST_CASE("smith suite: divisibility, recomposition, determinant on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        IMat m = random_matrix(rng, 20, 50);
        SmithForm s = smith_normal_form(m, true);

        for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            REQUIRE(s.diagonal[i] > 0);
            REQUIRE(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }

        // U * M * V equals the diagonal matrix
        IMat d = s.U * m * s.V;
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) {
                Int expect = (i == j && i < s.rank()) ? s.diagonal[size_t(i)] : Int(0);
                REQUIRE(d(i, j) == expect);
            }
        // transforms are mutually inverse
        REQUIRE(s.U * s.Uinv == IMat::identity(m.rows()));
        REQUIRE(s.V * s.Vinv == IMat::identity(m.cols()));

        if (m.rows() == m.cols()) {
            Int det = bareiss_det(m);
            Int prod = 1;
            for (const Int& x : s.diagonal) prod *= x;
            if (s.rank() < m.rows()) prod = 0;
            REQUIRE(abs(det) == prod);
        }
        if (s.rank() > 0) REQUIRE(s.diagonal[0] == gcd_of_entries(m));

        // sparse path agrees with the dense path
        auto sparse = smith_diagonal(TMat::from_dense(m));
        REQUIRE(sparse == s.diagonal);
    }
}

TEST_CASE("kernel basis and lattice solver") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IMat m = random_matrix(rng, 8, 6);
        IMat k = kernel_basis(m);
        IMat prod = m * k;
        CHECK(prod.is_zero());
        if (k.cols() > 0) {
            LatticeSolver solver(k);
            // a random integer combination must solve back exactly
            std::uniform_int_distribution<int> c(-4, 4);
            std::vector<Int> coeff(size_t(k.cols()));
            for (auto& v : coeff) v = c(rng);
            std::vector<Int> b(size_t(k.rows()), 0);
            for (int i = 0; i < k.rows(); ++i)
                for (int j = 0; j < k.cols(); ++j) b[size_t(i)] += k(i, j) * coeff[size_t(j)];
            CHECK(solver.solve(b) == coeff);
        }
    }
}

TEST_CASE("abelian invariants formatting and order") {
    AbelianInvariants a{2, {Int(2), Int(8)}};
    CHECK(a.gap_str() == "[ 0, 0, 2, 8 ]");
    CHECK(a.human_str() == "Z^2 + Z/2 + Z/8");
    CHECK(AbelianInvariants{0, {}}.human_str() == "0");

    AbelianInvariants z12 = AbelianInvariants::free(12), z16 = AbelianInvariants::free(16);
    CHECK(z12 < z16);
    CHECK_FALSE(z16 < z12);
}

TEST_CASE("homology of simple integer chain complexes") {
    // circle: Z -> Z with zero boundary
    IntChainComplex c;
    c.ranks = {1, 1};
    c.boundaries.resize(2);
    c.boundaries[1] = TMat(1, 1);
    c.relations.resize(2);
    c.relations[0] = TMat(1, 0);
    c.relations[1] = TMat(1, 0);
    c.relation_maps.resize(2);
    CHECK(homology(c, 0) == AbelianInvariants::free(1));
    CHECK(homology(c, 1) == AbelianInvariants::free(1));

    // Z --2--> Z: H_0 = Z/2
    IntChainComplex d = c;
    d.boundaries[1].add(0, 0, 2);
    CHECK(homology(d, 0) == AbelianInvariants{0, {Int(2)}});
    CHECK(homology(d, 1) == AbelianInvariants{0, {}});
}

TEST_CASE("homology through relations matches the plain quotient") {
    // single degree 0 group Z^2 / <(2,0)> = Z + Z/2, via the cone route
    IntChainComplex c;
    c.ranks = {2};
    c.boundaries.resize(1);
    c.relations.resize(1);
    c.relation_maps.resize(1);
    TMat rel(2, 1);
    rel.add(0, 0, 2);
    c.relations[0] = rel;
    c.relation_maps[0] = TMat(1, 0);
    CHECK(homology(c, 0) == AbelianInvariants{1, {Int(2)}});
}

TEST_CASE("induced map and cokernel") {
    // two circles; degree-1 doubling map
    IntChainComplex circle;
    circle.ranks = {1, 1};
    circle.boundaries.resize(2);
    circle.boundaries[1] = TMat(1, 1);
    circle.relations.assign(2, TMat(1, 0));
    circle.relation_maps.resize(2);

    std::vector<TMat> f(2);
    f[0] = TMat(1, 1);
    f[0].add(0, 0, 1);
    f[1] = TMat(1, 1);
    f[1].add(0, 0, 2);
    InducedMap m = induced_map(circle, circle, f, 1);
    CHECK(m.source == AbelianInvariants::free(1));
    CHECK(m.target == AbelianInvariants::free(1));
    CHECK(m.matrix(0, 0) == 2);
    CHECK(cokernel(m) == AbelianInvariants{0, {Int(2)}});

    // identity chain map: identity induced map, trivial cokernel
    f[1] = TMat(1, 1);
    f[1].add(0, 0, 1);
    InducedMap id = induced_map(circle, circle, f, 1);
    CHECK(id.matrix(0, 0) == 1);
    CHECK(cokernel(id).is_trivial());
}
