#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevjor/zmat.hpp"

using namespace chevjor;

namespace {

FpMat fp_from(long p, std::size_t r, std::size_t c, std::vector<long> vals) {
    FpMat m(p, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            long v = vals[i * c + j] % p;
            m.at(i, j) = v < 0 ? v + p : v;
        }
    return m;
}

ZMat z_from(std::size_t r, std::size_t c, std::vector<long> vals) {
    ZMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = vals[i * c + j];
    return m;
}

} // namespace

TEST_CASE("prime field scalars") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
        for (long a = 1; a < p; ++a) CHECK((a * fp_inv(a, p)) % p == 1);
    CHECK(fp_inv(-3, 7) == fp_inv(4, 7));
    CHECK_THROWS_AS(fp_inv(0, 5), precondition_error);
    CHECK_THROWS_AS(fp_inv(10, 5), precondition_error);
}

TEST_CASE("FpMat products and powers") {
    FpMat a = fp_from(7, 2, 2, {1, 2, 3, 4});
    FpMat b = fp_from(7, 2, 2, {0, 1, 1, 0});
    FpMat ab = a.mul(b);
    CHECK(ab == fp_from(7, 2, 2, {2, 1, 4, 3}));
    CHECK(a.mul(FpMat::identity(7, 2)) == a);
    CHECK(a.pow(0) == FpMat::identity(7, 2));
    CHECK(a.pow(3) == a.mul(a).mul(a));

    // Nilpotent: strictly upper triangular cubes to zero.
    FpMat n = fp_from(5, 3, 3, {0, 1, 2, 0, 0, 3, 0, 0, 0});
    CHECK_FALSE(n.pow(2) == FpMat(5, 3, 3));
    CHECK(n.pow(3) == FpMat(5, 3, 3));
}

TEST_CASE("FpMat reduce handles negatives and big integers") {
    std::vector<Int> vals = {Int(-1), Int("1000000000000000000000"), Int(10), Int(-15)};
    FpMat m = FpMat::reduce(5, 2, 2, vals);
    CHECK(m.at(0, 0) == 4);
    CHECK(m.at(0, 1) == 0); // 10^21 is divisible by 5
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 0);
}

TEST_CASE("FpMat echelon forms") {
    FpMat a = fp_from(5, 3, 4, {1, 2, 3, 4, 2, 4, 1, 3, 3, 1, 4, 2});
    auto e = a.echelon_with_transform();
    CHECK(e.transform.mul(a) == e.ech);
    CHECK(e.transform.rank() == 3);
    CHECK(e.pivots.size() == a.rank());

    auto r = a.rref();
    CHECK(r.mat.rows() == r.pivots.size());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        CHECK(r.mat.at(i, r.pivots[i]) == 1);
        for (std::size_t k = 0; k < r.mat.rows(); ++k)
            if (k != i) CHECK(r.mat.at(k, r.pivots[i]) == 0);
    }

    FpMat sing = fp_from(5, 3, 3, {1, 2, 0, 2, 1, 0, 0, 0, 0});
    CHECK(sing.rank() == 2);
    CHECK(fp_from(3, 2, 2, {1, 2, 2, 1}).rank() == 1); // det = -3 vanishes mod 3
}

TEST_CASE("FpMat kernel") {
    FpMat a = fp_from(7, 2, 4, {1, 2, 3, 4, 0, 1, 2, 3});
    FpMat k = a.kernel();
    CHECK(k.rows() == 2);
    for (std::size_t i = 0; i < k.rows(); ++i) {
        // a * v^T = 0 for each kernel row v
        for (std::size_t r = 0; r < a.rows(); ++r) {
            long s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += a.at(r, j) * k.at(i, j);
            CHECK(s % 7 == 0);
        }
    }
    CHECK(FpMat::identity(5, 3).kernel().rows() == 0);
}

TEST_CASE("solving against a row basis over GF(p)") {
    FpMat b = fp_from(5, 2, 3, {1, 2, 0, 0, 1, 1});
    std::vector<long> v = {1, 4, 2}; // 1*(1,2,0) + 2*(0,1,1)
    auto x = solve_xB_eq_v(b, v);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == 1);
    CHECK(x[1] == 2);
    CHECK_THROWS_AS(solve_xB_eq_v(b, {0, 0, 1}), precondition_error);
}

TEST_CASE("ZMat arithmetic") {
    ZMat a = z_from(2, 2, {1, -2, 3, 4});
    ZMat b = z_from(2, 2, {0, 1, 1, 0});
    CHECK(a.mul(b) == z_from(2, 2, {-2, 1, 4, 3}));
    CHECK(a.mul(ZMat::identity(2)) == a);
    CHECK(a.add(a) == a.scale(2));
    CHECK(a.transpose().transpose() == a);
    CHECK(a.add(a.scale(-1)).is_zero());
    FpMat m = a.mod_p(3);
    CHECK(m.at(0, 1) == 1); // -2 mod 3
}

TEST_CASE("Hermite form with unimodular transform") {
    ZMat a = z_from(2, 2, {2, 4, 1, 1});
    auto h = a.hnf_with_transform();
    CHECK(h.transform.mul(a) == h.h);
    Int ud = h.transform.det();
    CHECK((ud == 1 || ud == -1));
    CHECK(h.h == z_from(2, 2, {1, 1, 0, 2}));
    CHECK(h.pivots == std::vector<std::size_t>{0, 1});

    // Rank-deficient input with negative entries.
    ZMat b = z_from(3, 3, {2, 4, 6, -1, -2, -3, 0, 5, 7});
    auto hb = b.hnf_with_transform();
    CHECK(hb.transform.mul(b) == hb.h);
    CHECK(hb.pivots.size() == 2);
    Int ub = hb.transform.det();
    CHECK((ub == 1 || ub == -1));
    for (std::size_t j = 0; j < 3; ++j) CHECK(hb.h.at(2, j) == 0);
    // Pivots positive, entries above each pivot reduced.
    for (std::size_t i = 0; i < hb.pivots.size(); ++i) {
        Int piv = hb.h.at(i, hb.pivots[i]);
        CHECK(piv > 0);
        for (std::size_t k = 0; k < i; ++k) {
            CHECK(hb.h.at(k, hb.pivots[i]) >= 0);
            CHECK(hb.h.at(k, hb.pivots[i]) < piv);
        }
    }
    // Canonical: taking the Hermite form twice is idempotent.
    CHECK(hb.h.hnf_with_transform().h == hb.h);
}

TEST_CASE("integer determinants") {
    CHECK(z_from(2, 2, {2, 4, 1, 1}).det() == -2);
    CHECK(z_from(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}).det() == 0);
    CHECK(z_from(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}).det() == -1);
    ZMat big = z_from(4, 4, {3, -1, 2, 0, 1, 4, -2, 5, 0, 2, 1, -3, 2, 0, 0, 1});
    // Cofactor expansion along the last row: -2*43 + 29.
    CHECK(big.det() == -57);
    CHECK(ZMat::identity(5).det() == 1);
}

TEST_CASE("lattice membership solves") {
    ZMat h = z_from(2, 3, {1, 1, 0, 0, 2, 2});
    std::vector<std::size_t> pivots = {0, 1};
    std::vector<Int> v = {3, 7, 4}; // 3*(1,1,0) + 2*(0,2,2)
    auto x = solve_in_lattice(h, pivots, v);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == 3);
    CHECK(x[1] == 2);
    // Odd second pivot coordinate is not in the lattice.
    CHECK_THROWS_AS(solve_in_lattice(h, pivots, {1, 2, 2}), internal_error);
    // Residual off the pivot columns must vanish.
    CHECK_THROWS_AS(solve_in_lattice(h, pivots, {1, 1, 5}), internal_error);
}
