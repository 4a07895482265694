// Jordan block bookkeeping: rank-chain extraction, brute-force tensor
// decompositions, order and bound arithmetic, cross-checked against an
// independent kernel-chain oracle on randomized conjugates.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "chevjor/errors.hpp"
#include "chevjor/jordan.hpp"
#include "chevjor/modular.hpp"
#include "chevjor/root_system.hpp"
#include "chevjor/weyl_module.hpp"

using namespace chevjor;

namespace {

// Unipotent block-diagonal matrix with the given block sizes.
FpMat block_matrix(const std::vector<long>& blocks, long p) {
    std::size_t n = 0;
    for (long b : blocks) n += static_cast<std::size_t>(b);
    FpMat u = FpMat::identity(p, n);
    std::size_t off = 0;
    for (long b : blocks) {
        for (long i = 0; i + 1 < b; ++i)
            u.at(off + static_cast<std::size_t>(i), off + static_cast<std::size_t>(i) + 1) = 1;
        off += static_cast<std::size_t>(b);
    }
    return u;
}

// Independent reading of the block sizes from the kernel chain of u - Id:
// with d_k = dim ker (u-Id)^k, the number of blocks of size exactly k is
// 2 d_k - d_{k-1} - d_{k+1}. The minimal polynomial degree of u - Id gives
// the largest block and bounds the chain.
JordanType kernel_chain_oracle(const FpMat& u) {
    std::size_t n = u.rows();
    FpMat nil = u.add(FpMat::identity(u.p(), n).scale(u.p() - 1));
    std::vector<std::size_t> d{0};
    FpMat pw = FpMat::identity(u.p(), n);
    std::size_t deg = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        pw = pw.mul(nil);
        d.push_back(pw.kernel().rows());
        if (d.back() == n) {
            deg = k;
            break;
        }
    }
    REQUIRE(deg > 0);
    d.push_back(n);
    std::vector<long> blocks;
    for (std::size_t k = 1; k <= deg; ++k) {
        std::size_t cnt = 2 * d[k] - d[k - 1] - d[k + 1];
        for (std::size_t c = 0; c < cnt; ++c) blocks.push_back(static_cast<long>(k));
    }
    return make_jordan(std::move(blocks));
}

FpMat inverse_of(const FpMat& g) {
    auto e = g.echelon_with_transform();
    REQUIRE(e.pivots.size() == g.rows());
    return e.transform;
}

} // namespace

TEST_CASE("jordan type recovered from rank chains") {
    CHECK(jordan_type(block_matrix({7}, 5)) == make_jordan({7}));
    CHECK(jordan_type(FpMat::identity(3, 4)) == make_jordan({1, 1, 1, 1}));
    CHECK(jordan_type(block_matrix({5, 2, 1}, 3)) == make_jordan({2, 1, 5}));
    CHECK(jordan_type(block_matrix({4, 4, 2}, 2)) == make_jordan({4, 4, 2}));
    CHECK(jordan_type(FpMat(7, 0, 0)) == JordanType{});

    // Formatting round-trip spot checks.
    CHECK(format_jordan(make_jordan({2, 5, 1})) == "5,2,1");
    CHECK(format_jordan(JordanType{}) == "-");

    // A scalar that is not 1 is not unipotent, nor is a non-square input.
    FpMat two = FpMat::identity(5, 3).scale(2);
    CHECK_THROWS_AS(jordan_type(two), precondition_error);
    CHECK_THROWS_AS(jordan_type(FpMat(5, 2, 3)), precondition_error);
    CHECK_THROWS_AS(make_jordan({3, 0}), precondition_error);
}

TEST_CASE("tensor block decompositions, frozen small cases") {
    CHECK(tensor_jordan(2, 2, 3) == make_jordan({3, 1}));
    CHECK(tensor_jordan(2, 2, 2) == make_jordan({2, 2}));
    CHECK(tensor_jordan(3, 2, 3) == make_jordan({3, 3}));
    CHECK(tensor_jordan(1, 1, 5) == make_jordan({1}));
    CHECK(tensor_jordan(1, 7, 5) == make_jordan({7}));
    // Char 0 Clebsch-Gordan survives when p is large enough.
    CHECK(tensor_jordan(3, 2, 7) == make_jordan({4, 2}));
    CHECK(tensor_jordan(3, 3, 7) == make_jordan({5, 3, 1}));

    CHECK_THROWS_AS(tensor_jordan(0, 2, 3), precondition_error);
    CHECK_THROWS_AS(tensor_jordan(2, 2, 6), precondition_error);
}

TEST_CASE("two nontrivial tensor blocks except the one small exception") {
    // For all 2 <= n <= m <= 12 and the first six primes, J_m (x) J_n has
    // at least two blocks of size > 1, except exactly m = n = 2 with p
    // odd. Conservation and symmetry ride along for free.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        for (long m = 2; m <= 12; ++m) {
            for (long n = 2; n <= m; ++n) {
                JordanType t = tensor_jordan(m, n, p);
                CHECK(t.total == m * n);
                if (n < m) CHECK(tensor_jordan(n, m, p) == t);
                std::size_t big = 0;
                for (long b : t.blocks)
                    if (b > 1) ++big;
                bool exception = m == 2 && n == 2 && p != 2;
                CHECK((big >= 2) == !exception);
            }
        }
    }
}

TEST_CASE("tensoring with a full p-power block gives a free module") {
    // When m is a power of p the single block J_m is the regular module of
    // the cyclic group its element generates, so J_m (x) J_n is free of
    // rank n as long as n <= m keeps the element's order at m.
    for (long p : {2L, 3L, 5L}) {
        for (long m : {p, p * p}) {
            if (m > 12) continue;
            for (long n = 1; n <= m; ++n) {
                std::vector<long> expect(static_cast<std::size_t>(n), m);
                CHECK(tensor_jordan(m, n, p) == make_jordan(expect));
            }
        }
    }
    // Divisibility alone is not enough, and neither is n <= m alone: the
    // hypothesis really is "power of p" and "n <= m".
    CHECK(tensor_jordan(6, 3, 2) == make_jordan({8, 6, 4}));
    CHECK(tensor_jordan(12, 5, 3) == make_jordan({15, 15, 12, 9, 9}));
    CHECK(tensor_jordan(4, 6, 2) == make_jordan({8, 8, 4, 4}));
}

TEST_CASE("block counting predicates and element orders") {
    CHECK(single_nontrivial_block(make_jordan({7})));
    CHECK_FALSE(single_nontrivial_block(make_jordan({5, 2})));
    CHECK(single_nontrivial_block(make_jordan({3, 1, 1})));
    CHECK(single_nontrivial_block(JordanType{}));

    CHECK(unipotent_order(make_jordan({7}), 5) == 25);
    CHECK(unipotent_order(make_jordan({1, 1, 1}), 7) == 1);
    CHECK(unipotent_order(make_jordan({4, 2}), 2) == 4);
    CHECK(unipotent_order(make_jordan({9}), 3) == 9);
    CHECK(unipotent_order(make_jordan({10}), 3) == 27);

    // The claimed order is the actual matrix order on a direct witness.
    for (long p : {2L, 3L, 5L}) {
        FpMat u = block_matrix({6, 3}, p);
        long ord = unipotent_order(jordan_type(u), p);
        FpMat pw = FpMat::identity(p, u.rows());
        for (long i = 0; i < ord; ++i) {
            if (i > 0) CHECK(pw != FpMat::identity(p, u.rows()));
            pw = pw.mul(u);
        }
        CHECK(pw == FpMat::identity(p, u.rows()));
    }
}

TEST_CASE("dimension bound arithmetic") {
    for (long l : {2L, 4L, 6L, 7L, 8L})
        CHECK(dimension_bound({2, 1, l, false}) == 2 * (l + 3));
    CHECK(dimension_bound({2, 1, 4, true}) == 16);
    CHECK(dimension_bound({2, 2, 4, true}) == 32);
    for (long l : {2L, 4L, 6L, 7L, 8L})
        CHECK(dimension_bound({3, 1, l, false}) == 6 * (l + 3));
    CHECK(dimension_bound({11, 1, 4, false}) == 770);
    CHECK(dimension_bound({5, 0, 2, false}) == 20);
    CHECK(dimension_bound({5, 1, 2, false}) == 100);

    CHECK_THROWS_AS(dimension_bound({4, 1, 2, false}), precondition_error);
    CHECK_THROWS_AS(dimension_bound({2, -1, 2, false}), precondition_error);
    CHECK_THROWS_AS(dimension_bound({2, 1, 3, false}), precondition_error);
}

TEST_CASE("rank method agrees with the kernel chain oracle on conjugates") {
    std::mt19937_64 rng(20240817);
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 100; ++trial) {
        long p = primes[rng() % 6];
        // Random partition with total at most 30.
        std::vector<long> parts;
        long budget = 2 + static_cast<long>(rng() % 29);
        while (budget > 0) {
            long b = 1 + static_cast<long>(rng() % static_cast<unsigned long>(budget));
            parts.push_back(b);
            budget -= b;
        }
        JordanType expect = make_jordan(parts);
        FpMat u = block_matrix(expect.blocks, p);
        std::size_t n = u.rows();

        // Conjugate by a random invertible matrix.
        FpMat g(p, n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    g.at(i, j) = static_cast<long>(rng() % static_cast<unsigned long>(p));
        } while (g.rank() < n);
        FpMat v = g.mul(u).mul(inverse_of(g));

        CHECK(jordan_type(v) == expect);
        CHECK(kernel_chain_oracle(v) == expect);
    }
}

TEST_CASE("one block for the product of simple lowering elements") {
    // On the 7-dimensional module in characteristic 7 the product of the
    // two negative simple root elements is a full regular unipotent: a
    // single Jordan block of size 7.
    RootDatum g2 = RootDatum::build('G', 2);
    ModularModule mod = irreducible_head_mod_p(construct_weyl_module(g2, {1, 0}, 100), 7);
    REQUIRE(mod.dim == 7);
    FpMat u = root_element(mod, {-1, 0}, 1).mul(root_element(mod, {0, -1}, 1));
    JordanType t = jordan_type(u);
    CHECK(t == make_jordan({7}));
    CHECK(single_nontrivial_block(t));
    CHECK(unipotent_order(t, 7) == 7);
}
