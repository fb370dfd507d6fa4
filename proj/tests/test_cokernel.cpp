#include <doctest.h>

#include <random>

#include "coincal/cokernel.hpp"
#include "coincal/smith.hpp"
#include "support/oracles.hpp"

using coincal::cardinality;
using coincal::cokernel;
using coincal::CokernelStructure;
using coincal::ExtendedNat;
using coincal::IntMatrix;

TEST_CASE("extended naturals order and formatting") {
    auto two = ExtendedNat::finite(2);
    auto six = ExtendedNat::finite(6);
    auto inf = ExtendedNat::infinity();
    CHECK(two < six);
    CHECK(six < inf);
    CHECK(inf == ExtendedNat::infinity());
    CHECK(two.str() == "2");
    CHECK(inf.str() == "inf");
    CHECK_THROWS_AS(ExtendedNat::finite(-1), std::invalid_argument);
    CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("cokernel structure on the named examples") {
    SUBCASE("diag(1,2,3)") {
        // Z/2 x Z/3 = Z/6, and the canonical divisibility chain is (6):
        // the 2x2 determinantal divisor gcd(2, 3, 6) is already 1.
        auto c = cokernel(IntMatrix::diagonal({1, 2, 3}));
        CHECK(c.free_rank == 0);
        CHECK(c.torsion_factors == std::vector<mpz_class>{6});
        CHECK(cardinality(c) == ExtendedNat::finite(6));
    }
    SUBCASE("diag(2,4) keeps a genuine two-step chain") {
        auto c = cokernel(IntMatrix::diagonal({2, 4}));
        CHECK(c.free_rank == 0);
        CHECK(c.torsion_factors == std::vector<mpz_class>{2, 4});
        CHECK(cardinality(c) == ExtendedNat::finite(8));
    }
    SUBCASE("1x2 row (4 6)") {
        auto c = cokernel(IntMatrix::from_rows({{4, 6}}));
        CHECK(c.free_rank == 0);
        CHECK(c.torsion_factors == std::vector<mpz_class>{2});
    }
    SUBCASE("zero map to Z") {
        auto c = cokernel(IntMatrix::from_rows({{0}}));
        CHECK(c.free_rank == 1);
        CHECK(c.torsion_factors.empty());
        CHECK(cardinality(c).is_infinite());
    }
    SUBCASE("degenerate shapes") {
        auto full = cokernel(IntMatrix(3, 0));  // map from the trivial group
        CHECK(full.free_rank == 3);
        auto trivial = cokernel(IntMatrix(0, 3));  // map to the trivial group
        CHECK(trivial.free_rank == 0);
        CHECK(cardinality(trivial) == ExtendedNat::finite(1));
    }
}

TEST_CASE("cardinality cases") {
    CokernelStructure c;
    c.free_rank = 0;
    c.torsion_factors = {2, 3};
    CHECK(cardinality(c) == ExtendedNat::finite(6));
    c.free_rank = 1;
    CHECK(cardinality(c).is_infinite());
    c.free_rank = 0;
    c.torsion_factors.clear();
    CHECK(cardinality(c) == ExtendedNat::finite(1));
}

TEST_CASE("reidemeister count for torus targets") {
    CHECK(coincal::reidemeister_count(IntMatrix::diagonal({1, 2, 3})) ==
          ExtendedNat::finite(6));
    CHECK(coincal::reidemeister_count(IntMatrix(1, 2)).is_infinite());
    CHECK(coincal::reidemeister_count(IntMatrix::from_rows({{1}})) ==
          ExtendedNat::finite(1));
}

TEST_CASE("cardinality matches coset enumeration") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> rows(1, 3);
    std::uniform_int_distribution<std::size_t> cols(1, 4);
    int finite_checked = 0;
    int infinite_checked = 0;
    for (int iter = 0; iter < 400 && (finite_checked < 120 || infinite_checked < 20);
         ++iter) {
        auto a = oracle::random_matrix(rng, rows(rng), cols(rng), -6, 6);
        auto expected = oracle::coset_count(a, 2'000'000);
        if (!expected) continue;  // enumeration too large for the oracle
        const ExtendedNat actual = cardinality(cokernel(a));
        CHECK(actual == *expected);
        if (expected->is_infinite())
            ++infinite_checked;
        else
            ++finite_checked;
    }
    CHECK(finite_checked >= 120);
    CHECK(infinite_checked >= 20);
}

TEST_CASE("cokernel is invariant under unimodular basis changes") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::size_t> rows(1, 4);
    std::uniform_int_distribution<std::size_t> cols(1, 4);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t r = rows(rng);
        const std::size_t c = cols(rng);
        auto a = oracle::random_matrix(rng, r, c, -9, 9);
        auto u = oracle::random_unimodular(rng, r, 12);
        auto v = oracle::random_unimodular(rng, c, 12);
        CHECK(cokernel(u * a) == cokernel(a));
        CHECK(cokernel(a * v) == cokernel(a));
        CHECK(cokernel(u * a * v) == cokernel(a));
    }
}

TEST_CASE("torsion factors form a divisibility chain above 1") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int iter = 0; iter < 100; ++iter) {
        auto a = oracle::random_matrix(rng, size(rng), size(rng), -20, 20);
        auto c = cokernel(a);
        CHECK(c.free_rank == a.rows() - coincal::rank(a));
        for (const auto& t : c.torsion_factors) CHECK(t > 1);
        for (std::size_t i = 0; i + 1 < c.torsion_factors.size(); ++i)
            CHECK(c.torsion_factors[i + 1] % c.torsion_factors[i] == 0);
    }
}
