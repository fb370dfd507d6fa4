#include <doctest.h>

#include <random>

#include "coincal/cokernel.hpp"
#include "coincal/smith.hpp"
#include "coincal/torus.hpp"
#include "coincal/validate.hpp"
#include "support/oracles.hpp"

using coincal::circle_invariants;
using coincal::cup_product_nonzero_torus;
using coincal::ExtendedNat;
using coincal::IntMatrix;
using coincal::InvariantValue;
using coincal::torus_invariants;
using coincal::TorusInstance;

namespace {

const ExtendedNat kZero = ExtendedNat::finite(0);

bool all_known(const coincal::InvariantReport& rep, const ExtendedNat& v) {
    return rep.n_num == InvariantValue::known(v) &&
           rep.n_sharp == InvariantValue::known(v) &&
           rep.mcc == InvariantValue::known(v) && rep.mc == InvariantValue::known(v);
}

}  // namespace

TEST_CASE("cup product test on the named examples") {
    CHECK(cup_product_nonzero_torus(IntMatrix::identity(3), 3, 3));
    CHECK_FALSE(cup_product_nonzero_torus(IntMatrix::from_rows({{1, 2}, {2, 4}}), 2, 2));
    // 3x4 of rank 3.
    auto wide = IntMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(cup_product_nonzero_torus(wide, 4, 3));
    // More classes than the domain dimension supports.
    CHECK_FALSE(cup_product_nonzero_torus(IntMatrix(3, 2), 2, 3));
}

TEST_CASE("cup product test agrees with the exterior-algebra expansion") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<std::size_t> nn(1, 3);
    std::uniform_int_distribution<std::size_t> extra(0, 3);
    for (int iter = 0; iter < 120; ++iter) {
        const std::size_t n = nn(rng);
        const std::size_t m = n + extra(rng);
        auto d = oracle::random_matrix(rng, n, m, -4, 4);

        auto coeffs = oracle::wedge_rows(d);
        bool product_nonzero = false;
        for (const auto& [mask, coeff] : coeffs)
            if (coeff != 0) product_nonzero = true;
        CHECK(cup_product_nonzero_torus(d, m, n) == product_nonzero);

        // The coefficient on each top monomial is the corresponding minor.
        std::vector<std::size_t> all_rows(n);
        for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
        for (const auto& cols : oracle::subsets(m, n)) {
            std::uint32_t mask = 0;
            for (auto c : cols) mask |= 1u << c;
            const mpz_class expected = oracle::cofactor_det(d.submatrix(all_rows, cols));
            auto it = coeffs.find(mask);
            const mpz_class got = it == coeffs.end() ? mpz_class(0) : it->second;
            CHECK(got == expected);
        }
    }
}

TEST_CASE("torus decision tree on the named examples") {
    SUBCASE("rank-deficient: everything vanishes") {
        TorusInstance inst;
        inst.m = 4;
        inst.n = 3;
        inst.d = IntMatrix::from_rows(
            {{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}});  // rank 2
        REQUIRE(coincal::rank(inst.d) == 2);
        auto rep = torus_invariants(inst);
        CHECK(all_known(rep, kZero));
        CHECK(rep.reidemeister == ExtendedNat::infinity());
    }
    SUBCASE("full rank, m > n") {
        TorusInstance inst;
        inst.m = 4;
        inst.n = 3;
        inst.d = IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}});
        REQUIRE(coincal::smith_normal_form(inst.d).factors ==
                std::vector<mpz_class>{1, 1, 2});
        auto rep = torus_invariants(inst);
        auto two = ExtendedNat::finite(2);
        CHECK(rep.n_num == InvariantValue::known(two));
        CHECK(rep.n_sharp == InvariantValue::known(two));
        CHECK(rep.mcc == InvariantValue::known(two));
        CHECK(rep.mc == InvariantValue::known(ExtendedNat::infinity()));
    }
    SUBCASE("full rank, m = n") {
        TorusInstance inst;
        inst.m = 3;
        inst.n = 3;
        inst.d = IntMatrix::diagonal({1, 2, 3});
        auto rep = torus_invariants(inst);
        auto six = ExtendedNat::finite(6);
        CHECK(rep.n_num == InvariantValue::known(six));
        CHECK(rep.n_sharp == InvariantValue::known(six));
        CHECK(rep.mcc == InvariantValue::known(six));
        CHECK(rep.mc.status() == InvariantValue::Status::bounded);
        CHECK(*rep.mc.lower() == six);
        CHECK(rep.mc.upper()->is_infinite());
    }
    SUBCASE("n = 2 withholds the MCC equality") {
        TorusInstance inst;
        inst.m = 2;
        inst.n = 2;
        inst.d = IntMatrix::diagonal({2, 2});
        auto rep = torus_invariants(inst);
        auto four = ExtendedNat::finite(4);
        CHECK(rep.n_num == InvariantValue::known(four));
        CHECK(rep.n_sharp == InvariantValue::known(four));
        CHECK(rep.mcc.status() == InvariantValue::Status::bounded);
        CHECK(*rep.mcc.lower() == four);
        CHECK(rep.mcc.upper()->is_infinite());
    }
    SUBCASE("non-torus domain of full rank is honest about its limits") {
        TorusInstance inst;
        inst.m = 5;
        inst.n = 2;
        inst.d = IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}});
        inst.domain_is_torus = false;
        auto rep = torus_invariants(inst);
        CHECK(rep.n_num.status() == InvariantValue::Status::bounded);
        CHECK(*rep.n_num.lower() == kZero);
        CHECK(*rep.n_num.upper() == ExtendedNat::finite(6));
        CHECK(rep.mcc.is_unknown());
        CHECK(rep.mc.is_unknown());
    }
    SUBCASE("shape mismatches are rejected") {
        TorusInstance inst;
        inst.m = 2;
        inst.n = 3;
        inst.d = IntMatrix(2, 2);
        CHECK_THROWS_AS(torus_invariants(inst), std::invalid_argument);
        inst.n = 2;
        inst.m = 3;  // torus domain with d.cols != m
        CHECK_THROWS_AS(torus_invariants(inst), std::invalid_argument);
    }
}

TEST_CASE("circle special case") {
    SUBCASE("row (4 6), m = 2") {
        auto rep = circle_invariants(IntMatrix::from_rows({{4, 6}}), 2);
        auto two = ExtendedNat::finite(2);
        CHECK(rep.mcc == InvariantValue::known(two));
        CHECK(rep.n_num == InvariantValue::known(two));
        CHECK(rep.n_sharp == InvariantValue::known(two));
        CHECK(rep.mc == InvariantValue::known(ExtendedNat::infinity()));
        CHECK(rep.reidemeister == two);
    }
    SUBCASE("zero row: homotopic maps") {
        auto rep = circle_invariants(IntMatrix(1, 2), 5);
        CHECK(all_known(rep, kZero));
        CHECK(rep.reidemeister == ExtendedNat::infinity());
    }
    SUBCASE("row (1), m = 1") {
        auto rep = circle_invariants(IntMatrix::from_rows({{1}}), 1);
        auto one = ExtendedNat::finite(1);
        CHECK(rep.mcc == InvariantValue::known(one));
        CHECK(rep.mc.status() == InvariantValue::Status::bounded);
        CHECK(*rep.mc.lower() == one);
        CHECK(rep.mc.upper()->is_infinite());
    }
    SUBCASE("input must be a single row") {
        CHECK_THROWS_AS(circle_invariants(IntMatrix(2, 2), 2), std::invalid_argument);
    }
}

TEST_CASE("equivalence of the three finiteness criteria") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> nn(1, 4);
    std::uniform_int_distribution<std::size_t> extra(0, 2);
    std::uniform_int_distribution<int> deficient(0, 2);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = nn(rng);
        const std::size_t m = n + extra(rng);
        auto d = oracle::random_matrix(rng, n, m, -5, 5);
        if (deficient(rng) == 0 && n >= 2) {
            // Force a rank drop by overwriting a row with a multiple of another.
            for (std::size_t j = 0; j < m; ++j) d(0, j) = 2 * d(n - 1, j);
        }
        const bool by_rank = coincal::rank(d) == n;
        const bool by_minor = cup_product_nonzero_torus(d, m, n);
        const bool by_cokernel = coincal::cardinality(coincal::cokernel(d)).is_finite();
        CHECK(by_rank == by_minor);
        CHECK(by_minor == by_cokernel);
    }
}

TEST_CASE("vanishing branch emits the zero report") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<std::size_t> nn(2, 4);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = nn(rng);
        const std::size_t m = n + 1;
        auto d = oracle::random_matrix(rng, n, m, -4, 4);
        for (std::size_t j = 0; j < m; ++j) d(0, j) = d(n - 1, j);  // rank < n
        TorusInstance inst{m, n, d, true};
        auto rep = torus_invariants(inst);
        CHECK(all_known(rep, kZero));
    }
}

TEST_CASE("swapping the two maps negates d and changes nothing") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<std::size_t> nn(1, 3);
    std::uniform_int_distribution<std::size_t> extra(0, 2);
    for (int iter = 0; iter < 80; ++iter) {
        const std::size_t n = nn(rng);
        const std::size_t m = n + extra(rng);
        auto d = oracle::random_matrix(rng, n, m, -6, 6);
        TorusInstance inst{m, n, d, true};
        TorusInstance swapped{m, n, -d, true};
        CHECK(torus_invariants(inst) == torus_invariants(swapped));
    }
}

TEST_CASE("reidemeister bound holds whenever n != 2 and values are known") {
    std::mt19937 rng(616);
    std::uniform_int_distribution<std::size_t> nn(1, 3);
    std::uniform_int_distribution<std::size_t> extra(0, 2);
    for (int iter = 0; iter < 80; ++iter) {
        std::size_t n = nn(rng);
        if (n == 2) n = 3;
        const std::size_t m = n + extra(rng);
        auto d = oracle::random_matrix(rng, n, m, -5, 5);
        auto rep = torus_invariants(TorusInstance{m, n, d, true});
        REQUIRE(rep.reidemeister.has_value());
        if (rep.mcc.is_known()) CHECK(rep.mcc.value() <= *rep.reidemeister);
        // The full validator agrees.
        CHECK(coincal::validate_chain(rep, n, false).ok);
    }
}
