#include <doctest.h>

#include <algorithm>

#include "cgd/basep.hpp"
#include "oracles.hpp"

using namespace cgd;

TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(Prime(4), InvalidPrime);
    CHECK_THROWS_AS(Prime(0), InvalidPrime);
    CHECK_THROWS_AS(Prime(-3), InvalidPrime);
    CHECK_THROWS_AS(Prime(kMaxPrime + 1), InvalidPrime);
    CHECK(Prime(3).is_odd());
    CHECK_FALSE(Prime(2).is_odd());
}

TEST_CASE("digits") {
    CHECK(digits(0, Prime(5)).digits.empty());
    CHECK(digits(7, Prime(2)).digits == std::vector<int>{1, 1, 1});
    CHECK(digits(2, Prime(3)).digits == std::vector<int>{2});
    CHECK(digits(2, Prime(3)).digit(5) == 0);
    CHECK_THROWS_AS(digits(-1, Prime(3)), DomainError);
    for (Int p : {2, 3, 5, 7}) {
        for (Int n = 0; n < 2000; ++n) {
            const Digits d = digits(n, Prime(p));
            for (int i = 0; i < 6; ++i) REQUIRE(d.digit(i) == oracle::digit(n, p, i));
        }
    }
}

TEST_CASE("ipow overflow") {
    CHECK(ipow(3, 4) == 81);
    CHECK(ipow(7, 0) == 1);
    CHECK_THROWS_AS(ipow(2, 64), DomainError);
    CHECK_THROWS_AS(standard_form(kMaxWeight, Prime(3)), DomainError);
}

TEST_CASE("standard form examples") {
    auto sf = standard_form(2, Prime(3));
    CHECK(sf.N == 1);
    CHECK(sf.sigma.value == 0);
    sf = standard_form(2, Prime(5));
    CHECK(sf.N == 0);
    CHECK(sf.sigma.value == 2);
    sf = standard_form(1, Prime(2));
    CHECK(sf.N == 1);
    CHECK(sf.sigma.value == 0);
    for (Int p : {2, 3, 5, 7}) {
        CHECK(standard_form(0, Prime(p)).N == 0);
        CHECK(standard_form(0, Prime(p)).sigma.value == 0);
    }
}

TEST_CASE("standard form matches brute force search") {
    for (Int p : {2, 3, 5, 7, 11}) {
        for (Int r = 0; r <= 3000; ++r) {
            const auto [N, sigma] = oracle::standard_form(r, p);
            const StandardForm sf = standard_form(r, Prime(p));
            REQUIRE(sf.N == N);
            REQUIRE(sf.sigma.value == sigma);
            // the top digit never reaches p - 1
            REQUIRE(sf.sigma.digit(static_cast<std::size_t>(N)) <= p - 2);
        }
    }
}

TEST_CASE("sigma_subset") {
    const Digits s3 = digits(2, Prime(3));
    CHECK(sigma_subset(s3, {}) == 0);
    CHECK(sigma_subset(s3, {0}) == 2);
    const Digits s5 = digits(1 + 2 * 5, Prime(5));
    CHECK(sigma_subset(s5, {1}) == 10);
    CHECK(sigma_subset(s5, {0, 1}) == 11);
    CHECK(sigma_subset(s5, {4}) == 0);
}

TEST_CASE("support") {
    CHECK(support(2, Prime(3)).indices.empty());
    CHECK(support(2, Prime(5)).indices.empty());
    for (Int p : {3, 5, 7, 11}) CHECK(support(p + 1, Prime(p)).indices == IndexSet{0});
    for (Int p : {2, 3, 5}) {
        for (Int m = 0; m <= 500; ++m) {
            const auto [N, sigma] = oracle::standard_form(m, p);
            IndexSet want;
            for (int i = 0; i < N; ++i)
                if (oracle::digit(sigma, p, i) != 0) want.push_back(i);
            REQUIRE(support(m, Prime(p)).indices == want);
        }
    }
}

TEST_CASE("subset order: sigma comparison equals the max rule") {
    for (Int p : {2, 3, 5}) {
        for (Int m = 0; m <= 500; ++m) {
            const StandardForm sf = standard_form(m, Prime(p));
            const auto subs = all_subsets(support(m, Prime(p)).indices);
            REQUIRE(subs.size() == (std::size_t{1} << support(m, Prime(p)).indices.size()));
            for (const IndexSet& I : subs) {
                CHECK(subset_leq({}, I, sf.sigma));
                CHECK(subset_leq(I, I, sf.sigma));
                for (const IndexSet& J : subs) REQUIRE(subset_leq(I, J, sf.sigma) == subset_leq_by_max(I, J));
            }
        }
    }
}

TEST_CASE("subset helpers") {
    CHECK(is_subset_of({0, 2}, {0, 1, 2}));
    CHECK_FALSE(is_subset_of({2, 0}, {0, 1, 2}));
    CHECK_FALSE(is_subset_of({3}, {0, 1, 2}));
    CHECK_FALSE(is_subset_of({1, 1}, {0, 1, 2}));
    CHECK(all_subsets({}).size() == 1);
    auto subs = all_subsets({1, 4});
    std::sort(subs.begin(), subs.end());
    CHECK(subs == std::vector<IndexSet>{{}, {1}, {1, 4}, {4}});
}
