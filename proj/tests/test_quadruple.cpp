#include <doctest.h>

#include <random>
#include <sstream>

#include "cgd/quadruple.hpp"
#include "oracles.hpp"

using namespace cgd;

namespace {

// digit-by-digit check of the admissibility conditions
bool admissible_by_hand(int N, Int sigma, Int delta, Int p) {
    const Int limit = oracle::pow_int(p, N + 1) - oracle::pow_int(p, N);
    if (sigma < 0 || delta < 0 || sigma >= limit || delta >= limit) return false;
    for (int i = 0; i < N; ++i) {
        if (oracle::digit(sigma, p, i) + oracle::digit(delta, p, i) > p - 1) return false;
    }
    return oracle::digit(sigma, p, N) + oracle::digit(delta, p, N) < p - 1;
}

}  // namespace

TEST_CASE("admissible triples") {
    for (Int p : {2, 3, 5, 7}) {
        CHECK(is_admissible_triple(0, 0, 0, Prime(p)));
        CHECK_FALSE(is_admissible_triple(0, p - 1, 0, Prime(p)));
    }
    std::mt19937_64 rng(7);
    for (Int p : {2, 3, 5}) {
        for (int N = 0; N <= 3; ++N) {
            const Int top = oracle::pow_int(p, N + 2);
            std::uniform_int_distribution<Int> d(0, top);
            for (int k = 0; k < 3000; ++k) {
                const Int s = d(rng);
                const Int t = d(rng);
                REQUIRE(is_admissible_triple(N, s, t, Prime(p)) == admissible_by_hand(N, s, t, p));
            }
        }
    }
}

TEST_CASE("base case of the recursion") {
    for (Int p : {3, 5, 7}) {
        for (Int r = 0; r <= 60; ++r) {
            for (Int t = r % 2; t <= r; t += 2) {
                const Int u0 = ((r - t) / 2) % p;
                const Quadruple base{0, t, u0, {}};
                CHECK(is_quadruple_for(base, r, t, Prime(p)) == (t + u0 < p - 1));
            }
        }
    }
}

TEST_CASE("solve examples") {
    CHECK(solve(4, 2, Prime(5)) == Quadruple{0, 2, 1, {}});
    CHECK(solve_by_enumeration(4, 2, Prime(5)) == std::vector<Quadruple>{{0, 2, 1, {}}});
    for (Int p : {3, 5, 7}) {
        for (Int t = 0; t < p - 1; ++t) CHECK(solve(t, t, Prime(p)) == Quadruple{0, t, 0, {}});
        // r_0 = t_0 = p - 1 puts a zero in the bottom digit of sigma and delta
        const Quadruple q = solve_recursive(3 * p - 1, p - 1, Prime(p));
        CHECK(q.sigma % p == 0);
        CHECK(q.delta % p == 0);
    }
    CHECK_THROWS_AS(solve_by_enumeration(5, 2, Prime(3)), DomainError);
    CHECK_THROWS_AS(solve_by_enumeration(2, 4, Prime(3)), DomainError);
    CHECK_THROWS_AS(solve_recursive(4, 2, Prime(2)), UnsupportedRecursion);
    CHECK_THROWS_AS(solve(-2, 0, Prime(3)), DomainError);
}

TEST_CASE("enumeration: one quadruple, and it satisfies both conditions") {
    for (Int p : {2, 3, 5}) {
        for (Int r = 0; r <= 120; ++r) {
            for (Int t = r % 2; t <= r; t += 2) {
                const auto all = solve_by_enumeration(r, t, Prime(p));
                REQUIRE(all.size() == 1);
                const Quadruple& q = all.front();
                REQUIRE(is_quadruple_for(q, r, t, Prime(p)));
                REQUIRE(is_admissible_quadruple(q, Prime(p)));
                REQUIRE(solve(r, t, Prime(p)) == q);
                // condition (1) by hand
                const Int pN = oracle::pow_int(p, q.N);
                Int sI = 0;
                for (int i : q.I) sI += oracle::pow_int(p, i) * oracle::digit(q.sigma, p, i);
                REQUIRE(t == pN - 1 + q.sigma - 2 * sI);
                // condition (2) by hand
                const Int mod = 2 * pN * p;
                REQUIRE(((r - (pN - 1) - q.sigma - 2 * q.delta) % mod + mod) % mod == 0);
            }
        }
    }
}

TEST_CASE("recursion agrees with enumeration") {
    for (Int p : {3, 5, 7, 11}) {
        for (Int r = 0; r <= 150; ++r) {
            for (Int t = r % 2; t <= r; t += 2) {
                REQUIRE(solve_recursive(r, t, Prime(p)) == solve_by_enumeration(r, t, Prime(p)).front());
            }
        }
    }
}

TEST_CASE("odd p: the congruence mod p^{N+1} already fixes the one mod 2p^{N+1}") {
    for (Int p : {3, 5, 7}) {
        for (Int r = 0; r <= 80; ++r) {
            for (Int t = r % 2; t <= r; t += 2) {
                const Quadruple q = solve(r, t, Prime(p));
                const Int pN1 = oracle::pow_int(p, q.N + 1);
                const Int s = oracle::pow_int(p, q.N) - 1 + q.sigma;
                // 2 is a unit mod p^{N+1}, so the weaker congruence pins delta down
                // and the parity of r - s - 2 delta takes care of the factor 2
                Int hits = 0;
                for (Int d = 0; d < pN1; ++d) {
                    if (((r - s - 2 * d) % pN1 + pN1) % pN1 == 0) {
                        ++hits;
                        REQUIRE(d == q.delta);
                    }
                }
                REQUIRE(hits == 1);
                REQUIRE((r - s) % 2 == 0);
            }
        }
    }
}

TEST_CASE("quadruple printing") {
    std::ostringstream os;
    os << Quadruple{1, 3, 0, {0}};
    CHECK(os.str() == "(N=1, sigma=3, delta=0, I={0})");
}
