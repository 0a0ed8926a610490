#include <doctest.h>

#include <algorithm>
#include <functional>

#include "cgd/tilting.hpp"
#include "oracles.hpp"

using namespace cgd;

namespace {

Character sum_chi(const std::vector<Int>& ws) {
    Character c;
    for (Int w : ws) c += chi(w);
    return c;
}

}  // namespace

TEST_CASE("profile matches subset enumeration") {
    for (Int p : {2, 3, 5, 7}) {
        for (Int r = 0; r <= 400; ++r) {
            std::vector<Int> want = oracle::tilting_sections(r, p);
            std::sort(want.begin(), want.end(), std::greater<>());
            const TiltingProfile prof = tilting_profile(r, Prime(p));
            std::vector<Int> got;
            for (const Section& s : prof.sections) got.push_back(s.weight);
            REQUIRE(got == want);
            for (Int s = 0; s <= r; ++s) {
                const bool in = std::find(want.begin(), want.end(), s) != want.end();
                REQUIRE(tilting_nabla_mult(r, s, Prime(p)) == (in ? 1 : 0));
            }
        }
    }
}

TEST_CASE("tilting multiplicity examples") {
    for (Int p : {2, 3, 5, 7}) CHECK(tilting_nabla_mult(9, 9, Prime(p)) == 1);
    CHECK(tilting_nabla_mult(2, 0, Prime(3)) == 0);
    CHECK(tilting_nabla_mult(5, 7, Prime(3)) == 0);
    // r = p + 1 = (p - 1) + 2, so I = {0} drops the weight by 2 sigma_0 = 4
    for (Int p : {3, 5, 7, 11}) {
        CHECK(tilting_nabla_mult(p + 1, p - 3, Prime(p)) == (p - 3 >= 0 ? 1 : 0));
        CHECK(tilting_nabla_mult(p + 1, p - 1, Prime(p)) == 0);
    }
}

TEST_CASE("tilting characters") {
    for (Int p : {2, 3, 5, 7, 11}) {
        for (Int r = 0; r <= p - 1; ++r) CHECK(tilting_char(r, Prime(p)) == chi(r));
        CHECK(tilting_char(p, Prime(p)) == chi(p) + chi(p - 2));
        CHECK(tilting_char(2 * p - 2, Prime(p)).dimension() == 2 * p);
    }
    CHECK_THROWS_AS(tilting_char(-1, Prime(3)), DomainError);
}

TEST_CASE("truncated tilting characters") {
    for (Int p : {3, 5, 7, 11}) {
        CHECK(truncated_tilting_char(p + 1, {0}, Prime(p)) == chi(p + 1) + chi(p - 3));
        CHECK(truncated_section_weights(p + 1, {0}, Prime(p)) == std::vector<Int>{p + 1, p - 3});
    }
    for (Int p : {2, 3, 5}) {
        for (Int m = 0; m <= 300; ++m) {
            CHECK(truncated_tilting_char(m, {}, Prime(p)) == chi(m));
            CHECK(truncated_tilting_char(m, support(m, Prime(p)).indices, Prime(p)) == tilting_char(m, Prime(p)));
        }
    }
    // J <= I keeps exactly the sections m - 2 sigma_J with sigma_J <= sigma_I
    for (Int p : {2, 3, 5}) {
        for (Int m = 0; m <= 200; ++m) {
            const StandardForm sf = standard_form(m, Prime(p));
            for (const IndexSet& I : all_subsets(support(m, Prime(p)).indices)) {
                const Int floor = m - 2 * sigma_subset(sf.sigma, I);
                std::vector<Int> want;
                for (Int w : oracle::tilting_sections(m, p))
                    if (w >= floor) want.push_back(w);
                REQUIRE(truncated_tilting_char(m, I, Prime(p)) == sum_chi(want));
            }
        }
    }
    CHECK_THROWS_AS(truncated_tilting_char(2, {0}, Prime(3)), InvalidSubset);
    CHECK_THROWS_AS(truncated_section_weights(4, {1}, Prime(3)), InvalidSubset);
}

TEST_CASE("O_pi of tilting modules") {
    for (Int p : {2, 3, 5}) {
        for (Int m = 0; m <= 150; ++m) {
            const OPiSplit none = o_pi_tilting_sections(m, SaturatedSet{}, Prime(p));
            REQUIRE(none.kept.has_value());
            CHECK(*none.kept == support(m, Prime(p)).indices);
            CHECK(none.discarded.is_zero());

            const OPiSplit all = o_pi_tilting_sections(m, SaturatedSet::below(m + 1), Prime(p));
            CHECK_FALSE(all.kept.has_value());
            CHECK(all.discarded == tilting_char(m, Prime(p)));
        }
    }
    for (Int p : {3, 5, 7}) {
        const OPiSplit sp = o_pi_tilting_sections(p + 1, SaturatedSet::below(p + 1), Prime(p));
        REQUIRE(sp.kept.has_value());
        CHECK(sp.kept->empty());
        CHECK(sp.discarded == chi(p - 3));
    }
}
