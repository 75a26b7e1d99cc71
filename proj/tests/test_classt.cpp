#include "doctest.h"
#include "pdef/classt.hpp"
#include "pdef/stevens.hpp"

using namespace pdef;

TEST_CASE("class T certificates") {
    auto c = is_class_t({4});
    REQUIRE(c);
    CHECK(c->d == 1);
    CHECK(c->n == 2);
    CHECK(c->a == 1);
    auto t = is_class_t({3, 3});
    REQUIRE(t);
    CHECK(t->d == 2);
    CHECK(t->n == 2);
    auto w = is_class_t({2, 5});
    REQUIRE(w);
    CHECK(w->wahl());
    CHECK(w->derivation.front() == Chain{4});
    CHECK(w->derivation.back() == Chain{2, 5});
    auto l = is_class_t({3, 2, 2, 3});
    REQUIRE(l);
    CHECK(l->d == 4);
    CHECK_FALSE(is_class_t({2, 2}));
    CHECK_FALSE(is_class_t({3}));
    CHECK_FALSE(is_class_t({2, 4}));
    CHECK(is_wahl({2, 2, 6}));
    CHECK(is_wahl({3, 2, 6, 2}));
    CHECK_FALSE(is_wahl({3, 2, 2, 3}));
    CHECK(is_class_t_chain({3, 2, 2, 3}));
}

TEST_CASE("certificate matches the fraction d n^2 / (d n a - 1)") {
    for (const auto& ch : enumerate_wahl(7)) {
        auto c = is_class_t(ch);
        REQUIRE(c);
        auto v = hj_eval(ch);
        CHECK(v.value == Rational(c->d * c->n * c->n, c->d * c->n * c->a - 1));
    }
}

TEST_CASE("Wahl chains double with each length") {
    auto ws = enumerate_wahl(6);
    std::map<std::size_t, int> by_len;
    for (const auto& w : ws) ++by_len[w.size()];
    CHECK(by_len[1] == 1);
    for (std::size_t r = 2; r <= 6; ++r) CHECK(by_len[r] == 1 << (r - 1));
}

TEST_CASE("two routes to the discrepancies agree") {
    for (const auto& w : enumerate_wahl(9)) {
        auto a = discrepancies(w);
        auto b = discrepancies_adjunction(w);
        REQUIRE(a == b);
        for (const auto& m : a) {
            CHECK(m > -1);
            CHECK(m < 0);
        }
    }
    CHECK(discrepancies({4}) == std::vector<Rational>{Rational(-1, 2)});
    CHECK(delta_sequence({2, 5}) == std::vector<long long>{2, 1});
}

TEST_CASE("ampleness on the P-resolutions of 19/11") {
    for (const auto& p : chain_presolutions({2, 4, 3}, 3)) CHECK(ample_check(p.to_presolution()).ample);
    // [2,5] -1 [4] without the marks: the (-1)-curve has K.E = -1
    ChainPResolution bare{{-2, -5, -1, -4}, {0, 1, -1, 2}, {}};
    CHECK_FALSE(ample_check(bare.to_presolution()).ample);
    ChainPResolution touching{{-4, -4}, {0, 1}, {{0, 1}, {1, 2}}};
    CHECK_FALSE(ample_check(touching.to_presolution()).error.empty());
    ChainPResolution not_t{{-2, -4, -3}, {0, 1, 2}, {{0, 2}}};
    CHECK_FALSE(ample_check(not_t.to_presolution()).error.empty());
}

TEST_CASE("bounds: what holds and what does not") {
    // tail identity m_r = -(m_1 + 1)
    for (const auto& w : enumerate_wahl(8))
        for (const auto& b : bound_checks(w))
            if (b.lemma == "head-tail") CHECK(b.holds);
    // the head bound fails on [n+4, 2, ..., 2]
    for (int n = 1; n <= 6; ++n) {
        Chain w{n + 4};
        w.insert(w.end(), n, 2);
        REQUIRE(is_wahl(w));
        for (const auto& b : bound_checks(w))
            if (b.lemma == "head") {
                CHECK(b.applicable);
                CHECK_FALSE(b.holds);
            }
    }
    // its mirror [2, ..., 2, n+4] sits on the leading-twos bound, outside the hypotheses
    for (int n = 1; n <= 6; ++n) {
        Chain w(n, 2);
        w.push_back(n + 4);
        for (const auto& b : bound_checks(w))
            if (b.lemma == "leading-twos") {
                CHECK_FALSE(b.applicable);
                CHECK(b.value == b.bound);
            }
    }
    auto m = discrepancies({5, 2});
    CHECK(m[0] == Rational(-2, 3));
}
