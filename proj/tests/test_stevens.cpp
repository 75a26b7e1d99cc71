#include "doctest.h"
#include "pdef/incidence.hpp"
#include "pdef/mmp.hpp"
#include "pdef/stevens.hpp"
#include "reference_data.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace pdef;

TEST_CASE("triangulation counts and the k bijection") {
    CHECK(triangulations(1).size() == 1);
    CHECK(triangulations(1)[0].triangles.empty());
    for (int s = 2; s <= 8; ++s) {
        auto ts = triangulations(s);
        CHECK(ts.size() == catalan(s - 1));
        std::set<std::vector<int>> ks;
        for (const auto& t : ts) {
            CHECK(t.triangles.size() == static_cast<std::size_t>(s - 1));
            auto k = tri_to_k(t);
            ks.insert(k);
            CHECK(k_to_tri(k) == t);
        }
        CHECK(ks == enumerate_K(s));
    }
}

TEST_CASE("k_to_tri rejects sequences outside K_s") {
    CHECK_THROWS_AS(k_to_tri({2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(k_to_tri({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(k_to_tri({1}), std::invalid_argument);
    CHECK_THROWS_AS(k_to_tri({2, 2, 2}), std::invalid_argument);
}

TEST_CASE("triangles of 19/11") {
    auto t = k_to_tri({3, 1, 2, 2});
    std::vector<std::array<int, 3>> want{{1, 2, 3}, {1, 3, 4}, {1, 4, 5}};
    CHECK(t.triangles == want);
    auto u = k_to_tri({2, 1, 3, 1});
    std::vector<std::array<int, 3>> want2{{1, 2, 3}, {3, 4, 5}, {1, 3, 5}};
    CHECK(u.triangles == want2);
}

TEST_CASE("alpha") {
    CHECK(alpha(2, {1, 2, 4}, 4) == -1);
    CHECK(alpha(1, {1, 2, 4}, 4) == 1);
    CHECK(alpha(4, {1, 2, 4}, 4) == 1);
    CHECK(alpha(3, {1, 2, 4}, 4) == 0);
    // N is not named: the middle of (1, 3, N) is 3
    CHECK(alpha(3, {1, 3, 5}, 4) == -1);
    CHECK(alpha(1, {1, 3, 5}, 4) == 1);
}

TEST_CASE("NPP matrices of 19/11") {
    Chain b{3, 2, 3, 2};
    CHECK(npp_incidence(b, {1, 2, 2, 1}, k_to_tri({1, 2, 2, 1})) == ref::npp_1221);
    CHECK(npp_incidence(b, {3, 1, 2, 2}, k_to_tri({3, 1, 2, 2})) == ref::npp_3122);
    CHECK(npp_incidence(b, {2, 1, 3, 1}, k_to_tri({2, 1, 3, 1})) == ref::npp_2131);
    // any triangle order gives the same canonical matrix
    std::mt19937 rng(7);
    for (const auto& k : enumerate_K_bounded(b)) {
        auto t = k_to_tri(k);
        auto want = canonical(npp_incidence(b, k, t));
        for (int i = 0; i < 5; ++i) {
            std::shuffle(t.triangles.begin(), t.triangles.end(), rng);
            CHECK(canonical(npp_incidence(b, k, t)) == want);
        }
    }
}

TEST_CASE("NPP matrices satisfy the incidence equations") {
    for (int n = 2; n <= 30; ++n)
        for (int q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto data = combinatorial_data(usual_sandwich_cqss(hj_expand(n, q)));
            for (const auto& p : p_resolutions_cqss(n, q)) {
                auto rep = verify(p.matrix, data);
                CHECK_MESSAGE(rep.ok, n, "/", q);
            }
        }
}

TEST_CASE("descriptor tables") {
    auto two = p_resolutions_cqss(2, 1);
    REQUIRE(two.size() == 1);
    CHECK(two[0].minimal_only);
    CHECK(two[0].matrix == Matrix{{1, 1}});
    CHECK(p_resolutions_cqss(4, 1).size() == 2);
    CHECK(p_resolutions_cqss(19, 11).size() == 3);
    CHECK_THROWS_AS(p_resolutions_cqss(6, 4), std::invalid_argument);
}

TEST_CASE("P-resolutions of 19/11 and their pairing with k") {
    auto ps = chain_presolutions({2, 4, 3}, 3);
    std::set<std::string> got;
    for (const auto& p : ps) got.insert(to_string(p));
    CHECK(got == std::set<std::string>{"-2 -4 -3", "-2 [-4] -3", "[-2 -5] -1 [-4]"});
    std::map<std::vector<int>, std::string> pair;
    for (const auto& d : p_resolutions_cqss(19, 11)) {
        auto r = realize_presolution(d);
        REQUIRE(r);
        pair[d.k] = to_string(r->presolution);
    }
    CHECK(pair[{1, 2, 2, 1}] == "-2 -4 -3");
    CHECK(pair[{2, 1, 3, 1}] == "-2 [-4] -3");
    CHECK(pair[{3, 1, 2, 2}] == "[-2 -5] -1 [-4]");
}

TEST_CASE("marks of class T with d >= 2 go through an M-resolution") {
    // 1/8(1,3) = [3,3] is of class T with d = 2
    auto ps = chain_presolutions({3, 3}, 2);
    auto it = std::find_if(ps.begin(), ps.end(), [](const auto& p) { return to_string(p) == "[-3 -3]"; });
    REQUIRE(it != ps.end());
    CHECK_FALSE(it->all_wahl());
    auto m = to_m_resolution(*it);
    REQUIRE(m);
    CHECK(to_string(*m) == "[-4] -1 [-4]");
    CHECK(m->origin == std::vector<int>{0, -1, 1});
    auto cm = canonical_model(m->to_presolution());
    CHECK(cm.res.graph.weight == std::vector<int>{-3, -3});
    CHECK(cm.res.marks.size() == 1);
}

TEST_CASE("lookup misses are empty") {
    Matrix bogus{{1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}};
    CHECK(lookup_chain({2, 4, 3}, {0, 2, 2}, bogus).empty());
}

TEST_CASE("three-way agreement for n <= 20") {
    for (int n = 2; n <= 20; ++n)
        for (int q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            Chain cf = hj_expand(n, q);
            auto st = usual_sandwich_cqss(cf);
            auto all = enumerate_all(combinatorial_data(st));
            std::set<CanonicalForm> npp, mmp;
            for (const auto& p : p_resolutions_cqss(n, q)) npp.insert(canonical(p.matrix));
            std::vector<int> counts;
            for (std::size_t j = 0; j < cf.size(); ++j) counts.push_back(j + 1 < cf.size() ? cf[j] - 2 : cf[j] - 1);
            for (const auto& r : *realizations(cf, counts, 3)) mmp.insert(canonical(r.matrix));
            CHECK_MESSAGE(std::set<CanonicalForm>(all.begin(), all.end()) == npp, n, "/", q);
            CHECK_MESSAGE(mmp == npp, n, "/", q);
            CHECK(realizations(cf, counts, 3)->size() == npp.size());
        }
}
