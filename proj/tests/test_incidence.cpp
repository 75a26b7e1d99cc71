#include "doctest.h"
#include "pdef/incidence.hpp"
#include "pdef/stevens.hpp"
#include "reference_data.hpp"

#include <numeric>

using namespace pdef;

TEST_CASE("canonical forms ignore column order") {
    Matrix a{{1, 0, 1}, {0, 1, 1}};
    Matrix b{{1, 1, 0}, {1, 0, 1}};
    CHECK(canonical(a) == canonical(b));
    CHECK(to_matrix(canonical(a), 2) == Matrix{{1, 1, 0}, {1, 0, 1}});
    CHECK(canonical(a) == canonical(Matrix{{1, 1, 0}, {0, 1, 1}}));
    CHECK(canonical(a) != canonical(Matrix{{1, 1, 1}, {0, 0, 1}}));
}

TEST_CASE("enumeration for 19/11 gives the NPP matrices") {
    auto data = combinatorial_data(usual_sandwich_cqss({2, 4, 3}));
    auto all = enumerate_all(data);
    std::set<CanonicalForm> want{canonical(ref::npp_1221), canonical(ref::npp_3122), canonical(ref::npp_2131)};
    CHECK(std::set<CanonicalForm>(all.begin(), all.end()) == want);
    CHECK(all.size() == 3);
    for (const auto& c : all) CHECK(verify(to_matrix(c, 4), data).ok);
}

TEST_CASE("violations are named") {
    auto data = combinatorial_data(usual_sandwich_cqss({2, 4, 3}));
    Matrix m = ref::npp_1221;
    m[3][6] = 0;
    auto rep = verify(m, data);
    CHECK_FALSE(rep.ok);
    bool named = false;
    for (const auto& v : rep.violations) named = named || v.rfind("l(C4)", 0) == 0;
    CHECK(named);
    CHECK_FALSE(verify(Matrix{{1}}, data).ok);
}

TEST_CASE("the t+2 star: printed matrix breaks the equations, the corrected one is enumerated") {
    auto x = ref::star_four_twos();
    auto data = combinatorial_data(x.structure());
    auto rep = verify(ref::t2_printed, data);
    CHECK_FALSE(rep.ok);
    // two row sums and two intersection numbers
    CHECK(rep.violations.size() == 4);
    CHECK(verify(ref::t2_corrected, data).ok);
    auto all = enumerate_all(data);
    CHECK(std::find(all.begin(), all.end(), canonical(ref::t2_corrected)) != all.end());
}

TEST_CASE("orbits and row matching") {
    auto x = ref::star_abc();
    auto st = x.structure();
    auto data = combinatorial_data(st);
    auto reps = enumerate_representatives(data);
    auto all = enumerate_all(data);
    std::set<CanonicalForm> joined;
    for (const auto& r : reps) {
        auto o = orbit(r, data.groups);
        joined.insert(o.begin(), o.end());
    }
    CHECK(joined == std::set<CanonicalForm>(all.begin(), all.end()));
    // rows 2 and 3 of case_a sit on the same curve
    Matrix swapped = ref::case_a;
    std::swap(swapped[2], swapped[3]);
    CHECK(equivalent(swapped, ref::case_a, data.groups));
    auto p = matching_row_permutation(swapped, ref::case_a, data.groups);
    REQUIRE(p.size() == swapped.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(data.groups[i] == data.groups[p[i]]);
    // rows 0 and 2 do not
    Matrix wrong = ref::case_a;
    std::swap(wrong[0], wrong[2]);
    CHECK_FALSE(equivalent(wrong, ref::case_a, data.groups));
    CHECK(matching_row_permutation(wrong, ref::case_a, data.groups).empty());
}

TEST_CASE("enumeration agrees with NPP for n <= 25") {
    for (int n = 2; n <= 25; ++n)
        for (int q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            auto data = combinatorial_data(usual_sandwich_cqss(hj_expand(n, q)));
            auto all = enumerate_all(data);
            std::set<CanonicalForm> npp;
            for (const auto& p : p_resolutions_cqss(n, q)) npp.insert(canonical(p.matrix));
            CHECK_MESSAGE(std::set<CanonicalForm>(all.begin(), all.end()) == npp, n, "/", q);
        }
}

TEST_CASE("negative delta is refused") {
    CombinatorialData d;
    d.labels = {"C1"};
    d.l = {2};
    d.pair = {{0}};
    d.delta = {1};
    d.groups = {0};
    CHECK_THROWS_AS(enumerate_representatives(d), std::invalid_argument);
}

TEST_CASE("free points and all-ones columns") {
    CHECK(free_points(ref::mmp_minimal, 0) == std::vector<int>{2});
    CHECK(free_points(ref::mmp_minimal, 2) == std::vector<int>{5});
    CHECK(has_all_ones_column(ref::mmp_minimal));
    CHECK_FALSE(has_all_ones_column(ref::mmp_two));
}

TEST_CASE("types of the 19/11 matrices on the star (4; [2],[3])") {
    auto s = sandwich_whs(4, {{2}, {3}});
    // rows C1, C2, C3, C4 of the usual labelling sit on [2], the central curve, [3], [3]
    std::vector<Matrix> mats = {
        {{1, 0, 0, 0, 1, 0, 1}, {0, 1, 0, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 0, 1, 1}},
        {{1, 0, 0, 1, 0, 1}, {0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 1}, {0, 0, 1, 0, 1, 1}},
        {{1, 1, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 1, 1}}};
    std::vector<TypeTag> want{TypeTag::Type1, TypeTag::Type2_2, TypeTag::Type2_2};
    auto data = combinatorial_data(s);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const Matrix& m = mats[i];
        Matrix ours{m[0], m[2], m[3], m[1]};
        REQUIRE(verify(ours, data).ok);
        auto t = classify_cqss_type(ours, s);
        CHECK(t.tag == want[i]);
        if (t.tag != TypeTag::Type1) {
            CHECK(t.branch >= 0);
            CHECK_FALSE(t.R.empty());
        }
    }
    CHECK_THROWS_AS(classify_cqss_type(mats[0], usual_sandwich_cqss({2, 4, 3})), std::invalid_argument);
}

TEST_CASE("pair shapes") {
    // R = {0}, other = {1, 2}
    Matrix two_two{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}};
    CHECK(pair_shape(two_two, {0}, {1, 2}).tag == TypeTag::Type2_2);
    Matrix stair{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
    auto ps = pair_shape(stair, {0, 1}, {2});
    CHECK(ps.tag == TypeTag::Type2_1);
    CHECK(ps.stair == std::vector<std::vector<int>>{{0}, {1}});
    Matrix none{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}};
    CHECK(pair_shape(none, {0, 1}, {2}).tag == TypeTag::Unclassified);
}
