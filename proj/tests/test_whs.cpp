#include "doctest.h"
#include "pdef/mmp.hpp"
#include "pdef/whs.hpp"
#include "reference_data.hpp"

#include <algorithm>

using namespace pdef;

namespace {

// marks as lists of (star vertex, weight) in path order, up to reversal
std::set<std::vector<std::pair<int, int>>> star_marks(const PResolution& p) {
    std::set<std::vector<std::pair<int, int>>> out;
    for (const auto& m : p.marks) {
        std::vector<std::pair<int, int>> v;
        for (int x : m) v.push_back({p.origin[x], p.graph.weight[x]});
        auto r = v;
        std::reverse(r.begin(), r.end());
        out.insert(std::min(v, r));
    }
    return out;
}

std::vector<std::pair<int, int>> canon(std::vector<std::pair<int, int>> v) {
    auto r = v;
    std::reverse(r.begin(), r.end());
    return std::min(v, r);
}

}  // namespace

TEST_CASE("D block shapes") {
    CHECK(d_block_shape({{1, 1, 0}, {1, 0, 1}}));
    CHECK_FALSE(d_block_shape({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(d_block_shape({{0, 1, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}}));
    CHECK_FALSE(d_block_shape({{1, 1, 0}, {1, 1, 0}}));
    CHECK_FALSE(d_block_shape({{1, 1, 1}, {1, 0, 0}}));
    CHECK(d_block_shape({}));
    CHECK(d_block_shape({{0, 1, 1}}));
    CHECK(d_block_check(ref::case_a, ref::star_abc()));
    CHECK(d_block_check(ref::case_b, ref::star_abc()));
}

TEST_CASE("case A") {
    auto x = ref::star_abc();
    auto tag = classify_case(ref::case_a, x);
    REQUIRE(tag.kind == CaseKind::A);
    CHECK(tag.p0 == 0);
    REQUIRE(tag.blocks.size() == 3);
    CHECK(tag.blocks[0] == Matrix{{1, 1, 1, 0}, {1, 1, 0, 1}});
    CHECK(tag.blocks[1] == Matrix{{1, 1, 1, 1, 0}, {1, 1, 1, 0, 1}, {1, 1, 0, 1, 1}, {1, 0, 1, 1, 1}});
    CHECK(tag.blocks[2] == Matrix{{1, 1, 1, 1, 0}, {1, 1, 1, 0, 1}, {1, 1, 0, 1, 1}});
    auto r = construct_presolution(ref::case_a, x);
    const auto& b = x.structure().base.branches;
    std::set<std::vector<std::pair<int, int>>> want{canon({{b[1][1], -2}, {b[1][2], -5}}), canon({{b[2][2], -4}})};
    CHECK(star_marks(r.presolution) == want);
    CHECK(r.presolution.graph.size() == x.structure().base.size());
    CHECK(r.ample.ample);
    CHECK(blows_down_to_star(r.presolution, x));
    auto v = verify_phi_pi(ref::case_a, x, r);
    CHECK(v.ok);
}

TEST_CASE("case B2") {
    auto x = ref::star_abc();
    auto tag = classify_case(ref::case_b, x);
    REQUIRE(tag.kind == CaseKind::B2);
    CHECK(tag.branch == 0);
    CHECK(tag.partner == 2);
    CHECK(tag.g_partner == 2);
    CHECK(tag.g[1] == 1);
    CHECK(tag.types[1] == TypeTag::Type2_2);
    CHECK(tag.types[2] == TypeTag::Type2_1);
    CHECK(tag.s == 0);
    CHECK(tag.e == 1);
    CHECK(tag.permutation == std::vector<int>{0, 2, 1});
    auto r = construct_presolution(ref::case_b, x);
    const auto& b = x.structure().base.branches;
    std::set<std::vector<std::pair<int, int>>> want{
        canon({{b[0][1], -3}, {b[0][0], -2}, {0, -6}, {b[2][0], -2}}),
        canon({{b[1][1], -2}, {b[1][2], -5}}),
        canon({{b[2][2], -4}})};
    CHECK(star_marks(r.presolution) == want);
    CHECK(r.ample.ample);
    CHECK(blows_down_to_star(r.presolution, x));
    // only A_{2,1} and A_{3,2} stay unmarked
    auto mk = r.presolution.mark_of();
    CHECK(std::count(mk.begin(), mk.end(), -1) == 2);
    CHECK(verify_phi_pi(ref::case_b, x, r).ok);
}

TEST_CASE("minimal blocks give the minimal resolution") {
    auto x = ref::star_abc();
    auto st = x.structure();
    auto m = run_mmp(minimal_presolution(st.base), st.attach).matrix;
    auto tag = classify_case(m, x);
    CHECK(tag.kind == CaseKind::A);
    auto r = construct_presolution(m, x);
    CHECK(r.presolution.marks.empty());
    CHECK(r.presolution.graph.size() == st.base.size());
    CHECK(blows_down_to_star(r.presolution, x));
}

TEST_CASE("the t+2 star") {
    auto x = ref::star_four_twos();
    auto tag = classify_case(ref::t2_corrected, x);
    CHECK(tag.kind == CaseKind::Violation);
    CHECK(tag.message.find("one-branch condition") != std::string::npos);
    CHECK(tag.candidates.size() == 2);
    for (const auto& [p0, bs] : tag.candidates) CHECK(bs.size() > 1);
    CHECK_THROWS_AS(construct_presolution(ref::t2_corrected, x), ConstructError);
    auto rep = surjectivity_report(x);
    CHECK(rep.tally["unconstructible"] >= 1);
    bool found = false;
    for (const auto& e : rep.entries)
        if (e.matrix == canonical(ref::t2_corrected)) found = e.status == "unconstructible";
    CHECK(found);
}

TEST_CASE("full coverage on small stars") {
    for (const auto& x : {ref::star_abc(), StarSingularity{5, {{2}, {2}}}, StarSingularity{6, {{2}, {2}, {2}}},
                          StarSingularity{4, {{2}}}, StarSingularity{5, {{3}}}, StarSingularity{6, {{2}, {3}}},
                          StarSingularity{6, {{2, 2}, {3}}}}) {
        auto rep = surjectivity_report(x);
        CHECK_MESSAGE(rep.full_coverage(), to_string(x));
        for (const auto& e : rep.entries)
            if (e.status != "verified") MESSAGE(to_string(x), " ", e.status, " ", e.detail);
    }
}

TEST_CASE("dichotomy and D blocks on every enumerated matrix") {
    for (const auto& x : {ref::star_abc(), StarSingularity{7, {{2}, {2}, {2}}}, StarSingularity{6, {{3}, {2, 2}}}}) {
        auto st = x.structure();
        auto data = combinatorial_data(st);
        auto br = x.branch_rows();
        for (const auto& c : enumerate_all(data)) {
            Matrix m = to_matrix(c, st.attach.size());
            CHECK(d_block_check(m, x));
            auto tag = classify_case(m, x);
            CHECK(tag.kind != CaseKind::DBlockFail);
            CHECK(tag.kind != CaseKind::Unclassified);
            std::set<int> from;
            for (int r : tag.R)
                for (std::size_t i = 0; i < br.size(); ++i)
                    if (std::find(br[i].begin(), br[i].end(), r) != br[i].end()) from.insert(static_cast<int>(i));
            CHECK(from.size() <= 1);
        }
    }
}

TEST_CASE("synthesized P-resolutions: ampleness and the (-1)-curve inequality") {
    auto x = ref::star_abc();
    auto st = x.structure();
    for (const auto& c : enumerate_all(combinatorial_data(st))) {
        Matrix m = to_matrix(c, st.attach.size());
        auto r = construct_presolution(m, x);
        CHECK(r.ample.ample);
        CHECK(blows_down_to_star(r.presolution, x));
        for (const auto& mk : r.mresolution.marks) {
            Chain ch;
            for (int v : mk) ch.push_back(-r.mresolution.graph.weight[v]);
            CHECK(is_wahl(ch));
        }
        // a (-1)-curve between two marks needs m_a + m_b < -1
        const auto& p = r.presolution;
        auto of = p.mark_of();
        std::vector<Rational> disc(p.graph.size());
        for (const auto& mk : p.marks) {
            Chain ch;
            for (int v : mk) ch.push_back(-p.graph.weight[v]);
            auto ds = discrepancies_adjunction(ch);
            for (std::size_t i = 0; i < mk.size(); ++i) disc[mk[i]] = ds[i];
        }
        for (int v = 0; v < p.graph.size(); ++v) {
            if (of[v] >= 0 || p.graph.weight[v] != -1) continue;
            Rational sum = 0;
            int near = 0;
            for (int u : p.graph.neighbors(v))
                if (of[u] >= 0) { sum += disc[u]; ++near; }
            if (near >= 2) CHECK(sum < -1);
        }
    }
}

TEST_CASE("classification needs a valid matrix") {
    CHECK_THROWS(classify_case(Matrix{}, ref::star_abc()));
}
