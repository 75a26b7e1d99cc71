#include "doctest.h"
#include "pdef/io.hpp"
#include "reference_data.hpp"

using namespace pdef;

TEST_CASE("star input") {
    auto x = star_from_json(json::parse(R"({"d": 6, "branches": [[2,3],[2,2,5],[2,2,4]]})"));
    CHECK(x.d == 6);
    CHECK(x.t() == 3);
    CHECK_THROWS_AS(star_from_json(json::parse(R"({"d": 3, "branches": [[2],[2],[2]]})")), InputError);
    CHECK_THROWS_AS(star_from_json(json::parse(R"({"d": 6, "branches": [[1]]})")), InputError);
    CHECK_THROWS_AS(star_from_json(json::parse(R"({"branches": [[2]]})")), InputError);
}

TEST_CASE("matrix input") {
    CHECK(matrix_from_json(json::parse("[[1,0],[0,1]]")) == Matrix{{1, 0}, {0, 1}});
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,0],[0]]")), InputError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[2]]")), InputError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), InputError);
}

TEST_CASE("resolution input, both forms") {
    auto a = resolution_from_json(json::parse(R"({"chain": [2,5,1,4], "marks": [[0,1],[3]], "counts": [0,2,0,2]})"));
    CHECK(a.res.graph.weight == std::vector<int>{-2, -5, -1, -4});
    CHECK(a.attach == std::vector<int>{1, 1, 3, 3});
    auto b = resolution_from_json(json::parse(
        R"({"weights": [-2,-5,-1,-4], "edges": [[0,1],[1,2],[2,3]], "marks": [[0,1],[3]], "attach": [1,1,3,3]})"));
    CHECK(a.res.graph == b.res.graph);
    CHECK(a.res.marks == b.res.marks);
    CHECK(canonical(run_mmp(a.res, a.attach).matrix) == canonical(ref::mmp_two));
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"chain": [2,3], "counts": [1]})")), InputError);
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"weights": [-2], "edges": [[0,0]]})")), InputError);
    CHECK_THROWS_AS(resolution_from_json(json::parse(R"({"chain": [2,3], "marks": [[5]]})")), InputError);
}

TEST_CASE("DOT output") {
    auto a = resolution_from_json(json::parse(R"({"chain": [2,5,1,4], "marks": [[0,1],[3]], "counts": [0,2,0,2]})"));
    auto dot = to_dot(a.res, a.attach, "Y");
    CHECK(dot.rfind("graph Y {", 0) == 0);
    CHECK(dot.find("v0 [label=\"-2\", shape=box") != std::string::npos);
    CHECK(dot.find("v2 [label=\"-1\", shape=circle") != std::string::npos);
    CHECK(dot.find("l3 -- v3") != std::string::npos);
    MMPOptions o;
    o.snapshots = true;
    auto r = run_mmp(a.res, a.attach, o);
    bool bold = false;
    for (const auto& s : r.snapshots) bold = bold || to_dot(s).find("style=bold") != std::string::npos;
    CHECK(bold);
}

TEST_CASE("JSON output") {
    auto x = ref::star_abc();
    auto r = construct_presolution(ref::case_b, x);
    auto j = to_json(r);
    CHECK(j["classification"]["case"] == "B2");
    CHECK(j["classification"]["partner"] == 3);
    CHECK(j["presolution"]["marks"].size() == 3);
    CHECK(matrix_csv({{1, 0}, {0, 1}}) == "1,0\n0,1\n");
    CHECK(matrix_table({{1, 0}}, {"C1"}) == "C1 | 1 0\n");
}
