#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "pdef/mmp.hpp"
#include "pdef/stevens.hpp"
#include "pdef/whs.hpp"

namespace pdef {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json to_json(const Matrix& m);
json to_json(const PResolution& p);
json to_json(const ChainPResolution& p);
json to_json(const Triangulation& t);
json to_json(const PResolutionCQSS& p);
json to_json(const MMPStep& s);
json to_json(const CaseTag& t);
json to_json(const AmpleReport& a);
json to_json(const StarPResolution& r);
json to_json(const SurjectivityReport& r);

std::string matrix_csv(const Matrix& m);
std::string matrix_table(const Matrix& m, const std::vector<std::string>& labels = {});

// circle = ordinary curve, box = marked, point = decorated curve, bold edge = degeneration
std::string to_dot(const PResolution& p, const std::vector<int>& attach = {}, const std::string& name = "Y");
std::string to_dot(const MMPSnapshot& s, const std::string& name = "step");

Matrix matrix_from_json(const json& j);
StarSingularity star_from_json(const json& j);

// {"weights": [...], "edges": [[u,v],...], "marks": [[...]], "attach": [...]}
// or the chain shorthand {"chain": [positive entries], "marks": [[...]], "counts": [...]}
struct ResolutionInput {
    PResolution res;
    std::vector<int> attach;
};
ResolutionInput resolution_from_json(const json& j);

}  // namespace pdef
