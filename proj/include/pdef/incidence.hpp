#pragma once

#include <set>
#include <string>
#include <vector>

#include "pdef/rational.hpp"
#include "pdef/sandwich.hpp"

namespace pdef {

using Column = std::vector<int>;
// Columns sorted in descending lexicographic order; rows keep structure order.
using CanonicalForm = std::vector<Column>;

CanonicalForm canonical(const Matrix& m);
Matrix to_matrix(const CanonicalForm& c, std::size_t rows);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;   // one entry per violated equation
};

VerifyReport verify(const Matrix& m, const CombinatorialData& data);

// Every 0/1 matrix meeting the data, up to column order; sorted.
std::vector<CanonicalForm> enumerate_all(const CombinatorialData& data);
// One matrix per class under interchanging rows of the same group.
std::vector<CanonicalForm> enumerate_representatives(const CombinatorialData& data);
// Canonical forms reachable by permuting rows inside groups.
std::set<CanonicalForm> orbit(const CanonicalForm& c, const std::vector<int>& groups);
// Equal up to column order and permutations of rows inside groups.
bool equivalent(const Matrix& a, const Matrix& b, const std::vector<int>& groups);
// Row permutation p (within groups) with b[p[i]] == a[i] up to column order, if any.
std::vector<int> matching_row_permutation(const Matrix& a, const Matrix& b, const std::vector<int>& groups);

std::vector<int> free_points(const Matrix& m, int row);
bool has_all_ones_column(const Matrix& m);

enum class TypeTag { Type1, Type2_1, Type2_2, Unclassified };
std::string to_string(TypeTag t);

// How the rows R (zero at p0) meet the rows of another branch.
struct PairShape {
    TypeTag tag = TypeTag::Unclassified;
    std::vector<int> q;                    // columns shared by R and the other rows
    std::vector<std::vector<int>> stair;   // type 2-1: R rows per q column
};
PairShape pair_shape(const Matrix& m, const std::vector<int>& R, const std::vector<int>& other);

struct TypeInfo {
    TypeTag tag = TypeTag::Unclassified;
    int p0 = -1;
    int branch = -1;                       // degenerating branch, 0-based
    int e = -1;                            // first degenerating row within that branch, 1-based
    std::vector<int> R;
    PairShape shape;
};

// Two-branch star structure: [branch 1 rows, branch 2 rows, D rows] as built by sandwich_whs.
TypeInfo classify_cqss_type(const Matrix& m, const SandwichedStructure& s);

}  // namespace pdef
