#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdef/cfrac.hpp"
#include "pdef/classt.hpp"
#include "pdef/incidence.hpp"
#include "pdef/sandwich.hpp"

namespace pdef {

// Star-shaped resolution graph: central (-d)-curve with t branches, each listed from the centre.
struct StarSingularity {
    int d = 0;
    std::vector<Chain> branches;

    int t() const { return static_cast<int>(branches.size()); }
    int d_rows() const { return d - t() - 1; }
    SandwichedStructure structure() const { return sandwich_whs(d, branches); }
    // rows of each branch (structure order), then the D rows
    std::vector<std::vector<int>> branch_rows() const;
    std::vector<int> drow_indices() const;
    // minimal-resolution position of each row within its branch
    std::vector<int> row_position() const;
};

std::string to_string(const StarSingularity& x);

// D rows alone: [all-ones column | identity] up to column order.
bool d_block_shape(const Matrix& d_rows);
bool d_block_check(const Matrix& m, const StarSingularity& x);

enum class CaseKind { A, B1, B2, Violation, OutOfScope, DBlockFail, Unclassified };
std::string to_string(CaseKind k);

struct CaseTag {
    CaseKind kind = CaseKind::Unclassified;
    int p0 = -1;
    std::vector<Matrix> blocks;                  // Case A: per-branch block without p0
    int branch = -1;                             // Case B: degenerating branch (0-based)
    int e = -1;                                  // first row of R inside that branch, 1-based
    std::vector<int> R;                          // rows with 0 at p0
    int partner = -1;                            // Case B2: the type 2-1 branch
    std::vector<TypeTag> types;                  // per branch, relative to the degenerating one
    std::vector<std::vector<int>> q;             // per branch: columns shared with R
    std::vector<int> g;                          // per branch |q|, -1 where not used
    int g_partner = 0;
    std::vector<std::vector<int>> stair;         // partner: R rows per q column
    int s = 0;
    std::vector<int> permutation;                // branch order after normalization
    std::vector<std::pair<int, std::vector<int>>> candidates;   // p0 candidate -> branches with zeros there
    std::string message;

    bool constructible() const { return kind == CaseKind::A || kind == CaseKind::B1 || kind == CaseKind::B2; }
};

CaseTag classify_case(const Matrix& m, const StarSingularity& x);

struct ConstructError : std::runtime_error {
    std::string kind;     // "lookup-miss", "lookup-ambiguous", "identity", "not-ample", "not-class-t"
    ConstructError(std::string k, const std::string& what) : std::runtime_error(what), kind(std::move(k)) {}
};

struct StarPResolution {
    PResolution presolution;                  // class-T marks; origin maps to star vertices
    PResolution mresolution;                  // Wahl marks; the MMP runs here
    std::vector<int> attach;                  // decorated curves -> mresolution vertices
    std::vector<std::string> provenance;      // per presolution mark
    std::vector<std::string> m_provenance;    // per mresolution mark
    AmpleReport ample;
    CaseTag tag;
};

StarPResolution construct_presolution(const Matrix& m, const StarSingularity& x, int depth = 3);

// Blowing down the curves created by blow-ups gives back the star.
bool blows_down_to_star(const PResolution& res, const StarSingularity& x);

struct PhiResult {
    bool ok = false;
    Matrix got;
    std::vector<int> row_permutation;          // got row i is target row perm[i]
    std::size_t steps = 0;
};

PhiResult verify_phi_pi(const Matrix& m, const StarSingularity& x, const StarPResolution& res);

struct SurjectivityEntry {
    CanonicalForm matrix;
    CaseTag tag;
    std::string status;     // verified, unconstructible, out-of-scope, dblock-fail, unclassified, construct-failed, verify-failed
    std::string detail;
};

struct SurjectivityReport {
    StarSingularity x;
    std::size_t total = 0;
    std::size_t verified = 0;
    std::map<std::string, std::size_t> tally;
    std::vector<SurjectivityEntry> entries;
    bool full_coverage() const { return total > 0 && verified == total; }
};

SurjectivityReport surjectivity_report(const StarSingularity& x, int depth = 3, unsigned threads = 0);

}  // namespace pdef
