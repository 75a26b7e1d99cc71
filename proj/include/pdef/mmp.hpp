#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pdef/rational.hpp"
#include "pdef/sandwich.hpp"

namespace pdef {

struct MMPError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MMPStep {
    enum class Kind { Contract, Flip };
    Kind kind = Kind::Contract;
    int curve = -1;
    std::vector<int> mark;        // flipped chain, oriented so that curve meets its last entry
    int pivot = -1;               // index i of the flip rule (last entry >= 3), 0-based
    std::vector<int> column;      // contraction only
    long long measure = 0;        // termination measure after the step
};

// State of one run: curves 0..n-1 of the partial resolution, then one connector per decorated curve.
struct MMPSnapshot {
    std::vector<int> vertices;
    std::vector<int> weight;                          // by vertex id, meaningful for alive ones
    std::vector<std::tuple<int, int, int>> edges;     // u, v, intersection number
    std::vector<std::vector<int>> marks;
    std::vector<std::vector<std::pair<int, int>>> strict;        // per leaf: (curve, multiplicity)
    std::vector<std::vector<std::pair<int, Rational>>> ledger;   // per leaf: degeneration coefficients
};

class MMPState {
public:
    MMPState(const PResolution& res, const std::vector<int>& attach);

    bool done() const;
    int leaves() const { return static_cast<int>(S_.size()); }
    bool alive(int v) const { return alive_[v]; }
    int weight(int v) const { return w_[v]; }
    int inter(int a, int b) const { return a == b ? w_[a] : I_[a][b]; }
    const std::vector<std::vector<int>>& marks() const { return marks_; }

    // D_L . X where D_L = strict part + sum of ledger coefficients
    Rational dot(int leaf, int x) const;
    // K . D_L
    Rational k_dot(int leaf) const;
    long long measure() const;

    std::vector<int> contract(int t);
    void flip(int c, int mark_index);

    // One move chosen by the scheduling policy; throws MMPError when stuck.
    void step(std::mt19937* rng = nullptr);

    const std::vector<MMPStep>& trace() const { return trace_; }
    Matrix matrix() const;
    MMPSnapshot snapshot() const;

private:
    int n_ = 0;
    std::vector<int> w_;
    std::vector<std::vector<int>> I_;
    std::vector<char> alive_;
    std::vector<std::vector<int>> marks_;
    std::vector<std::vector<int>> S_;
    std::vector<long long> KS_;
    std::vector<std::vector<Rational>> c_;
    std::vector<std::vector<int>> cols_;
    std::vector<MMPStep> trace_;

    std::vector<int> marked_flags() const;
    void blow_down(int t);
    void pull(int leaf);
    void pull_all();
    void record(MMPStep st);
};

struct MMPOptions {
    int budget = 100000;
    std::optional<unsigned> seed;   // randomizes the order among legal moves
    bool snapshots = false;
};

struct MMPResult {
    Matrix matrix;
    std::vector<MMPStep> trace;
    std::vector<MMPSnapshot> snapshots;   // initial state, then one per step
};

// Requires every mark to be a Wahl chain; attach maps decorated curves to vertices of res.
MMPResult run_mmp(const PResolution& res, const std::vector<int>& attach, const MMPOptions& opt = {});

struct PredicateReport {
    bool no_free_point_lemma = true;   // a curve on A_r without free points forces A_r into a mark
    bool all_ones_lemma = true;        // an all-ones column forces A_r out of every mark
    bool last_marked = false;
    bool has_all_ones = false;
    std::vector<int> leaves_without_free_point;
    bool ok() const { return no_free_point_lemma && all_ones_lemma; }
};

// Usual chain structure: leaves on the last curve of the minimal resolution.
PredicateReport structural_predicates(const PResolution& res, const SandwichedStructure& s, const Matrix& m);

// Contract K-trivial (-1)-curves that sit between marks (merging them) or inside a merged mark.
struct CanonicalModel {
    PResolution res;
    std::vector<int> rename;   // old vertex -> new vertex, -1 if contracted
};
CanonicalModel canonical_model(const PResolution& res);

// A chain with Wahl marks separated by single (-1)s, K nef, whose canonical model is seg
// with one mark. Blow-ups happen at nodes only; at most max_blowups of them.
struct LocalMResolution {
    Chain chain;                                  // positive entries, 1 for the new (-1)s
    std::vector<std::pair<int, int>> marks;       // half-open intervals
    std::vector<int> origin;                      // position in seg, -1 for blow-up curves
};
std::optional<LocalMResolution> local_m_resolution(const Chain& seg, int max_blowups = 12);

}  // namespace pdef
