#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pdef/cfrac.hpp"
#include "pdef/rational.hpp"

namespace pdef {

struct DualGraph {
    enum class Shape { Chain, Star, General };

    std::vector<int> weight;                  // self-intersection per vertex
    std::vector<std::pair<int, int>> edges;   // u < v, sorted, no repeats
    Shape shape = Shape::General;
    int central = -1;                         // star only
    std::vector<std::vector<int>> branches;   // star only, listed from the central outwards

    int size() const { return static_cast<int>(weight.size()); }
    int add_vertex(int w);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    bool connected() const;

    bool operator==(const DualGraph& o) const { return weight == o.weight && edges == o.edges; }
};

DualGraph chain_graph(const Chain& cf);

// Vertex order along a path graph, starting from the endpoint with the smaller id.
// Empty if the graph is not a path.
std::vector<int> path_order(const DualGraph& g);

// A partial resolution: blown-up graph plus disjoint marked chains.
struct PResolution {
    DualGraph graph;
    std::vector<std::vector<int>> marks;   // each mark lists a path of vertices in order
    std::vector<int> origin;               // vertex -> minimal-resolution vertex, or -1 if created by a blow-up

    std::vector<int> mark_of() const;      // vertex -> mark index or -1
};

PResolution minimal_presolution(const DualGraph& g);

// Base graph with one (-1)-connector per decorated curve.
struct SandwichedStructure {
    DualGraph base;
    std::vector<int> attach;               // decorated curve -> base vertex carrying its connector
    std::vector<std::string> labels;

    int leaves() const { return static_cast<int>(attach.size()); }
    // base plus connectors; connector of leaf i has id base.size() + i
    DualGraph full_graph() const;
};

struct CombinatorialData {
    std::vector<std::string> labels;
    std::vector<int> l;
    std::vector<std::vector<int>> pair;
    std::vector<int> delta;
    std::vector<int> groups;               // rows with equal group sit on the same curve
};

SandwichedStructure usual_sandwich_cqss(const Chain& cf);
// Chain with an explicit number of connectors on every curve.
SandwichedStructure chain_structure(const Chain& cf, const std::vector<int>& counts);
SandwichedStructure sandwich_whs(int d, const std::vector<Chain>& branches);

// Connector counts of a star: per branch, inside-out; and the D count.
std::vector<std::vector<int>> star_branch_counts(const std::vector<Chain>& branches);

bool contracts_to_point(const DualGraph& g);
bool contracts_to_point(const SandwichedStructure& s);

// Blow down (-1)-curves of the full graph until nothing is left, recording for every
// event the multiplicity of each decorated curve there. Columns are the events.
// With an rng the order among available (-1)-curves is randomized.
Matrix contraction_replay(const SandwichedStructure& s, std::mt19937* rng = nullptr);

CombinatorialData combinatorial_data(const SandwichedStructure& s, std::mt19937* rng = nullptr);
CombinatorialData data_from_matrix(const Matrix& m, const std::vector<std::string>& labels,
                                   const std::vector<int>& groups);

// Blow-ups return the id of the new (-1)-vertex, which is always the last one.
int blow_up_edge(DualGraph& g, int u, int v);
int blow_up_point(DualGraph& g, int v);
// Removes v (weight -1, at most two neighbours); ids above v shift down by one.
void blow_down(DualGraph& g, int v);

}  // namespace pdef
