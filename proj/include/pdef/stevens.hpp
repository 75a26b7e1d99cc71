#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdef/cfrac.hpp"
#include "pdef/rational.hpp"
#include "pdef/sandwich.hpp"

namespace pdef {

// Polygon with named vertices 1..s and the extra vertex N = s+1.
struct Triangulation {
    int s = 0;
    std::vector<std::array<int, 3>> triangles;   // sorted triples, in column order
    bool operator==(const Triangulation& o) const { return s == o.s && triangles == o.triangles; }
};

// Column order: triangles without N lexicographically, then (i, j, N) by (j - i, i).
void order_triangles(Triangulation& t);

std::vector<Triangulation> triangulations(int s);
std::vector<int> tri_to_k(const Triangulation& t);
Triangulation k_to_tri(const std::vector<int>& k);

// -1 for the middle named vertex of the triangle, +1 for the other named ones, 0 if absent.
int alpha(int i, const std::array<int, 3>& tri, int s);

// Row prefix sums of D(b;k) = (D(k) | padding blocks).
Matrix npp_incidence(const Chain& b, const std::vector<int>& k, const Triangulation& theta);

// P-resolution of a cyclic quotient given as a blown-up chain.
struct ChainPResolution {
    std::vector<int> weight;                   // self-intersections along the chain
    std::vector<int> origin;                   // minimal-resolution position, -1 for blow-up curves
    std::vector<std::pair<int, int>> marks;    // half-open intervals of the chain

    PResolution to_presolution() const;
    Chain mark_chain(std::size_t i) const;
    bool all_wahl() const;
    bool operator==(const ChainPResolution& o) const {
        return weight == o.weight && origin == o.origin && marks == o.marks;
    }
};

std::string to_string(const ChainPResolution& p);

// Node blow-ups of depth <= depth, all markings by disjoint class-T chains, kept if K is ample.
std::vector<ChainPResolution> chain_presolutions(const Chain& cf, int depth);

// Replaces marks of class T with d >= 2 by local M-resolutions; Wahl marks are kept.
std::optional<ChainPResolution> to_m_resolution(const ChainPResolution& p);

// Decorated curves: counts[j] of them on minimal-resolution curve j.
std::vector<int> chain_attachments(const ChainPResolution& p, const std::vector<int>& counts);

struct Realization {
    ChainPResolution presolution;
    ChainPResolution mresolution;
    bool via_m_resolution = false;
    Matrix matrix;                             // MMP on the M-resolution
};

// Every P-resolution within depth with its MMP matrix; cached per (cf, counts, depth).
std::shared_ptr<const std::vector<Realization>> realizations(const Chain& cf, const std::vector<int>& counts, int depth);

// P-resolutions whose matrix equals target up to column order and rows sharing a curve.
std::vector<Realization> lookup_chain(const Chain& cf, const std::vector<int>& counts, const Matrix& target, int depth = 3);

struct PResolutionCQSS {
    long long n = 0, q = 0;
    Chain chain;                               // n/q
    Chain b;                                   // n/(n-q)
    std::vector<int> k;
    Triangulation theta;
    Matrix matrix;
    bool minimal_only = false;                 // s = 1: K_1 is empty, only the minimal resolution
};

std::vector<PResolutionCQSS> p_resolutions_cqss(long long n, long long q);

std::optional<Realization> realize_presolution(const PResolutionCQSS& desc, int depth = 3);

}  // namespace pdef
