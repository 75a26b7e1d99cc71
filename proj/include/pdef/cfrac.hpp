#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "pdef/rational.hpp"

namespace pdef {

using Chain = std::vector<int>;

// Value of a Hirzebruch-Jung fraction over the extended rationals.
struct ExtRational {
    enum class Kind { Finite, Infinity, Undefined };
    Kind kind = Kind::Finite;
    Rational value;

    bool finite() const { return kind == Kind::Finite; }
    bool is_zero() const { return finite() && value == 0; }
};

std::string to_string(const ExtRational& v);

Chain hj_expand(const BigInt& n, const BigInt& q);
inline Chain hj_expand(long long n, long long q) { return hj_expand(BigInt(n), BigInt(q)); }

// Right-to-left evaluation. A zero denominator gives infinity and 1/inf = 0.
ExtRational hj_eval(const std::vector<int>& cf);

// Expansion of n/(n-q) when cf evaluates to n/q.
Chain hj_dual(const Chain& cf);

// Leading continuants d_j = k_j d_{j-1} - d_{j-2}: all >= 0 and only d_s may vanish.
bool is_admissible(const std::vector<int>& k);

std::set<std::vector<int>> enumerate_K(int s);

// K_s(b): members of K_s bounded entrywise by b, by continuant DFS.
std::vector<std::vector<int>> enumerate_K_bounded(const Chain& b);

std::uint64_t catalan(int n);

}  // namespace pdef
