#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdef/cfrac.hpp"
#include "pdef/sandwich.hpp"

namespace pdef {

// Certificate that a chain is the resolution of 1/(dn^2)(1, dna-1).
struct TCertificate {
    Chain chain;
    long long d = 0, n = 0, a = 0;
    std::vector<Chain> derivation;   // base case first, chain last
    bool wahl() const { return d == 1; }
};

std::optional<TCertificate> is_class_t(const Chain& chain);
bool is_wahl(const Chain& chain);
bool is_class_t_chain(const Chain& chain);

// Wahl chains of length <= max_len, grown from [4] by the two extension moves.
std::vector<Chain> enumerate_wahl(int max_len);

std::vector<long long> delta_sequence(const Chain& wahl);
std::vector<Rational> discrepancies(const Chain& wahl);
// Solves m_{i-1} - a_i m_i + m_{i+1} = a_i - 2 exactly.
std::vector<Rational> discrepancies_adjunction(const Chain& chain);

struct CurveAmpleness {
    int vertex = -1;
    Rational k_dot;        // K.E on the partial resolution
    bool exempt = false;   // unmarked (-2)-curve away from marks: rational double point locus
    bool ok = false;
};

struct AmpleReport {
    bool ample = false;
    std::string error;     // non-empty when the marking itself is invalid
    std::vector<CurveAmpleness> curves;
};

// K.E = a - 2 - (sum of discrepancies of adjacent marked curves) > 0 for every unmarked curve.
AmpleReport ample_check(const PResolution& res);

struct BoundResult {
    std::string lemma;     // "head", "leading-twos", "middle"
    int index = -1;        // curve the bound is about (0-based)
    Rational value;        // discrepancy
    Rational bound;
    bool strict = true;
    bool applicable = false;
    bool holds = false;
};

std::vector<BoundResult> bound_checks(const Chain& wahl);

}  // namespace pdef
