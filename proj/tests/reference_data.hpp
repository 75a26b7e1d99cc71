#pragma once

#include "pdef/rational.hpp"
#include "pdef/whs.hpp"

// Frozen matrices for 1/19(1,11) and the star (6; [2,3],[2,2,5],[2,2,4]).
namespace ref {

using pdef::Matrix;

// NPP matrices, documented column order, for k = (1,2,2,1), (3,1,2,2), (2,1,3,1)
inline const Matrix npp_1221 = {{1, 0, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}};
inline const Matrix npp_3122 = {{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {1, 0, 1, 1, 1}, {1, 1, 0, 1, 1}};
inline const Matrix npp_2131 = {{1, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 0}, {1, 1, 0, 1, 1, 0}, {1, 0, 0, 1, 1, 1}};

// MMP on the minimal resolution, on [4] marked, on [2,5] -1 [4] marked; usual structure
inline const Matrix mmp_minimal = {{1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 1, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0}, {1, 1, 0, 0, 1, 0, 1}};
inline const Matrix mmp_four = {{1, 1, 1, 0, 0, 0}, {1, 1, 0, 1, 0, 0}, {1, 0, 1, 1, 1, 0}, {1, 0, 1, 1, 0, 1}};
inline const Matrix mmp_two = {{1, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}};

inline pdef::StarSingularity star_abc() { return {6, {{2, 3}, {2, 2, 5}, {2, 2, 4}}}; }

inline const Matrix case_a = {
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}};

inline const Matrix case_b = {
    {0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0},
    {1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
    {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0},
    {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1},
    {1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}};

// (6; [2],[2],[2],[2]): rows C1..C4, D1.  The matrix as printed violates l(C4) and two
// intersection numbers; the corrected one differs in two entries.
inline pdef::StarSingularity star_four_twos() { return {6, {{2}, {2}, {2}, {2}}}; }
inline const Matrix t2_printed = {{1, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 1}, {0, 1, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0}, {1, 1, 0, 0, 0, 1}};
inline const Matrix t2_corrected = {{1, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 1}, {0, 1, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}, {1, 1, 0, 0, 0, 0}};

}  // namespace ref
