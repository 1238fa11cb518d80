#pragma once

// Published values, transcribed verbatim (including the two asym entries
// that disagree with every other route: perimeter 20 and area 9).

#include <array>
#include <vector>

namespace golden {

// size, {1}, <r>, <r2>, rotation, <h>/<v>, <d1>/<d2>, congruence, <h,v>, <d1,d2>, asym
using Row = std::array<long, 11>;

inline const std::vector<Row> kPerimeterTable = {
    {4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {6, 2, 0, 2, 1, 2, 0, 1, 2, 0, 0},
    {8, 7, 1, 3, 3, 3, 3, 3, 3, 1, 0},
    {10, 28, 0, 8, 9, 6, 0, 6, 4, 0, 16},
    {12, 120, 2, 16, 35, 12, 14, 24, 6, 4, 72},
    {14, 528, 0, 40, 142, 24, 0, 77, 8, 0, 456},
    {16, 2344, 4, 84, 609, 48, 70, 334, 12, 8, 2064},
    {18, 10416, 0, 200, 2654, 96, 0, 1351, 16, 0, 10056},
    {20, 46160, 8, 424, 11650, 192, 348, 5960, 24, 24, 44736},
};

inline const std::vector<Row> kAreaTable = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0},
    {2, 2, 0, 2, 1, 2, 0, 1, 2, 0, 0},
    {3, 6, 0, 2, 2, 2, 2, 2, 2, 0, 0},
    {4, 19, 1, 7, 7, 5, 1, 5, 3, 1, 8},
    {5, 59, 1, 7, 17, 5, 5, 11, 3, 1, 40},
    {6, 176, 0, 24, 50, 12, 4, 29, 4, 0, 128},
    {7, 502, 0, 22, 131, 12, 14, 72, 4, 2, 440},
    {8, 1374, 2, 74, 363, 26, 12, 191, 6, 2, 1240},
    {9, 3630, 2, 62, 924, 26, 38, 478, 6, 2, 3452},
    {10, 9312, 0, 208, 2380, 52, 32, 1211, 6, 2, 8952},
};

// Orbit series through q^10.
inline constexpr const char* kRotationType =
    "t^2*q + t^3*q^2 + 2*t^4*q^3 + t^4*q^4 + 6*t^5*q^4 + 2*t^5*q^5 + t^5*q^6 + 15*t^6*q^5 + "
    "11*t^6*q^6 + 6*t^6*q^7 + 38*t^7*q^6 + 2*t^6*q^8 + 38*t^7*q^7 + t^6*q^9 + 36*t^7*q^8 + "
    "87*t^8*q^7 + 18*t^7*q^9 + 124*t^8*q^8 + 9*t^7*q^10 + 139*t^8*q^9 + 201*t^9*q^8 + "
    "115*t^8*q^10 + 334*t^9*q^9 + 470*t^9*q^10 + 432*t^10*q^9 + 861*t^10*q^10 + 925*t^11*q^10";

inline constexpr const char* kCongruenceType =
    "t^2*q + t^3*q^2 + 2*t^4*q^3 + t^4*q^4 + 4*t^5*q^4 + t^5*q^5 + t^5*q^6 + 10*t^6*q^5 + "
    "7*t^6*q^6 + 4*t^6*q^7 + 21*t^7*q^6 + 2*t^6*q^8 + 19*t^7*q^7 + t^6*q^9 + 20*t^7*q^8 + "
    "49*t^8*q^7 + 9*t^7*q^9 + 65*t^8*q^8 + 6*t^7*q^10 + 74*t^8*q^9 + 104*t^9*q^8 + "
    "62*t^8*q^10 + 167*t^9*q^9 + 239*t^9*q^10 + 227*t^10*q^9 + 436*t^10*q^10 + 468*t^11*q^10";

inline constexpr const char* kAsymmetric =
    "8*t^5*q^4 + 8*t^5*q^5 + 32*t^6*q^5 + 24*t^6*q^6 + 16*t^6*q^7 + 104*t^7*q^6 + "
    "152*t^7*q^7 + 104*t^7*q^8 + 272*t^8*q^7 + 72*t^7*q^9 + 448*t^8*q^8 + 16*t^7*q^10 + "
    "496*t^8*q^9 + 688*t^9*q^8 + 400*t^8*q^10 + 1336*t^9*q^9 + 1744*t^9*q^10 + "
    "1552*t^10*q^9 + 3344*t^10*q^10 + 3448*t^11*q^10";

// "First few terms" of the symmetry classes.
inline constexpr const char* kFrFirst =
    "t^2*q + t^4*q^4 + t^6*q^5 + t^6*q^9 + 2*t^8*q^8 + t^10*q^9 + t^8*q^12";
inline constexpr const char* kFr2First =
    "t^2*q + 2*t^3*q^2 + 2*t^4*q^3 + t^4*q^4 + 6*t^5*q^4 + 2*t^5*q^6 + 7*t^6*q^5";
inline constexpr const char* kFvFirst =
    "t^2*q + 2*t^3*q^2 + 2*t^4*q^3 + t^4*q^4 + 4*t^5*q^4 + 2*t^5*q^6 + 5*t^6*q^5";
inline constexpr const char* kFhvFirst =
    "t^2*q + 2*t^3*q^2 + 2*t^4*q^3 + t^4*q^4 + 2*t^5*q^4 + 2*t^5*q^6 + 3*t^6*q^5";
inline constexpr const char* kFdFirst =
    "t^2*q + 2*t^4*q^3 + t^4*q^4 + 5*t^6*q^5 + 4*t^6*q^6 + 2*t^6*q^7 + 2*t^6*q^8";
inline constexpr const char* kFd1d2First =
    "t^2*q + t^4*q^4 + t^6*q^5 + 2*t^6*q^7 + t^6*q^9 + 2*t^8*q^8 + 2*t^8*q^10";
inline constexpr const char* kDSFirst =
    "x*y*z*q + x^2*y*z*q^2 + x*y^2*z*q^2 + x^3*y*z*q^3 + x^2*y^2*z^2*q^3 + 3*x^2*y^2*z*q^3 + "
    "x*y^3*z*q^3";

}  // namespace golden
