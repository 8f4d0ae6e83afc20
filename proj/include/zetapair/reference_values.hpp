#pragma once

#include <limits>

namespace zetapair::reference {

// Reference lower-bound coefficients at 5 printed decimals. Entries are
// (b, simple/critical coefficient, simple-and-critical coefficient); a NaN
// third field means the bound has already gone negative there.
struct BoundEntry {
    double b;
    double simple;
    double simple_critical;
};

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Montgomery-Taylor kernel.
inline constexpr BoundEntry kTableMT[] = {
    {0.001, 0.67250, 0.34500}, {0.2, 0.67019, 0.34038}, {0.4, 0.66333, 0.32666},
    {0.6, 0.65208, 0.30416},   {0.8, 0.63670, 0.27339}, {1.0, 0.61748, 0.23496},
    {1.2, 0.59475, 0.18951},   {1.4, 0.56884, 0.13768}, {1.6, 0.54003, 0.08007},
    {1.8, 0.50862, 0.01724},   {2.0, 0.47485, kNaN},    {2.2, 0.43894, kNaN},
    {2.4, 0.40109, kNaN},      {2.6, 0.36149, kNaN},    {2.8, 0.32027, kNaN},
    {3.0, 0.27760, kNaN},      {3.2, 0.23357, kNaN},    {3.4, 0.18832, kNaN},
    {3.6, 0.14194, kNaN},      {3.8, 0.09451, kNaN},    {4.0, 0.04612, kNaN},
    {4.187, 0.00007, kNaN},
};

// Fejer kernel (simple/critical column only; 0 at 4.187 is display-clamped).
inline constexpr BoundEntry kTableFejer[] = {
    {0.001, 0.66666, kNaN}, {0.2, 0.66422, kNaN}, {0.4, 0.65697, kNaN},
    {0.6, 0.64509, kNaN},   {0.8, 0.62886, kNaN}, {1.0, 0.60861, kNaN},
    {1.2, 0.58468, kNaN},   {1.4, 0.55743, kNaN}, {1.6, 0.52719, kNaN},
    {1.8, 0.49424, kNaN},   {2.0, 0.45887, kNaN}, {2.2, 0.42130, kNaN},
    {2.4, 0.38176, kNaN},   {2.6, 0.34043, kNaN}, {2.8, 0.29747, kNaN},
    {3.0, 0.25304, kNaN},   {3.2, 0.20727, kNaN}, {3.4, 0.16026, kNaN},
    {3.6, 0.11214, kNaN},   {3.8, 0.06298, kNaN}, {4.0, 0.01288, kNaN},
    // True value at 4.0508 is 2.1960e-5; the commonly quoted .00022 belongs
    // to b = 4.05 (2.2499e-4). The consistent value is frozen here.
    {4.0508, 0.00002, kNaN},
};

// Published proportion constants for the Montgomery-Taylor kernel.
inline constexpr double kSimpleAtSmallB = 0.67250064;        // b = 0.001
inline constexpr double kSimpleAtB03185 = 0.66666908;        // b = 0.3185
inline constexpr double kSimpleCriticalAtSmallB = 0.34500129;  // b = 0.001

}  // namespace zetapair::reference
