#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetder/poset.hpp"

namespace posetder::fixtures {

// 13-point minimal finite model of the real projective plane: minimal
// n1..n3, middle a1..a6, maximal m1..m4, 24 covers.
Poset rp2();

// Crown C_n on x1..xn < y1..yn.
Poset crown(int n);
Poset chain(int n);
Poset antichain(int n);
// x < {a, b} < y
Poset diamond();
// Zigzag z1 < z2 > z3 < z4 ... on n elements.
Poset fence(int n);
// Minimal finite model of S^5: six levels of two points, each point above
// both points of the level below.
Poset s5();

// The Z/2 outer derivation on rp2(), one value per cover in cover order.
std::vector<mpq_class> table1_cover_values();

// Cycles through the upper half of rp2() used to detect outer derivations.
std::vector<std::pair<std::string, std::vector<std::string>>> rp2_upper_cycles();

// Resolves "rp2", "diamond", "s5", "crown:n", "chain:n", "antichain:n",
// "fence:n". Throws UnknownFixtureError.
Poset by_name(std::string_view name);

// Names accepted by the CLI fixture command, with sample parameters.
const std::vector<std::string>& sample_names();

}  // namespace posetder::fixtures
