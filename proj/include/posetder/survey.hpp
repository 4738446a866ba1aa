#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "posetder/poset.hpp"

namespace posetder {

inline constexpr int kMaxSurveySize = 8;

// One representative per isomorphism class of posets on n elements, in a
// deterministic order. Elements are named "v1" ... "vn". Throws
// SizeLimitError outside 1 <= n <= 8.
std::vector<Poset> enumerate_posets(int n);

// All classes of sizes 1..max_n, indexed by size - 1.
std::vector<std::vector<Poset>> enumerate_posets_up_to(int max_n);

struct SweepCounts {
    int n = 0;
    std::size_t posets = 0;
    std::size_t soluble = 0;
    std::size_t defective = 0;
    std::size_t inconclusive = 0;
    // Per ring in sweep_rings() order.
    std::vector<std::size_t> outer_exists;

    friend bool operator==(const SweepCounts&, const SweepCounts&) = default;
};

struct SweepReport {
    int max_n = 0;
    std::vector<SweepCounts> counts_by_n;
    // Hex canonical forms, sorted.
    std::vector<std::string> inconclusive_found;
    std::vector<std::string> identity_failures;
    std::chrono::milliseconds elapsed{0};

    bool ok() const { return identity_failures.empty(); }
};

// Rings checked per poset: q, gf:2, gf:3.
const std::vector<std::string>& sweep_rings();

// Checks (E - rank_k M_P) - (V - C) == betti1 + #{t in torsion1 : p | t}
// for every sweep ring. Returns a description of the first mismatch, or an
// empty string.
std::string cross_module_identity_failure(const Poset& poset);

using SweepProgress = std::function<void(int n, std::size_t done, std::size_t total)>;

SweepReport sweep(int max_n, int parallelism = 1, const SweepProgress& progress = {});

std::string to_hex(const std::string& bytes);

}  // namespace posetder
