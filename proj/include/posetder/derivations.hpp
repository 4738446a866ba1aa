#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "posetder/linalg.hpp"
#include "posetder/poset.hpp"

namespace posetder {

inline constexpr std::size_t kDefaultPathLimit = 10'000;

// Two distinct upward cover paths with common endpoints, each given as its
// vertex sequence (source first, target last).
struct ParallelPair {
    int source = 0;
    int target = 0;
    std::vector<int> path_a;
    std::vector<int> path_b;
};

// One row per parallel pair: +1 on the edges of path_a, -1 on those of
// path_b. Columns follow the poset's cover order.
struct ConsistencyMatrix {
    IntegerMatrix matrix;
    std::vector<Edge> column_edges;
    std::vector<ParallelPair> row_pairs;
};

/**
 * Additive function on the strict order: values(x, z) = values(x, y) +
 * values(y, z) for every chain x < y < z. Values are stored for every
 * strict pair, reduced in `ring`. Reflexive pairs are implicitly zero.
 */
struct TransitiveFunction {
    Ring ring = Ring::rationals();
    std::map<std::pair<int, int>, mpq_class> values;

    const mpq_class& at(int x, int y) const { return values.at({x, y}); }
    // Values on the covers of `poset`, in cover order.
    std::vector<mpq_class> cover_values(const Poset& poset) const;
};

struct DerivationDims {
    std::size_t der_dim = 0;
    std::size_t pot_dim = 0;

    bool outer_exists() const { return der_dim > pot_dim; }
};

// Throws PathLimitExceeded when some pair has more than path_limit paths.
std::vector<ParallelPair> parallel_pairs(const Poset& poset, std::size_t path_limit = kDefaultPathLimit);

ConsistencyMatrix consistency_matrix(const Poset& poset, std::size_t path_limit = kDefaultPathLimit);

// Rows: cover edges in cover order; columns: elements. Row (x, y) carries
// -1 at x and +1 at y, so B * phi lists the potential values on covers.
IntegerMatrix cover_incidence(const Poset& poset);

DerivationDims der_pot_dims(const Poset& poset, const Ring& k, std::size_t path_limit = kDefaultPathLimit);
DerivationDims der_pot_dims(const Poset& poset, const ConsistencyMatrix& m, const Ring& k);

bool has_outer_derivation(const Poset& poset, const Ring& k, std::size_t path_limit = kDefaultPathLimit);

// Extends cover values (indexed like poset.covers()) by path sums. Returns
// nullopt if two cover paths between the same endpoints disagree.
std::optional<TransitiveFunction> from_cover_values(const Poset& poset, const Ring& ring,
                                                    const std::vector<mpq_class>& cover_values);

// A potential phi with f(x, y) = phi(y) - phi(x), gauge-fixed so the first
// element of each component maps to 0; nullopt if none exists.
std::optional<std::vector<mpq_class>> is_potential(const Poset& poset, const TransitiveFunction& f);

TransitiveFunction potential_function(const Poset& poset, const Ring& ring, const std::vector<mpq_class>& phi);

// Signed sum of f along a closed walk of comparable steps. The walk lists
// x1 ... xn with xn == x1. Throws NotComparableError.
mpq_class circulation(const TransitiveFunction& f, const std::vector<int>& walk);

// An outer derivation over Z/p, or nullopt when every derivation over GF(p)
// is inner.
std::optional<TransitiveFunction> outer_witness(const Poset& poset, std::uint64_t p,
                                                std::size_t path_limit = kDefaultPathLimit);

}  // namespace posetder
