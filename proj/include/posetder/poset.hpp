#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace posetder {

// A Hasse edge: `upper` covers `lower`. Both are element indices.
struct Edge {
    int lower = 0;
    int upper = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Comparison { less, greater, equal, incomparable };

/**
 * Finite poset given by its Hasse diagram.
 *
 * Elements carry string identifiers and are addressed internally by their
 * position in the input list. The strict order is the transitive closure of
 * the covers and is materialized once at construction. Instances are
 * immutable.
 */
class Poset {
public:
    Poset() = default;

    // Validating constructor. Covers must already be transitively reduced;
    // see reduce_covers() for an explicit reduction step.
    static Poset from_covers(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);
    static Poset from_index_covers(std::vector<std::string> elements, std::vector<Edge> covers);

    // Builds the poset whose strict order is `relation` (row-major n*n,
    // relation[i*n+j] != 0 iff i < j). The relation must be a strict order.
    static Poset from_order(std::vector<std::string> elements, const std::vector<std::uint8_t>& relation);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(int x) const { return elements_[static_cast<std::size_t>(x)]; }
    const std::vector<Edge>& covers() const { return covers_; }

    // Throws UnknownElementError.
    int index_of(std::string_view id) const;
    std::optional<int> find(std::string_view id) const;

    bool less(int x, int y) const { return less_[static_cast<std::size_t>(x) * size() + static_cast<std::size_t>(y)] != 0; }
    bool comparable(int x, int y) const { return x != y && (less(x, y) || less(y, x)); }

    // Cover neighbours, sorted by element index.
    const std::vector<int>& upper_covers(int x) const { return up_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& lower_covers(int x) const { return down_[static_cast<std::size_t>(x)]; }

    // Index of the cover (lower, upper) in covers(), if it is one.
    std::optional<int> cover_index(int lower, int upper) const;

    // Row-major strict-order matrix.
    const std::vector<std::uint8_t>& relation() const { return less_; }

    // Induced subposet on `keep` (indices, in the order given).
    Poset induced(std::span<const int> keep) const;

    // Elements in a linear extension (every element after everything below it).
    std::vector<int> linear_extension() const;

private:
    std::vector<std::string> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> covers_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<std::uint8_t> less_;
};

// Height counts ELEMENTS of a longest chain (a single point has height 1).
struct ShapeStats {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t component_count = 0;
    std::size_t height = 0;
    std::size_t minimal_count = 0;
    std::size_t maximal_count = 0;
    std::size_t middle_count = 0;

    friend bool operator==(const ShapeStats&, const ShapeStats&) = default;
};

// Induced crown C_n: lower[i] < upper[i] and lower[i] < upper[(i+1) % n],
// with no other comparabilities among the 2n elements.
struct Crown {
    std::vector<int> lower;
    std::vector<int> upper;

    std::size_t order() const { return lower.size(); }
    std::vector<int> elements() const;
};

struct JoinMeet {
    std::optional<int> join;
    std::optional<int> meet;
};

Comparison compare(const Poset& poset, std::string_view x, std::string_view y);
Comparison compare(const Poset& poset, int x, int y);

ShapeStats shape_stats(const Poset& poset);

// Connected component label per element (labels 0.. in order of first element).
std::vector<int> component_labels(const Poset& poset);

// Elements covering exactly one element or covered by exactly one element.
std::vector<int> beat_points(const Poset& poset);

// Repeatedly deletes the first beat point in element order.
Poset core(const Poset& poset);

// Induced crowns C_n for 2 <= n <= max_n, one per element set.
std::vector<Crown> find_crowns(const Poset& poset, int max_n = 6);

// Checks that `crown` induces exactly the crown comparabilities in `poset`.
bool is_induced_crown(const Poset& poset, const Crown& crown);

JoinMeet join_meet(const Poset& poset, std::span<const int> subset);
JoinMeet join_meet(const Poset& poset, const std::vector<std::string>& subset);

// Canonical byte string: equal iff the posets are isomorphic.
std::string canonical_form(const Poset& poset);
std::string canonical_form(std::size_t n, const std::vector<std::uint8_t>& relation);

// Transitive reduction of an acyclic relation given as identifier pairs.
// Pairs implied by longer chains are dropped; duplicates are merged.
std::vector<std::pair<std::string, std::string>> reduce_covers(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace posetder
