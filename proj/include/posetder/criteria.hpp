#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "posetder/poset.hpp"

namespace posetder {

struct Co18Result {
    bool applicable = false;
    // Set only when applicable.
    std::optional<bool> satisfied;
    // n*m / ((n-2)(m-2)) + delta, set only when applicable.
    std::optional<mpq_class> bound;
};

struct CrownReport {
    std::size_t crowns_found = 0;
    bool all_have_join_or_meet = true;
    int max_n = 6;
};

struct CriteriaReport {
    ShapeStats stats;
    bool beat_point_free = false;
    Co18Result co18;
    // nullopt = not applicable.
    std::optional<bool> size_bound_ok;
    std::optional<int> table2_case;
    CrownReport crowns;

    bool conclusive_by_criterion() const {
        return (co18.satisfied && *co18.satisfied) || table2_case.has_value();
    }
};

// Inclusive integer range; hi < 0 means unbounded above.
struct IntRange {
    int lo = 0;
    int hi = -1;

    bool contains(std::size_t v) const {
        const auto x = static_cast<long>(v);
        return x >= lo && (hi < 0 || x <= hi);
    }
};

struct Table2Row {
    int index = 0;
    IntRange d;  // min(n_X, m_X)
    IntRange e;  // max(n_X, m_X)
    IntRange l;  // l_X
    IntRange h;  // h_X
};

// The 17 rows, in table order.
const std::vector<Table2Row>& table2_rows();

Co18Result co18_bound(const Poset& poset);
Co18Result co18_bound(const ShapeStats& stats, bool beat_point_free);

std::optional<bool> size_bound_check(const Poset& poset);

std::optional<int> table2_lookup(const ShapeStats& stats, bool beat_point_free);

CrownReport crown_obstruction_report(const Poset& poset, int max_n = 6);

CriteriaReport evaluate_criteria(const Poset& poset, int crown_max_n = 6);

// A tabulated row that matched a poset whose H_1 has torsion.
struct Table2Conflict {
    std::string poset_label;
    int row = 0;
    std::vector<mpz_class> torsion;
};

// Runs table2_lookup on each labelled poset and reports rows contradicted by
// the homology computation.
std::vector<Table2Conflict> table2_audit(const std::vector<std::pair<std::string, Poset>>& posets);

}  // namespace posetder
