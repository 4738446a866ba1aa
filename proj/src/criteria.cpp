#include "posetder/criteria.hpp"

#include <algorithm>

#include "posetder/homology.hpp"

namespace posetder {

namespace {

constexpr IntRange any{0, -1};
constexpr IntRange exactly(int v) { return {v, v}; }
constexpr IntRange at_least(int v) { return {v, -1}; }
constexpr IntRange between(int lo, int hi) { return {lo, hi}; }

}  // namespace

// Combinatorial conditions for beat-point-free posets with more than 12
// elements and height at least 3, transcribed row by row. Row 15 matches the
// 13-point model of the projective plane, whose H_1 has torsion; table2_audit
// reports that instead of the table being edited.
const std::vector<Table2Row>& table2_rows() {
    static const std::vector<Table2Row> rows = {
        {1, at_least(6), any, exactly(2), exactly(4)},
        {2, exactly(5), at_least(13), exactly(2), exactly(4)},
        {3, exactly(5), between(0, 12), between(2, 3), between(4, 5)},
        {4, exactly(5), between(0, 12), exactly(2), exactly(3)},
        {5, exactly(4), at_least(6), between(2, 3), between(4, 5)},
        {6, exactly(4), any, exactly(2), exactly(3)},
        {7, exactly(3), at_least(9), between(2, 4), between(4, 6)},
        {8, exactly(3), at_least(9), between(2, 3), exactly(3)},
        {9, exactly(3), between(6, 8), between(3, 5), between(4, 6)},
        {10, exactly(3), between(6, 8), between(2, 5), between(4, 5)},
        {11, exactly(3), between(6, 8), between(2, 4), exactly(3)},
        {12, exactly(3), exactly(5), exactly(6), between(4, 6)},
        {13, exactly(3), exactly(5), exactly(5), between(3, 6)},
        {14, exactly(3), exactly(4), exactly(7), between(4, 6)},
        {15, exactly(3), exactly(4), exactly(6), between(3, 6)},
        {16, exactly(3), exactly(3), exactly(9), between(4, 8)},
        {17, exactly(3), exactly(3), between(7, 8), between(3, 6)},
    };
    return rows;
}

Co18Result co18_bound(const ShapeStats& s, bool beat_point_free) {
    Co18Result r;
    if (!beat_point_free || s.minimal_count <= 2 || s.maximal_count <= 2) return r;
    r.applicable = true;
    const mpz_class n(static_cast<unsigned long>(s.minimal_count));
    const mpz_class m(static_cast<unsigned long>(s.maximal_count));
    mpq_class bound(n * m, (n - 2) * (m - 2));
    bound.canonicalize();
    if (s.height > 3) bound += 1;
    r.bound = bound;
    r.satisfied = mpq_class(static_cast<unsigned long>(s.middle_count)) < bound;
    return r;
}

Co18Result co18_bound(const Poset& poset) {
    return co18_bound(shape_stats(poset), beat_points(poset).empty());
}

std::optional<bool> size_bound_check(const Poset& poset) {
    if (poset.size() <= 1 || !beat_points(poset).empty()) return std::nullopt;
    const auto s = shape_stats(poset);
    return s.vertex_count >= 2 * s.height;
}

std::optional<int> table2_lookup(const ShapeStats& s, bool beat_point_free) {
    if (!beat_point_free || s.vertex_count <= 12 || s.height < 3) return std::nullopt;
    const auto d = std::min(s.minimal_count, s.maximal_count);
    const auto e = std::max(s.minimal_count, s.maximal_count);
    for (const auto& row : table2_rows())
        if (row.d.contains(d) && row.e.contains(e) && row.l.contains(s.middle_count) && row.h.contains(s.height))
            return row.index;
    return std::nullopt;
}

CrownReport crown_obstruction_report(const Poset& poset, int max_n) {
    CrownReport r;
    r.max_n = max_n;
    const auto crowns = find_crowns(poset, max_n);
    r.crowns_found = crowns.size();
    for (const auto& c : crowns) {
        const auto jm = join_meet(poset, c.elements());
        if (!jm.join && !jm.meet) {
            r.all_have_join_or_meet = false;
            break;
        }
    }
    return r;
}

CriteriaReport evaluate_criteria(const Poset& poset, int crown_max_n) {
    CriteriaReport r;
    r.stats = shape_stats(poset);
    r.beat_point_free = beat_points(poset).empty();
    r.co18 = co18_bound(r.stats, r.beat_point_free);
    r.size_bound_ok = size_bound_check(poset);
    r.table2_case = table2_lookup(r.stats, r.beat_point_free);
    r.crowns = crown_obstruction_report(poset, crown_max_n);
    return r;
}

std::vector<Table2Conflict> table2_audit(const std::vector<std::pair<std::string, Poset>>& posets) {
    std::vector<Table2Conflict> out;
    for (const auto& [label, p] : posets) {
        const auto row = table2_lookup(shape_stats(p), beat_points(p).empty());
        if (!row) continue;
        auto h1 = homology(p, 1);
        if (!h1.torsion.empty()) out.push_back({label, *row, std::move(h1.torsion)});
    }
    return out;
}

}  // namespace posetder
