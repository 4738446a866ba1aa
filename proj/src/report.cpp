#include "posetder/report.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "posetder/errors.hpp"
#include "posetder/fixtures.hpp"

namespace posetder {

Json integer_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json scalar_to_json(const mpq_class& v) {
    if (v.get_den() == 1) return integer_to_json(v.get_num());
    return Json(v.get_str());
}

mpq_class scalar_from_json(const Json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return mpq_class(std::to_string(j.get<std::uint64_t>()));
        return mpq_class(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        mpq_class v;
        if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0) throw ParseError("bad exact value '" + s + "'");
        v.canonicalize();
        return v;
    }
    throw ParseError("values must be integers or \"p/q\" strings");
}

Json poset_to_json(const Poset& poset) {
    Json covers = Json::array();
    for (const auto& e : poset.covers()) covers.push_back({poset.name(e.lower), poset.name(e.upper)});
    return Json{{"elements", poset.elements()}, {"covers", std::move(covers)}};
}

Poset poset_from_json(const Json& j, bool reduce) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw ParseError("poset JSON needs \"elements\" and \"covers\"");
    const auto& el = j.at("elements");
    const auto& cv = j.at("covers");
    if (!el.is_array() || !cv.is_array()) throw ParseError("\"elements\" and \"covers\" must be arrays");
    std::vector<std::string> elements;
    for (const auto& e : el) {
        if (!e.is_string()) throw ParseError("element identifiers must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : cv) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw ParseError("each cover must be a [lower, upper] pair of identifiers");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    if (reduce) covers = reduce_covers(elements, covers);
    return Poset::from_covers(std::move(elements), covers);
}

Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

Poset load_poset(const std::filesystem::path& path, bool reduce) {
    return poset_from_json(load_json(path), reduce);
}

CoverAssignment cover_assignment_from_json(const Poset& poset, const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("cover_values") || !j.at("ring").is_string() ||
        !j.at("cover_values").is_array())
        throw ParseError("function JSON needs \"ring\" (string) and \"cover_values\" (array)");
    CoverAssignment a{Ring::parse(j.at("ring").get<std::string>()), {}};
    a.values.assign(poset.covers().size(), 0);
    std::vector<char> seen(poset.covers().size(), 0);
    for (const auto& entry : j.at("cover_values")) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string())
            throw ParseError("each cover value must be [lower, upper, value]");
        const auto lo = entry[0].get<std::string>();
        const auto hi = entry[1].get<std::string>();
        const auto x = poset.find(lo);
        const auto y = poset.find(hi);
        if (!x || !y) throw ParseError("cover value names an unknown element ('" + lo + "', '" + hi + "')");
        const auto idx = poset.cover_index(*x, *y);
        if (!idx) throw ParseError("('" + lo + "', '" + hi + "') is not a cover edge");
        auto& flag = seen[static_cast<std::size_t>(*idx)];
        if (flag) throw ParseError("cover ('" + lo + "', '" + hi + "') assigned twice");
        flag = 1;
        try {
            a.values[static_cast<std::size_t>(*idx)] = a.ring.reduce(scalar_from_json(entry[2]));
        } catch (const std::domain_error& e) {
            throw ParseError(e.what());
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            const auto& e = poset.covers()[i];
            throw ParseError("missing value for cover ('" + poset.name(e.lower) + "', '" + poset.name(e.upper) + "')");
        }
    }
    return a;
}

Json cover_assignment_to_json(const Poset& poset, const Ring& ring, const std::vector<mpq_class>& values) {
    Json cv = Json::array();
    for (std::size_t i = 0; i < poset.covers().size(); ++i) {
        const auto& e = poset.covers()[i];
        cv.push_back({poset.name(e.lower), poset.name(e.upper), scalar_to_json(values[i])});
    }
    return Json{{"ring", ring.to_string()}, {"cover_values", std::move(cv)}};
}

Json function_to_json(const Poset& poset, const TransitiveFunction& f) {
    return cover_assignment_to_json(poset, f.ring, f.cover_values(poset));
}

Json homology_to_json(const HomologySummary& h) {
    Json torsion = Json::array();
    for (const auto& t : h.torsion) torsion.push_back(integer_to_json(t));
    return Json{{"dim", h.dim}, {"betti", h.betti}, {"torsion", std::move(torsion)}};
}

Json verdict_to_json(const ConclusiveVerdict& v) {
    return Json{{"soluble", v.soluble},
                {"defective_uct", v.defective_uct},
                {"conclusive_paper", v.conclusive_paper},
                {"interpretations_disagree", v.interpretations_disagree()}};
}

namespace {

Json stats_to_json(const ShapeStats& s) {
    return Json{{"vertex_count", s.vertex_count},   {"edge_count", s.edge_count},
                {"component_count", s.component_count}, {"height", s.height},
                {"minimal_count", s.minimal_count}, {"maximal_count", s.maximal_count},
                {"middle_count", s.middle_count}};
}

Json optional_bool(const std::optional<bool>& v) {
    if (!v) return Json("not-applicable");
    return Json(*v);
}

}  // namespace

Json criteria_to_json(const Poset& poset, const CriteriaReport& r, const std::optional<ConclusiveVerdict>& verdict) {
    (void)poset;
    Json co18{{"applicable", r.co18.applicable},
              {"satisfied", optional_bool(r.co18.satisfied)},
              {"bound", r.co18.bound ? scalar_to_json(*r.co18.bound) : Json(nullptr)}};
    Json conflict = nullptr;
    if (r.table2_case && verdict && !verdict->torsion1.empty()) {
        Json torsion = Json::array();
        for (const auto& t : verdict->torsion1) torsion.push_back(integer_to_json(t));
        conflict = Json{{"row", *r.table2_case}, {"torsion", std::move(torsion)}};
    }
    return Json{{"beat_point_free", r.beat_point_free},
                {"co18", std::move(co18)},
                {"size_bound", optional_bool(r.size_bound_ok)},
                {"table2_case", r.table2_case ? Json(*r.table2_case) : Json(nullptr)},
                {"table2_conflict", std::move(conflict)},
                {"crowns",
                 {{"crowns_found", r.crowns.crowns_found},
                  {"all_have_join_or_meet", r.crowns.all_have_join_or_meet},
                  {"max_n", r.crowns.max_n}}},
                {"conclusive_by_criterion", r.conclusive_by_criterion()}};
}

Json crowns_to_json(const Poset& poset, const std::vector<Crown>& crowns) {
    Json out = Json::array();
    for (const auto& c : crowns) {
        Json lower = Json::array(), upper = Json::array();
        for (int v : c.lower) lower.push_back(poset.name(v));
        for (int v : c.upper) upper.push_back(poset.name(v));
        const auto jm = join_meet(poset, c.elements());
        out.push_back({{"n", c.order()},
                       {"lower", std::move(lower)},
                       {"upper", std::move(upper)},
                       {"join", jm.join ? Json(poset.name(*jm.join)) : Json(nullptr)},
                       {"meet", jm.meet ? Json(poset.name(*jm.meet)) : Json(nullptr)}});
    }
    return out;
}

Json sweep_to_json(const SweepReport& r, bool include_elapsed) {
    Json counts = Json::array();
    for (const auto& c : r.counts_by_n) {
        Json outer = Json::object();
        for (std::size_t i = 0; i < sweep_rings().size(); ++i) outer[sweep_rings()[i]] = c.outer_exists[i];
        counts.push_back({{"n", c.n},
                          {"posets", c.posets},
                          {"soluble", c.soluble},
                          {"defective", c.defective},
                          {"inconclusive", c.inconclusive},
                          {"outer_exists", std::move(outer)}});
    }
    Json j{{"max_n", r.max_n},
           {"counts_by_n", std::move(counts)},
           {"inconclusive_found", r.inconclusive_found},
           {"identity_failures", r.identity_failures},
           {"ok", r.ok()}};
    if (include_elapsed) j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::string canonical_hash(const Poset& poset) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical_form(poset)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

AnalysisReport analyze(const Poset& poset, const AnalyzeOptions& options) {
    std::vector<Ring> rings;
    for (const auto& name : options.rings) {
        Ring k = Ring::parse(name);
        if (k.kind() != Ring::Kind::rationals && !k.is_field())
            throw UnsupportedRingError("the rank criterion is undefined over " + k.to_string() +
                                       "; use q or gf:<prime>, or read conclusiveness from the homology section");
        rings.push_back(k);
    }

    AnalysisReport r;
    r.stats = shape_stats(poset);
    const auto form = canonical_form(poset);
    r.canonical_form_hex = to_hex(form);
    r.canonical_hash = canonical_hash(poset);
    r.homology = homology(poset, 1);
    r.verdict = classify(poset);

    const auto cm = consistency_matrix(poset, options.path_limit);
    const auto divisors = smith_divisors(cm.matrix);
    for (std::size_t i = 0; i < rings.size(); ++i) {
        DerivationDims d;
        d.der_dim = r.stats.edge_count - rank_from_divisors(divisors, rings[i]);
        d.pot_dim = r.stats.vertex_count - r.stats.component_count;
        r.rings.push_back({rings[i].to_string(), d});
    }
    r.criteria = evaluate_criteria(poset, options.crown_max_n);
    if (options.witness_prime) {
        r.witness_prime = options.witness_prime;
        r.witness = outer_witness(poset, *options.witness_prime, options.path_limit);
    }
    return r;
}

Json report_to_json(const Poset& poset, const AnalysisReport& r) {
    Json rings = Json::array();
    for (const auto& rr : r.rings)
        rings.push_back({{"ring", rr.ring},
                         {"der_dim", rr.dims.der_dim},
                         {"pot_dim", rr.dims.pot_dim},
                         {"outer_exists", rr.dims.outer_exists()}});
    Json j{{"poset",
            {{"stats", stats_to_json(r.stats)},
             {"canonical_form", r.canonical_form_hex},
             {"canonical_hash", r.canonical_hash}}},
           {"homology", homology_to_json(r.homology)},
           {"rings", std::move(rings)},
           {"conclusiveness", verdict_to_json(r.verdict)},
           {"criteria", criteria_to_json(poset, r.criteria, r.verdict)}};
    if (r.witness_prime) {
        j["witness"] = Json{{"prime", *r.witness_prime},
                            {"function", r.witness ? function_to_json(poset, *r.witness) : Json(nullptr)},
                            {"unique", false}};
    }
    return j;
}

Json verify_derivation(const Poset& poset, const CoverAssignment& assignment) {
    auto f = from_cover_values(poset, assignment.ring, assignment.values);
    if (!f) return Json{{"transitive", false}, {"potential", false}, {"phi", nullptr}};
    auto phi = is_potential(poset, *f);
    Json phi_json = nullptr;
    if (phi) {
        phi_json = Json::object();
        for (std::size_t v = 0; v < poset.size(); ++v) phi_json[poset.elements()[v]] = scalar_to_json((*phi)[v]);
    }
    return Json{{"transitive", true}, {"potential", phi.has_value()}, {"phi", std::move(phi_json)}};
}

Json witness_json(const Poset& poset, std::uint64_t p, std::size_t path_limit) {
    auto w = outer_witness(poset, p, path_limit);
    return Json{{"prime", p}, {"witness", w ? function_to_json(poset, *w) : Json(nullptr)}};
}

Json fixture_json(const std::string& name) {
    if (name == "table1")
        return cover_assignment_to_json(fixtures::rp2(), Ring::mod_ring(2), fixtures::table1_cover_values());
    return poset_to_json(fixtures::by_name(name));
}

}  // namespace posetder
