#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "posetder/criteria.hpp"
#include "posetder/derivations.hpp"
#include "posetder/homology.hpp"
#include "posetder/linalg.hpp"
#include "posetder/poset.hpp"
#include "posetder/survey.hpp"

namespace posetder {

using Json = nlohmann::json;

// Exact scalars: integers as JSON numbers when they fit in 64 bits,
// everything else as "p/q" or decimal strings.
Json scalar_to_json(const mpq_class& v);
mpq_class scalar_from_json(const Json& j);
Json integer_to_json(const mpz_class& v);

// {"elements": [...], "covers": [[lower, upper], ...]}
Json poset_to_json(const Poset& poset);
// Throws ParseError for schema problems; poset validation errors propagate.
// With reduce=true redundant transitive pairs are removed before validation.
Poset poset_from_json(const Json& j, bool reduce = false);
Poset load_poset(const std::filesystem::path& path, bool reduce = false);
Json load_json(const std::filesystem::path& path);

struct CoverAssignment {
    Ring ring;
    std::vector<mpq_class> values;  // indexed like poset.covers()
};

// {"ring": "mod:2", "cover_values": [[lower, upper, value], ...]}. Every
// cover edge must appear exactly once.
CoverAssignment cover_assignment_from_json(const Poset& poset, const Json& j);
Json cover_assignment_to_json(const Poset& poset, const Ring& ring, const std::vector<mpq_class>& values);
Json function_to_json(const Poset& poset, const TransitiveFunction& f);

Json homology_to_json(const HomologySummary& h);
Json verdict_to_json(const ConclusiveVerdict& v);
Json criteria_to_json(const Poset& poset, const CriteriaReport& r, const std::optional<ConclusiveVerdict>& verdict);
Json crowns_to_json(const Poset& poset, const std::vector<Crown>& crowns);
Json sweep_to_json(const SweepReport& r, bool include_elapsed = true);

std::string canonical_hash(const Poset& poset);

struct AnalyzeOptions {
    std::vector<std::string> rings{"q", "gf:2", "gf:3"};
    std::size_t path_limit = kDefaultPathLimit;
    std::optional<std::uint64_t> witness_prime;
    int crown_max_n = 6;
};

struct RingResult {
    std::string ring;
    DerivationDims dims;
};

struct AnalysisReport {
    ShapeStats stats;
    std::string canonical_form_hex;
    std::string canonical_hash;
    HomologySummary homology;
    std::vector<RingResult> rings;
    ConclusiveVerdict verdict;
    CriteriaReport criteria;
    std::optional<std::uint64_t> witness_prime;
    std::optional<TransitiveFunction> witness;
};

// Throws UnsupportedRingError for rings without a rank (composite moduli)
// and PathLimitExceeded.
AnalysisReport analyze(const Poset& poset, const AnalyzeOptions& options = {});
Json report_to_json(const Poset& poset, const AnalysisReport& report);

// {"transitive": bool, "potential": bool, "phi": {...} | null}
Json verify_derivation(const Poset& poset, const CoverAssignment& assignment);
Json witness_json(const Poset& poset, std::uint64_t p, std::size_t path_limit = kDefaultPathLimit);

// Poset and function fixtures by name, including "table1".
Json fixture_json(const std::string& name);

}  // namespace posetder
