#include "posetder/survey.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "posetder/derivations.hpp"
#include "posetder/errors.hpp"
#include "posetder/homology.hpp"

namespace posetder {

namespace {

// below[v] is the bitmask of elements strictly below v.
struct SmallPoset {
    std::vector<std::uint32_t> below;

    std::size_t size() const { return below.size(); }

    std::vector<std::uint8_t> relation() const {
        const std::size_t n = size();
        std::vector<std::uint8_t> rel(n * n, 0);
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) rel[x * n + y] = static_cast<std::uint8_t>((below[y] >> x) & 1u);
        return rel;
    }

    bool is_down_closed(std::uint32_t mask) const {
        for (std::size_t v = 0; v < size(); ++v)
            if (((mask >> v) & 1u) && (below[v] & ~mask)) return false;
        return true;
    }
};

void check_size(int n) {
    if (n < 1 || n > kMaxSurveySize)
        throw SizeLimitError("poset enumeration supports 1 <= n <= " + std::to_string(kMaxSurveySize) + ", got " +
                             std::to_string(n));
}

// Every poset on n elements is a poset on n-1 elements plus a maximal
// element sitting above a down-closed subset.
std::vector<std::vector<SmallPoset>> generate_levels(int max_n) {
    std::vector<std::vector<SmallPoset>> levels;
    levels.push_back({SmallPoset{{0u}}});
    for (int k = 2; k <= max_n; ++k) {
        std::vector<SmallPoset> next;
        std::unordered_set<std::string> seen;
        const std::uint32_t subsets = 1u << (k - 1);
        for (const auto& parent : levels.back()) {
            for (std::uint32_t mask = 0; mask < subsets; ++mask) {
                if (!parent.is_down_closed(mask)) continue;
                SmallPoset child = parent;
                child.below.push_back(mask);
                if (seen.insert(canonical_form(child.size(), child.relation())).second) next.push_back(std::move(child));
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

Poset to_poset(const SmallPoset& s) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) names.push_back("v" + std::to_string(i + 1));
    return Poset::from_order(std::move(names), s.relation());
}

struct PosetResult {
    bool soluble = false;
    bool defective = false;
    bool inconclusive = false;
    std::vector<bool> outer;
    std::string failure;
    std::string canonical_hex;
};

struct IdentityParts {
    std::vector<long> der_minus_pot;
    std::vector<long> homology_count;
};

IdentityParts identity_parts(const Poset& poset, const ConclusiveVerdict& verdict) {
    const auto cm = consistency_matrix(poset);
    const auto divisors = smith_divisors(cm.matrix);
    const auto stats = shape_stats(poset);
    IdentityParts parts;
    for (const auto& name : sweep_rings()) {
        const Ring k = Ring::parse(name);
        const std::size_t der = stats.edge_count - rank_from_divisors(divisors, k);
        const std::size_t pot = stats.vertex_count - stats.component_count;
        parts.der_minus_pot.push_back(static_cast<long>(der) - static_cast<long>(pot));
        long h = static_cast<long>(verdict.betti1);
        if (k.kind() != Ring::Kind::rationals) {
            const mpz_class p(static_cast<unsigned long>(k.modulus()));
            h += static_cast<long>(std::count_if(verdict.torsion1.begin(), verdict.torsion1.end(),
                                                        [&](const mpz_class& t) {
                                                            return mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t()) != 0;
                                                        }));
        }
        parts.homology_count.push_back(h);
    }
    return parts;
}

std::string describe_failure(const IdentityParts& parts) {
    for (std::size_t i = 0; i < parts.der_minus_pot.size(); ++i)
        if (parts.der_minus_pot[i] != parts.homology_count[i])
            return "over " + sweep_rings()[i] + ": der - pot = " + std::to_string(parts.der_minus_pot[i]) +
                   " but homology predicts " + std::to_string(parts.homology_count[i]);
    return {};
}

PosetResult analyse_one(const Poset& poset) {
    PosetResult r;
    const auto verdict = classify(poset);
    r.soluble = verdict.soluble;
    r.defective = verdict.defective_uct;
    r.inconclusive = !verdict.conclusive_paper;
    const auto parts = identity_parts(poset, verdict);
    for (std::size_t i = 0; i < parts.der_minus_pot.size(); ++i) r.outer.push_back(parts.der_minus_pot[i] > 0);
    r.failure = describe_failure(parts);
    if (r.inconclusive || !r.failure.empty()) r.canonical_hex = to_hex(canonical_form(poset));
    return r;
}

}  // namespace

std::string to_hex(const std::string& bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

const std::vector<std::string>& sweep_rings() {
    static const std::vector<std::string> rings = {"q", "gf:2", "gf:3"};
    return rings;
}

std::vector<Poset> enumerate_posets(int n) {
    check_size(n);
    auto levels = generate_levels(n);
    std::vector<Poset> out;
    out.reserve(levels.back().size());
    for (const auto& s : levels.back()) out.push_back(to_poset(s));
    return out;
}

std::vector<std::vector<Poset>> enumerate_posets_up_to(int max_n) {
    check_size(max_n);
    auto levels = generate_levels(max_n);
    std::vector<std::vector<Poset>> out;
    for (const auto& level : levels) {
        auto& dst = out.emplace_back();
        dst.reserve(level.size());
        for (const auto& s : level) dst.push_back(to_poset(s));
    }
    return out;
}

std::string cross_module_identity_failure(const Poset& poset) {
    return describe_failure(identity_parts(poset, classify(poset)));
}

SweepReport sweep(int max_n, int parallelism, const SweepProgress& progress) {
    check_size(max_n);
    const auto start = std::chrono::steady_clock::now();
    const auto levels = enumerate_posets_up_to(max_n);
    const unsigned workers = static_cast<unsigned>(std::max(1, parallelism));

    SweepReport report;
    report.max_n = max_n;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const auto& posets = levels[li];
        std::vector<PosetResult> results(posets.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < posets.size(); i = next++) results[i] = analyse_one(posets[i]);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();

        SweepCounts c;
        c.n = static_cast<int>(li) + 1;
        c.posets = posets.size();
        c.outer_exists.assign(sweep_rings().size(), 0);
        for (const auto& r : results) {
            c.soluble += r.soluble;
            c.defective += r.defective;
            c.inconclusive += r.inconclusive;
            for (std::size_t k = 0; k < r.outer.size(); ++k) c.outer_exists[k] += r.outer[k];
            if (r.inconclusive) report.inconclusive_found.push_back(r.canonical_hex);
            if (!r.failure.empty()) report.identity_failures.push_back(r.canonical_hex + ": " + r.failure);
        }
        report.counts_by_n.push_back(std::move(c));
        if (progress) progress(static_cast<int>(li) + 1, posets.size(), posets.size());
    }
    std::sort(report.inconclusive_found.begin(), report.inconclusive_found.end());
    std::sort(report.identity_failures.begin(), report.identity_failures.end());
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace posetder
