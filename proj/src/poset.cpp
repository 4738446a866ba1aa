#include "posetder/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "posetder/errors.hpp"

namespace posetder {

namespace {

void check_identifiers(const std::vector<std::string>& elements,
                       std::unordered_map<std::string, int>& index) {
    index.clear();
    index.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& id = elements[i];
        if (id.empty()) throw InputError("element identifiers must be nonempty");
        for (unsigned char c : id)
            if (c < 0x20 || c == 0x7f) throw InputError("element identifier contains a control character");
        if (!index.emplace(id, static_cast<int>(i)).second)
            throw DuplicateError("duplicate element '" + id + "'");
    }
}

// Kahn's algorithm, smallest index first. Returns fewer than n entries when
// the cover graph has a directed cycle.
std::vector<int> topological_order(std::size_t n, const std::vector<std::vector<int>>& up,
                                   const std::vector<std::vector<int>>& down) {
    std::vector<std::size_t> pending(n);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v) {
        pending[v] = down[v].size();
        if (pending[v] == 0) ready.push(static_cast<int>(v));
    }
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : up[static_cast<std::size_t>(v)])
            if (--pending[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    return order;
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    std::unordered_map<std::string, int> index;
    check_identifiers(elements, index);
    std::vector<Edge> edges;
    edges.reserve(covers.size());
    for (const auto& [lo, hi] : covers) {
        auto a = index.find(lo);
        if (a == index.end()) throw UnknownElementError("unknown element '" + lo + "'");
        auto b = index.find(hi);
        if (b == index.end()) throw UnknownElementError("unknown element '" + hi + "'");
        edges.push_back({a->second, b->second});
    }
    return from_index_covers(std::move(elements), std::move(edges));
}

Poset Poset::from_index_covers(std::vector<std::string> elements, std::vector<Edge> covers) {
    Poset p;
    check_identifiers(elements, p.index_);
    const std::size_t n = elements.size();
    p.elements_ = std::move(elements);
    p.up_.assign(n, {});
    p.down_.assign(n, {});

    std::set<Edge> seen;
    for (const auto& e : covers) {
        if (e.lower < 0 || e.upper < 0 || static_cast<std::size_t>(e.lower) >= n ||
            static_cast<std::size_t>(e.upper) >= n)
            throw UnknownElementError("cover references an element index out of range");
        if (e.lower == e.upper) throw CycleError("self cover on '" + p.name(e.lower) + "'");
        if (!seen.insert(e).second)
            throw DuplicateError("duplicate cover ('" + p.name(e.lower) + "', '" + p.name(e.upper) + "')");
        p.up_[static_cast<std::size_t>(e.lower)].push_back(e.upper);
        p.down_[static_cast<std::size_t>(e.upper)].push_back(e.lower);
    }
    for (auto& v : p.up_) std::sort(v.begin(), v.end());
    for (auto& v : p.down_) std::sort(v.begin(), v.end());
    p.covers_ = std::move(covers);

    auto order = topological_order(n, p.up_, p.down_);
    if (order.size() != n) throw CycleError("covers contain a directed cycle");

    p.less_.assign(n * n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        for (int y : p.up_[x]) {
            p.less_[x * n + static_cast<std::size_t>(y)] = 1;
            for (std::size_t z = 0; z < n; ++z)
                if (p.less_[static_cast<std::size_t>(y) * n + z]) p.less_[x * n + z] = 1;
        }
    }

    for (const auto& e : p.covers_) {
        for (std::size_t z = 0; z < n; ++z) {
            if (p.less(e.lower, static_cast<int>(z)) && p.less(static_cast<int>(z), e.upper))
                throw NotReducedError("cover ('" + p.name(e.lower) + "', '" + p.name(e.upper) +
                                      "') is implied by a chain through '" + p.elements_[z] + "'");
        }
    }
    return p;
}

Poset Poset::from_order(std::vector<std::string> elements, const std::vector<std::uint8_t>& relation) {
    const std::size_t n = elements.size();
    if (relation.size() != n * n) throw InputError("relation size does not match element count");
    std::vector<Edge> covers;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!relation[x * n + y]) continue;
            bool between = false;
            for (std::size_t z = 0; z < n && !between; ++z)
                between = relation[x * n + z] && relation[z * n + y];
            if (!between) covers.push_back({static_cast<int>(x), static_cast<int>(y)});
        }
    }
    Poset p = from_index_covers(std::move(elements), std::move(covers));
    if (p.less_ != relation) throw InputError("relation is not a strict partial order");
    return p;
}

int Poset::index_of(std::string_view id) const {
    auto found = find(id);
    if (!found) throw UnknownElementError("unknown element '" + std::string(id) + "'");
    return *found;
}

std::optional<int> Poset::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Poset::cover_index(int lower, int upper) const {
    for (std::size_t i = 0; i < covers_.size(); ++i)
        if (covers_[i].lower == lower && covers_[i].upper == upper) return static_cast<int>(i);
    return std::nullopt;
}

Poset Poset::induced(std::span<const int> keep) const {
    const std::size_t k = keep.size();
    std::vector<std::string> names;
    names.reserve(k);
    for (int x : keep) names.push_back(name(x));
    std::vector<std::uint8_t> rel(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = less(keep[i], keep[j]) ? 1 : 0;
    return from_order(std::move(names), rel);
}

std::vector<int> Poset::linear_extension() const {
    return topological_order(size(), up_, down_);
}

std::vector<int> Crown::elements() const {
    std::vector<int> all(lower);
    all.insert(all.end(), upper.begin(), upper.end());
    return all;
}

Comparison compare(const Poset& poset, int x, int y) {
    if (x == y) return Comparison::equal;
    if (poset.less(x, y)) return Comparison::less;
    if (poset.less(y, x)) return Comparison::greater;
    return Comparison::incomparable;
}

Comparison compare(const Poset& poset, std::string_view x, std::string_view y) {
    return compare(poset, poset.index_of(x), poset.index_of(y));
}

std::vector<int> component_labels(const Poset& poset) {
    const std::size_t n = poset.size();
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        label[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto* nbrs : {&poset.upper_covers(v), &poset.lower_covers(v)}) {
                for (int w : *nbrs) {
                    if (label[static_cast<std::size_t>(w)] < 0) {
                        label[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
            }
        }
        ++next;
    }
    return label;
}

ShapeStats shape_stats(const Poset& poset) {
    ShapeStats s;
    const std::size_t n = poset.size();
    s.vertex_count = n;
    s.edge_count = poset.covers().size();
    auto labels = component_labels(poset);
    s.component_count = labels.empty() ? 0 : static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1);

    std::vector<std::size_t> chain_to(n, 1);
    for (int v : poset.linear_extension()) {
        for (int w : poset.lower_covers(v))
            chain_to[static_cast<std::size_t>(v)] =
                std::max(chain_to[static_cast<std::size_t>(v)], chain_to[static_cast<std::size_t>(w)] + 1);
        s.height = std::max(s.height, chain_to[static_cast<std::size_t>(v)]);
    }

    for (std::size_t v = 0; v < n; ++v) {
        const bool minimal = poset.lower_covers(static_cast<int>(v)).empty();
        const bool maximal = poset.upper_covers(static_cast<int>(v)).empty();
        s.minimal_count += minimal;
        s.maximal_count += maximal;
        s.middle_count += !minimal && !maximal;
    }
    return s;
}

std::vector<int> beat_points(const Poset& poset) {
    std::vector<int> out;
    for (std::size_t v = 0; v < poset.size(); ++v) {
        const int x = static_cast<int>(v);
        if (poset.lower_covers(x).size() == 1 || poset.upper_covers(x).size() == 1) out.push_back(x);
    }
    return out;
}

Poset core(const Poset& poset) {
    Poset current = poset;
    while (true) {
        auto beats = beat_points(current);
        if (beats.empty()) return current;
        std::vector<int> keep;
        keep.reserve(current.size() - 1);
        for (std::size_t v = 0; v < current.size(); ++v)
            if (static_cast<int>(v) != beats.front()) keep.push_back(static_cast<int>(v));
        current = current.induced(keep);
    }
}

namespace {

// Walks alternating lower/upper sequences x1 u1 x2 u2 ... and records each
// induced crown once: x1 is the smallest-index lower element and the two
// uppers adjacent to x1 appear with the smaller index first.
class CrownSearch {
public:
    CrownSearch(const Poset& p, int max_n) : p_(p), max_n_(max_n), used_(p.size(), 0) {}

    std::vector<Crown> run() {
        for (std::size_t x = 0; x < p_.size(); ++x) {
            push(static_cast<int>(x));
            extend_from_lower();
            pop();
        }
        return std::move(found_);
    }

private:
    void push(int v) {
        seq_.push_back(v);
        used_[static_cast<std::size_t>(v)] = 1;
    }
    void pop() {
        used_[static_cast<std::size_t>(seq_.back())] = 0;
        seq_.pop_back();
    }

    // Incomparable to everything chosen except the element just before it.
    bool isolated_from_earlier(int v, std::size_t skip_from) const {
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            if (i >= skip_from) continue;
            if (p_.comparable(v, seq_[i])) return false;
        }
        return true;
    }

    void extend_from_lower() {
        const int x = seq_.back();
        const int first = seq_.front();
        const std::size_t k = (seq_.size() + 1) / 2;
        for (int u = 0; static_cast<std::size_t>(u) < p_.size(); ++u) {
            if (used_[static_cast<std::size_t>(u)] || !p_.less(x, u)) continue;
            if (k >= 2 && p_.less(first, u)) {
                // u closes the cycle back to x1; it must avoid everything
                // else between x1 and x.
                bool ok = true;
                for (std::size_t i = 1; i + 1 < seq_.size() && ok; ++i) ok = !p_.comparable(u, seq_[i]);
                if (ok && seq_[1] < u) record(u);
                continue;
            }
            if (!isolated_from_earlier(u, seq_.size() - 1)) continue;
            if (static_cast<int>(k) >= max_n_) continue;
            push(u);
            extend_from_upper();
            pop();
        }
    }

    void extend_from_upper() {
        const int u = seq_.back();
        const int first = seq_.front();
        for (int x = first + 1; static_cast<std::size_t>(x) < p_.size(); ++x) {
            if (used_[static_cast<std::size_t>(x)] || !p_.less(x, u)) continue;
            if (!isolated_from_earlier(x, seq_.size() - 1)) continue;
            push(x);
            extend_from_lower();
            pop();
        }
    }

    void record(int closing_upper) {
        const std::size_t n = (seq_.size() + 1) / 2;
        Crown c;
        c.lower.resize(n);
        c.upper.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            c.lower[i] = seq_[2 * i];
            c.upper[(i + 1) % n] = (i + 1 == n) ? closing_upper : seq_[2 * i + 1];
        }
        found_.push_back(std::move(c));
    }

    const Poset& p_;
    int max_n_;
    std::vector<char> used_;
    std::vector<int> seq_;
    std::vector<Crown> found_;
};

}  // namespace

std::vector<Crown> find_crowns(const Poset& poset, int max_n) {
    if (max_n < 2) return {};
    return CrownSearch(poset, max_n).run();
}

bool is_induced_crown(const Poset& poset, const Crown& crown) {
    const std::size_t n = crown.order();
    if (n < 2 || crown.upper.size() != n) return false;
    auto all = crown.elements();
    std::set<int> distinct(all.begin(), all.end());
    if (distinct.size() != 2 * n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && (poset.comparable(crown.lower[i], crown.lower[j]) ||
                           poset.comparable(crown.upper[i], crown.upper[j])))
                return false;
            const bool adjacent = (j == i) || (j == (i + 1) % n);
            if (poset.less(crown.upper[j], crown.lower[i])) return false;
            if (poset.less(crown.lower[i], crown.upper[j]) != adjacent) return false;
        }
    }
    return true;
}

JoinMeet join_meet(const Poset& poset, std::span<const int> subset) {
    const int n = static_cast<int>(poset.size());
    std::vector<int> upper_bounds, lower_bounds;
    for (int v = 0; v < n; ++v) {
        bool up = true, down = true;
        for (int s : subset) {
            up = up && (s == v || poset.less(s, v));
            down = down && (s == v || poset.less(v, s));
        }
        if (up) upper_bounds.push_back(v);
        if (down) lower_bounds.push_back(v);
    }
    JoinMeet out;
    for (int u : upper_bounds) {
        if (std::all_of(upper_bounds.begin(), upper_bounds.end(),
                        [&](int w) { return w == u || poset.less(u, w); })) {
            out.join = u;
            break;
        }
    }
    for (int l : lower_bounds) {
        if (std::all_of(lower_bounds.begin(), lower_bounds.end(),
                        [&](int w) { return w == l || poset.less(w, l); })) {
            out.meet = l;
            break;
        }
    }
    return out;
}

JoinMeet join_meet(const Poset& poset, const std::vector<std::string>& subset) {
    std::vector<int> idx;
    idx.reserve(subset.size());
    for (const auto& id : subset) idx.push_back(poset.index_of(id));
    return join_meet(poset, idx);
}

std::vector<std::pair<std::string, std::string>> reduce_covers(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, int> index;
    check_identifiers(elements, index);
    const std::size_t n = elements.size();
    std::vector<std::vector<int>> up(n), down(n);
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (const auto& [lo, hi] : pairs) {
        auto a = index.find(lo);
        auto b = index.find(hi);
        if (a == index.end()) throw UnknownElementError("unknown element '" + lo + "'");
        if (b == index.end()) throw UnknownElementError("unknown element '" + hi + "'");
        if (a->second == b->second) throw CycleError("self relation on '" + lo + "'");
        Edge e{a->second, b->second};
        if (!seen.insert(e).second) continue;
        edges.push_back(e);
        up[static_cast<std::size_t>(e.lower)].push_back(e.upper);
        down[static_cast<std::size_t>(e.upper)].push_back(e.lower);
    }
    auto order = topological_order(n, up, down);
    if (order.size() != n) throw CycleError("relation contains a directed cycle");

    std::vector<std::uint8_t> rel(n * n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto x = static_cast<std::size_t>(*it);
        for (int y : up[x]) {
            rel[x * n + static_cast<std::size_t>(y)] = 1;
            for (std::size_t z = 0; z < n; ++z)
                if (rel[static_cast<std::size_t>(y) * n + z]) rel[x * n + z] = 1;
        }
    }
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : edges) {
        bool implied = false;
        for (std::size_t z = 0; z < n && !implied; ++z)
            implied = rel[static_cast<std::size_t>(e.lower) * n + z] && rel[z * n + static_cast<std::size_t>(e.upper)];
        if (!implied) out.emplace_back(elements[static_cast<std::size_t>(e.lower)], elements[static_cast<std::size_t>(e.upper)]);
    }
    return out;
}

}  // namespace posetder
