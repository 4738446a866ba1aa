#include <algorithm>
#include <map>

#include "posetder/poset.hpp"

namespace posetder {

namespace {

// Individualization-refinement over the strict order. Colors are ranks of
// label-free signatures, so the set of leaves reached is an isomorphism
// invariant and the minimum leaf string is canonical.
class CanonicalSearch {
public:
    CanonicalSearch(std::size_t n, const std::vector<std::uint8_t>& rel) : n_(n), rel_(rel), below_(n), above_(n) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (rel[x * n + y]) {
                    below_[y].push_back(static_cast<int>(x));
                    above_[x].push_back(static_cast<int>(y));
                }
    }

    std::string run() {
        std::vector<int> colors(n_, 0);
        refine(colors);
        search(colors);
        return best_;
    }

private:
    static std::size_t rerank(std::vector<int>& colors, const std::vector<std::vector<int>>& keys) {
        std::map<std::vector<int>, int> rank;
        for (const auto& k : keys) rank.emplace(k, 0);
        int r = 0;
        for (auto& [k, v] : rank) v = r++;
        for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = rank[keys[i]];
        return rank.size();
    }

    void refine(std::vector<int>& colors) const {
        std::size_t cells = 0;
        std::vector<std::vector<int>> keys(n_);
        while (true) {
            for (std::size_t v = 0; v < n_; ++v) {
                auto& k = keys[v];
                k.clear();
                k.push_back(colors[v]);
                k.push_back(static_cast<int>(below_[v].size()));
                const auto mid = k.size();
                for (int w : below_[v]) k.push_back(colors[static_cast<std::size_t>(w)]);
                std::sort(k.begin() + static_cast<std::ptrdiff_t>(mid), k.end());
                const auto mid2 = k.size();
                for (int w : above_[v]) k.push_back(colors[static_cast<std::size_t>(w)]);
                std::sort(k.begin() + static_cast<std::ptrdiff_t>(mid2), k.end());
            }
            const std::size_t next = rerank(colors, keys);
            if (next == cells) return;
            cells = next;
        }
    }

    // Same strict up-set and down-set apart from each other.
    bool twins(int u, int v) const {
        for (std::size_t w = 0; w < n_; ++w) {
            if (static_cast<int>(w) == u || static_cast<int>(w) == v) continue;
            if (rel_[w * n_ + static_cast<std::size_t>(u)] != rel_[w * n_ + static_cast<std::size_t>(v)]) return false;
            if (rel_[static_cast<std::size_t>(u) * n_ + w] != rel_[static_cast<std::size_t>(v) * n_ + w]) return false;
        }
        return true;
    }

    void search(const std::vector<int>& colors) {
        std::vector<int> count(n_, 0);
        for (int c : colors) ++count[static_cast<std::size_t>(c)];
        int cell = -1;
        for (std::size_t c = 0; c < n_; ++c)
            if (count[c] > 1) {
                cell = static_cast<int>(c);
                break;
            }
        if (cell < 0) {
            leaf(colors);
            return;
        }
        // Swapping two twins is an automorphism fixing the current coloring,
        // so one branch per twin class suffices.
        std::vector<int> reps;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colors[v] != cell) continue;
            const int x = static_cast<int>(v);
            if (std::none_of(reps.begin(), reps.end(), [&](int r) { return twins(r, x); })) reps.push_back(x);
        }
        for (int v : reps) {
            std::vector<std::vector<int>> keys(n_);
            for (std::size_t u = 0; u < n_; ++u)
                keys[u] = {2 * colors[u] + ((colors[u] == cell && static_cast<int>(u) != v) ? 1 : 0)};
            std::vector<int> next(n_);
            rerank(next, keys);
            refine(next);
            search(next);
        }
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<std::size_t> at(n_);
        for (std::size_t v = 0; v < n_; ++v) at[static_cast<std::size_t>(colors[v])] = v;
        std::string s;
        s.reserve(4 + (n_ * n_ + 7) / 8);
        const auto n32 = static_cast<std::uint32_t>(n_);
        for (int shift = 24; shift >= 0; shift -= 8) s.push_back(static_cast<char>((n32 >> shift) & 0xffu));
        unsigned char byte = 0;
        int bits = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j) continue;
                byte = static_cast<unsigned char>((byte << 1) | rel_[at[i] * n_ + at[j]]);
                if (++bits == 8) {
                    s.push_back(static_cast<char>(byte));
                    byte = 0;
                    bits = 0;
                }
            }
        }
        if (bits > 0) s.push_back(static_cast<char>(byte << (8 - bits)));
        if (best_.empty() || s < best_) best_ = std::move(s);
    }

    std::size_t n_;
    const std::vector<std::uint8_t>& rel_;
    std::vector<std::vector<int>> below_;
    std::vector<std::vector<int>> above_;
    std::string best_;
};

}  // namespace

std::string canonical_form(std::size_t n, const std::vector<std::uint8_t>& relation) {
    if (n == 0) return std::string(4, '\0');
    return CanonicalSearch(n, relation).run();
}

std::string canonical_form(const Poset& poset) {
    return canonical_form(poset.size(), poset.relation());
}

}  // namespace posetder
