#pragma once

// Test-only helpers. The oracles here are deliberately naive and share no
// code with the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "posetder/linalg.hpp"
#include "posetder/poset.hpp"

namespace testsupport {

inline std::filesystem::path source_dir() { return POSETDER_SOURCE_DIR; }
inline std::filesystem::path fixture_path(const std::string& name) { return source_dir() / "fixtures" / name; }

// Fraction-free Gaussian elimination over Z, rank over Q.
inline std::size_t bareiss_rank(const posetder::IntegerMatrix& a) {
    std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && m[piv][col] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            for (std::size_t c = col + 1; c < a.cols(); ++c) {
                mpz_class v = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = v;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// Plain row reduction modulo a prime.
inline std::size_t rank_mod_p(const posetder::IntegerMatrix& a, long p) {
    std::vector<std::vector<long>> m(a.rows(), std::vector<long>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            mpz_class v = a(r, c) % p;
            if (v < 0) v += p;
            m[r][c] = v.get_si();
        }
    auto inv = [p](long x) {
        long r = 1, e = p - 2;
        for (long b = x; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && m[piv][col] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[rank]);
        const long s = inv(m[rank][col]);
        for (auto& v : m[rank]) v = v * s % p;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const long f = m[r][col];
            for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline posetder::IntegerMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 6, long bound = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-bound, bound);
    posetder::IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
    return m;
}

// Random strict order: a random DAG on a shuffled linear order, closed.
inline posetder::Poset random_poset(std::mt19937& rng, std::size_t n, double density = 0.35) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(density);
    std::vector<std::uint8_t> rel(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) rel[static_cast<std::size_t>(order[i]) * n + static_cast<std::size_t>(order[j])] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rel[i * n + k] && rel[k * n + j]) rel[i * n + j] = 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return posetder::Poset::from_order(names, rel);
}

// Same poset with elements listed in the order given by perm (new position
// i holds old element perm[i]) and renamed.
inline posetder::Poset relabel(const posetder::Poset& p, const std::vector<int>& perm) {
    std::vector<int> where(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) where[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < perm.size(); ++i) names.push_back("r" + std::to_string(i) + "_" + p.name(perm[i]));
    std::vector<posetder::Edge> covers;
    for (const auto& e : p.covers()) covers.push_back({where[static_cast<std::size_t>(e.lower)], where[static_cast<std::size_t>(e.upper)]});
    std::shuffle(covers.begin(), covers.end(), std::mt19937(static_cast<unsigned>(perm.size())));
    return posetder::Poset::from_index_covers(names, covers);
}

// Number of non-isomorphic posets on n points by brute force over all
// relations, deduplicated by the lexicographically smallest relabeled
// relation matrix.
inline std::size_t brute_force_poset_count(int n) {
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) pairs.push_back({i, j});
    std::vector<std::vector<std::uint8_t>> seen;
    std::vector<int> perm(N);
    // each unordered pair: 0 none, 1 i<j, 2 j<i
    std::size_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> rel(N * N, 0);
        std::size_t c = code;
        for (const auto& [i, j] : pairs) {
            const std::size_t d = c % 3;
            c /= 3;
            if (d == 1) rel[i * N + j] = 1;
            if (d == 2) rel[j * N + i] = 1;
        }
        bool transitive = true;
        for (std::size_t a = 0; a < N && transitive; ++a)
            for (std::size_t b = 0; b < N && transitive; ++b)
                for (std::size_t d = 0; d < N && transitive; ++d)
                    if (rel[a * N + b] && rel[b * N + d] && !rel[a * N + d]) transitive = false;
        if (!transitive) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::uint8_t> best;
        do {
            std::vector<std::uint8_t> r(N * N);
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t b = 0; b < N; ++b)
                    r[static_cast<std::size_t>(perm[a]) * N + static_cast<std::size_t>(perm[b])] = rel[a * N + b];
            if (best.empty() || r < best) best = std::move(r);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(seen.begin(), seen.end(), best) == seen.end()) seen.push_back(std::move(best));
    }
    return seen.size();
}

// Hasse graph is a forest iff E = V - C; computed here by union-find.
inline bool hasse_is_forest(const posetder::Poset& p) {
    std::vector<int> parent(p.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& e : p.covers()) {
        const int a = find(e.lower), b = find(e.upper);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

}  // namespace testsupport
