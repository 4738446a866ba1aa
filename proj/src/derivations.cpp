#include "posetder/derivations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "posetder/errors.hpp"

namespace posetder {

std::vector<mpq_class> TransitiveFunction::cover_values(const Poset& poset) const {
    std::vector<mpq_class> out;
    out.reserve(poset.covers().size());
    for (const auto& e : poset.covers()) out.push_back(at(e.lower, e.upper));
    return out;
}

namespace {

class PathCollector {
public:
    PathCollector(const Poset& p, std::size_t limit) : p_(p), limit_(limit), paths_(p.size()) {}

    std::vector<std::vector<std::vector<int>>> from(int source) {
        for (auto& v : paths_) v.clear();
        path_.assign(1, source);
        walk(source);
        return std::move(paths_);
    }

private:
    void walk(int v) {
        for (int w : p_.upper_covers(v)) {
            path_.push_back(w);
            auto& bucket = paths_[static_cast<std::size_t>(w)];
            if (bucket.size() == limit_) throw PathLimitExceeded(p_.name(path_.front()), p_.name(w), limit_);
            bucket.push_back(path_);
            walk(w);
            path_.pop_back();
        }
    }

    const Poset& p_;
    std::size_t limit_;
    std::vector<std::vector<std::vector<int>>> paths_;
    std::vector<int> path_;
};

std::map<Edge, std::size_t> column_index(const Poset& poset) {
    std::map<Edge, std::size_t> col;
    for (std::size_t i = 0; i < poset.covers().size(); ++i) col.emplace(poset.covers()[i], i);
    return col;
}

}  // namespace

std::vector<ParallelPair> parallel_pairs(const Poset& poset, std::size_t path_limit) {
    if (path_limit == 0) throw InputError("path limit must be at least 1");
    std::vector<ParallelPair> out;
    for (int x = 0; static_cast<std::size_t>(x) < poset.size(); ++x) {
        auto paths = PathCollector(poset, path_limit).from(x);
        for (int z = 0; static_cast<std::size_t>(z) < poset.size(); ++z) {
            auto& bucket = paths[static_cast<std::size_t>(z)];
            for (std::size_t j = 1; j < bucket.size(); ++j) out.push_back({x, z, bucket.front(), bucket[j]});
        }
    }
    return out;
}

ConsistencyMatrix consistency_matrix(const Poset& poset, std::size_t path_limit) {
    ConsistencyMatrix cm;
    cm.column_edges = poset.covers();
    cm.row_pairs = parallel_pairs(poset, path_limit);
    const auto col = column_index(poset);
    cm.matrix = IntegerMatrix(cm.row_pairs.size(), cm.column_edges.size());
    for (std::size_t r = 0; r < cm.row_pairs.size(); ++r) {
        const auto& pp = cm.row_pairs[r];
        for (std::size_t i = 0; i + 1 < pp.path_a.size(); ++i) cm.matrix(r, col.at({pp.path_a[i], pp.path_a[i + 1]})) += 1;
        for (std::size_t i = 0; i + 1 < pp.path_b.size(); ++i) cm.matrix(r, col.at({pp.path_b[i], pp.path_b[i + 1]})) -= 1;
    }
    return cm;
}

IntegerMatrix cover_incidence(const Poset& poset) {
    IntegerMatrix b(poset.covers().size(), poset.size());
    for (std::size_t i = 0; i < poset.covers().size(); ++i) {
        const auto& e = poset.covers()[i];
        b(i, static_cast<std::size_t>(e.lower)) = -1;
        b(i, static_cast<std::size_t>(e.upper)) = 1;
    }
    return b;
}

DerivationDims der_pot_dims(const Poset& poset, const ConsistencyMatrix& m, const Ring& k) {
    const auto stats = shape_stats(poset);
    DerivationDims d;
    d.der_dim = stats.edge_count - rank_over(m.matrix, k);
    d.pot_dim = stats.vertex_count - stats.component_count;
    return d;
}

DerivationDims der_pot_dims(const Poset& poset, const Ring& k, std::size_t path_limit) {
    if (k.kind() != Ring::Kind::rationals && !k.is_field())
        throw UnsupportedRingError("the rank criterion needs q or gf:<prime>, not " + k.to_string() +
                                   "; use the homology classification instead");
    return der_pot_dims(poset, consistency_matrix(poset, path_limit), k);
}

bool has_outer_derivation(const Poset& poset, const Ring& k, std::size_t path_limit) {
    return der_pot_dims(poset, k, path_limit).outer_exists();
}

std::optional<TransitiveFunction> from_cover_values(const Poset& poset, const Ring& ring,
                                                    const std::vector<mpq_class>& cover_values) {
    if (cover_values.size() != poset.covers().size())
        throw DimensionError("expected one value per cover edge");
    const std::size_t n = poset.size();
    const auto col = column_index(poset);
    std::vector<mpq_class> val(n * n);
    std::vector<char> set(n * n, 0);

    auto assign = [&](int x, int z, const mpq_class& v) {
        const std::size_t at = static_cast<std::size_t>(x) * n + static_cast<std::size_t>(z);
        if (set[at]) return val[at] == v;
        val[at] = v;
        set[at] = 1;
        return true;
    };

    for (int z : poset.linear_extension()) {
        for (int y : poset.lower_covers(z)) {
            const mpq_class fyz = ring.reduce(cover_values[col.at({y, z})]);
            if (!assign(y, z, fyz)) return std::nullopt;
            for (int x = 0; static_cast<std::size_t>(x) < n; ++x) {
                if (!poset.less(x, y)) continue;
                const auto xy = static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y);
                if (!assign(x, z, ring.reduce(val[xy] + fyz))) return std::nullopt;
            }
        }
    }

    TransitiveFunction f;
    f.ring = ring;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            if (set[x * n + z]) f.values.emplace(std::pair{static_cast<int>(x), static_cast<int>(z)}, val[x * n + z]);
    return f;
}

std::optional<std::vector<mpq_class>> is_potential(const Poset& poset, const TransitiveFunction& f) {
    const auto b_values = f.cover_values(poset);
    mpz_class scale = 1;
    if (f.ring.kind() == Ring::Kind::rationals)
        for (const auto& v : b_values) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<mpz_class> rhs;
    rhs.reserve(b_values.size());
    for (const auto& v : b_values) {
        mpq_class scaled = v * scale;
        scaled.canonicalize();
        rhs.push_back(scaled.get_num());
    }

    auto sol = solve_linear(cover_incidence(poset), rhs, f.ring);
    if (!sol) return std::nullopt;
    auto& phi = *sol;
    for (auto& v : phi) v = f.ring.reduce(v / scale);

    const auto labels = component_labels(poset);
    std::vector<std::optional<mpq_class>> base(poset.size());
    for (std::size_t v = 0; v < poset.size(); ++v) {
        auto& anchor = base[static_cast<std::size_t>(labels[v])];
        if (!anchor) anchor = phi[v];
        phi[v] = f.ring.reduce(phi[v] - *anchor);
    }
    return phi;
}

TransitiveFunction potential_function(const Poset& poset, const Ring& ring, const std::vector<mpq_class>& phi) {
    if (phi.size() != poset.size()) throw DimensionError("expected one potential value per element");
    TransitiveFunction f;
    f.ring = ring;
    for (int x = 0; static_cast<std::size_t>(x) < poset.size(); ++x)
        for (int y = 0; static_cast<std::size_t>(y) < poset.size(); ++y)
            if (poset.less(x, y))
                f.values.emplace(std::pair{x, y},
                                 ring.reduce(phi[static_cast<std::size_t>(y)] - phi[static_cast<std::size_t>(x)]));
    return f;
}

mpq_class circulation(const TransitiveFunction& f, const std::vector<int>& walk) {
    if (walk.size() < 2 || walk.front() != walk.back())
        throw InputError("a cycle walk needs at least two entries and must end where it starts");
    mpq_class sum = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const int x = walk[i], y = walk[i + 1];
        if (auto it = f.values.find({x, y}); it != f.values.end()) {
            sum += it->second;
        } else if (auto jt = f.values.find({y, x}); jt != f.values.end()) {
            sum -= jt->second;
        } else {
            throw NotComparableError("walk step " + std::to_string(i) + " joins incomparable elements");
        }
    }
    return f.ring.reduce(sum);
}

std::optional<TransitiveFunction> outer_witness(const Poset& poset, std::uint64_t p, std::size_t path_limit) {
    const Ring field = Ring::prime_field(p);
    const auto cm = consistency_matrix(poset, path_limit);
    if (!der_pot_dims(poset, cm, field).outer_exists()) return std::nullopt;

    const Ring target = Ring::mod_ring(p);
    for (const auto& v : kernel_basis(cm.matrix, field)) {
        auto f = from_cover_values(poset, target, v);
        if (!f) throw std::logic_error("kernel vector of the consistency matrix is not transitive");
        if (!is_potential(poset, *f)) return f;
    }
    throw std::logic_error("derivation space exceeds potentials but every kernel vector is potential");
}

}  // namespace posetder
