#include "doctest.h"

#include <map>
#include <set>

#include "posetder/derivations.hpp"
#include "posetder/errors.hpp"
#include "posetder/fixtures.hpp"
#include "posetder/homology.hpp"
#include "posetder/survey.hpp"
#include "support.hpp"

using namespace posetder;
namespace fx = posetder::fixtures;

namespace {

std::vector<int> walk_of(const Poset& p, const std::vector<std::string>& ids) {
    std::vector<int> w;
    for (const auto& id : ids) w.push_back(p.index_of(id));
    return w;
}

mpq_class cover_value(const Poset& p, const std::vector<mpq_class>& values, const char* lo, const char* up) {
    return values[static_cast<std::size_t>(*p.cover_index(p.index_of(lo), p.index_of(up)))];
}

std::vector<mpq_class> potential_cover_values(const Poset& p, const std::vector<mpq_class>& phi) {
    std::vector<mpq_class> v;
    for (const auto& e : p.covers()) v.push_back(phi[static_cast<std::size_t>(e.upper)] - phi[static_cast<std::size_t>(e.lower)]);
    return v;
}

}  // namespace

TEST_CASE("parallel pairs") {
    const auto d = fx::diamond();
    const auto pairs = parallel_pairs(d);
    REQUIRE(pairs.size() == 1);
    CHECK(d.name(pairs[0].source) == "x");
    CHECK(d.name(pairs[0].target) == "y");
    std::set<std::string> middles{d.name(pairs[0].path_a[1]), d.name(pairs[0].path_b[1])};
    CHECK(middles == std::set<std::string>{"a", "b"});

    CHECK(parallel_pairs(fx::crown(2)).empty());

    const auto p = fx::rp2();
    const auto rp = parallel_pairs(p);
    CHECK(rp.size() == 12);
    std::set<std::pair<std::string, std::string>> ends;
    for (const auto& pp : rp) {
        ends.insert({p.name(pp.source), p.name(pp.target)});
        CHECK(pp.path_a.size() == 3);
        CHECK(pp.path_b.size() == 3);
        CHECK(pp.path_a[1] != pp.path_b[1]);
    }
    CHECK(ends.size() == 12);
}

TEST_CASE("path limit") {
    CHECK_THROWS_AS(parallel_pairs(fx::rp2(), 1), PathLimitExceeded);
    CHECK_NOTHROW(parallel_pairs(fx::rp2(), 2));
    try {
        consistency_matrix(fx::diamond(), 1);
        FAIL("expected PathLimitExceeded");
    } catch (const PathLimitExceeded& e) {
        CHECK(e.source == "x");
        CHECK(e.target == "y");
    }
    CHECK_THROWS_AS(der_pot_dims(fx::rp2(), Ring::rationals(), 1), PathLimitExceeded);
}

TEST_CASE("consistency matrix") {
    CHECK(consistency_matrix(fx::crown(2)).matrix.rows() == 0);
    CHECK(consistency_matrix(fx::crown(2)).matrix.cols() == 4);

    const auto d = fx::diamond();
    const auto cm = consistency_matrix(d);
    REQUIRE(cm.matrix.rows() == 1);
    REQUIRE(cm.matrix.cols() == 4);
    std::map<std::string, long> row;
    for (std::size_t c = 0; c < 4; ++c)
        row[d.name(cm.column_edges[c].lower) + d.name(cm.column_edges[c].upper)] = cm.matrix(0, c).get_si();
    CHECK(row["xa"] == row["ay"]);
    CHECK(row["xb"] == row["by"]);
    CHECK(row["xa"] == -row["xb"]);
    CHECK(std::abs(row["xa"]) == 1);

    // each rp2 row says f(n,a)+f(a,m) = f(n,a')+f(a',m)
    const auto p = fx::rp2();
    const auto m = consistency_matrix(p);
    CHECK(m.matrix.rows() == 12);
    for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
        int plus = 0, minus = 0;
        for (std::size_t c = 0; c < m.matrix.cols(); ++c) {
            if (m.matrix(r, c) == 1) ++plus;
            if (m.matrix(r, c) == -1) ++minus;
        }
        CHECK(plus == 2);
        CHECK(minus == 2);
    }
}

TEST_CASE("derivation dimensions") {
    for (const char* k : {"q", "gf:2", "gf:3", "mod:5"}) {
        const auto ring = Ring::parse(k);
        auto d = der_pot_dims(fx::diamond(), ring);
        CHECK(d.der_dim == 3);
        CHECK(d.pot_dim == 3);
        d = der_pot_dims(fx::crown(2), ring);
        CHECK(d.der_dim == 4);
        CHECK(d.pot_dim == 3);
        CHECK(has_outer_derivation(fx::crown(2), ring));
        CHECK(!has_outer_derivation(fx::chain(4), ring));
    }
    auto d = der_pot_dims(fx::rp2(), Ring::prime_field(2));
    CHECK(d.der_dim == 13);
    CHECK(d.pot_dim == 12);
    d = der_pot_dims(fx::rp2(), Ring::rationals());
    CHECK(d.der_dim == 12);
    CHECK(d.pot_dim == 12);
    CHECK(has_outer_derivation(fx::rp2(), Ring::prime_field(2)));
    for (std::uint64_t p : {3u, 5u, 7u}) CHECK(!has_outer_derivation(fx::rp2(), Ring::prime_field(p)));
    CHECK(!has_outer_derivation(fx::rp2(), Ring::rationals()));
    CHECK_THROWS_AS(der_pot_dims(fx::rp2(), Ring::mod_ring(4)), UnsupportedRingError);
    CHECK_THROWS_AS(der_pot_dims(fx::rp2(), Ring::integers()), UnsupportedRingError);
}

TEST_CASE("extension from cover values") {
    const auto p = fx::rp2();
    const auto zero = from_cover_values(p, Ring::rationals(), std::vector<mpq_class>(24, 0));
    REQUIRE(zero);
    for (const auto& [pair, v] : zero->values) CHECK(v == 0);
    CHECK(zero->values.size() == 36);

    const auto t1 = fx::table1_cover_values();
    CHECK(cover_value(p, t1, "a1", "m1") == 1);
    CHECK(cover_value(p, t1, "n3", "a5") == 1);
    CHECK(cover_value(p, t1, "a2", "m1") == 0);
    const auto f = from_cover_values(p, Ring::mod_ring(2), t1);
    REQUIRE(f);
    CHECK(f->at(p.index_of("n1"), p.index_of("m2")) == 1);

    const auto d = fx::diamond();
    std::vector<mpq_class> v(4, 0);
    v[static_cast<std::size_t>(*d.cover_index(d.index_of("x"), d.index_of("a")))] = 1;
    CHECK(!from_cover_values(d, Ring::mod_ring(2), v));
    CHECK_THROWS_AS(from_cover_values(d, Ring::mod_ring(2), std::vector<mpq_class>(3, 0)), InputError);
}

TEST_CASE("potential test") {
    const auto p = fx::rp2();
    const auto zero = from_cover_values(p, Ring::rationals(), std::vector<mpq_class>(24, 0));
    const auto phi0 = is_potential(p, *zero);
    REQUIRE(phi0);
    for (const auto& x : *phi0) CHECK(x == 0);

    const auto f = from_cover_values(p, Ring::mod_ring(2), fx::table1_cover_values());
    CHECK(!is_potential(p, *f));

    const auto c = Poset::from_covers({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    const auto g = from_cover_values(c, Ring::rationals(), {2, 3});
    const auto phi = is_potential(c, *g);
    REQUIRE(phi);
    CHECK(*phi == std::vector<mpq_class>{0, 2, 5});
    CHECK(g->at(0, 2) == 5);
}

TEST_CASE("circulation") {
    const auto p = fx::rp2();
    const auto f = *from_cover_values(p, Ring::mod_ring(2), fx::table1_cover_values());
    const auto cycles = fx::rp2_upper_cycles();
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].first == "C1");
    const auto c1 = walk_of(p, cycles[0].second);
    CHECK(circulation(f, c1) == 1);

    auto there_and_back = c1;
    there_and_back.insert(there_and_back.end(), c1.rbegin() + 1, c1.rend());
    CHECK(circulation(f, there_and_back) == 0);

    CHECK_THROWS_AS(circulation(f, walk_of(p, {"a1", "a2", "a1"})), NotComparableError);
    CHECK_THROWS_AS(circulation(f, walk_of(p, {"a1", "m1", "a2"})), InputError);
}

TEST_CASE("upper cycle space of rp2") {
    const auto p = fx::rp2();
    std::set<int> verts;
    std::size_t edges = 0;
    for (const auto& e : p.covers())
        if (p.name(e.upper)[0] == 'm') {
            ++edges;
            verts.insert(e.lower);
            verts.insert(e.upper);
        }
    CHECK(edges == 12);
    CHECK(verts.size() == 10);
    const std::vector<int> keep(verts.begin(), verts.end());
    const auto upper = p.induced(keep);
    CHECK(shape_stats(upper).component_count == 1);
    CHECK(edges - verts.size() + 1 == 3);
}

TEST_CASE("outer witnesses") {
    const auto p = fx::rp2();
    const auto w = outer_witness(p, 2);
    REQUIRE(w);
    CHECK(!is_potential(p, *w));
    bool nonzero = false;
    for (const auto& [name, ids] : fx::rp2_upper_cycles()) nonzero = nonzero || circulation(*w, walk_of(p, ids)) != 0;
    CHECK(nonzero);
    CHECK(!outer_witness(p, 3));

    const auto c2 = fx::crown(2);
    const auto wc = outer_witness(c2, 2);
    REQUIRE(wc);
    CHECK(!is_potential(c2, *wc));
    CHECK(circulation(*wc, walk_of(c2, {"x1", "y1", "x2", "y2", "x1"})) != 0);
    CHECK(!outer_witness(fx::chain(4), 2));
    CHECK_THROWS_AS(outer_witness(p, 4), UnsupportedRingError);
}

TEST_CASE("property: row soundness, extension agreement, potentials circulate to zero") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = testsupport::random_poset(rng, 2 + rng() % 7, 0.45);
        const auto cm = consistency_matrix(p);
        const auto& m = cm.matrix;
        CHECK(cm.column_edges == p.covers());

        std::vector<mpq_class> phi(p.size());
        for (auto& x : phi) x = val(rng);
        const auto pv = potential_cover_values(p, phi);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            mpq_class s = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) s += mpq_class(m(r, c)) * pv[c];
            CHECK(s == 0);
        }

        for (const char* k : {"q", "mod:2", "mod:3", "mod:4"}) {
            const auto ring = Ring::parse(k);
            std::vector<mpq_class> v(p.covers().size());
            for (auto& x : v) x = val(rng);
            bool in_kernel = true;
            for (std::size_t r = 0; r < m.rows(); ++r) {
                mpq_class s = 0;
                for (std::size_t c = 0; c < m.cols(); ++c) s += mpq_class(m(r, c)) * v[c];
                in_kernel = in_kernel && ring.is_zero(s);
            }
            CHECK(from_cover_values(p, ring, v).has_value() == in_kernel);
        }

        const auto g = potential_function(p, Ring::rationals(), phi);
        CHECK(is_potential(p, g).has_value());
        // closed walks along comparabilities
        for (int w = 0; w < 5; ++w) {
            std::vector<int> walk{static_cast<int>(rng() % p.size())};
            for (int step = 0; step < 6; ++step) {
                std::vector<int> nbrs;
                for (int y = 0; y < static_cast<int>(p.size()); ++y)
                    if (p.comparable(walk.back(), y)) nbrs.push_back(y);
                if (nbrs.empty()) break;
                walk.push_back(nbrs[rng() % nbrs.size()]);
            }
            if (walk.size() < 2 || !p.comparable(walk.back(), walk.front())) continue;
            walk.push_back(walk.front());
            CHECK(circulation(g, walk) == 0);
        }

        const auto dq = der_pot_dims(p, Ring::rationals());
        for (std::uint64_t q : {2u, 3u}) CHECK(der_pot_dims(p, Ring::prime_field(q)).der_dim >= dq.der_dim);
    }
}

TEST_CASE("property: no parallel pairs means outer derivations iff cycles") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_posets(n)) {
            if (!parallel_pairs(p).empty()) continue;
            CHECK(has_outer_derivation(p, Ring::rationals()) == !testsupport::hasse_is_forest(p));
        }
    for (int n = 1; n <= 6; ++n) CHECK(!has_outer_derivation(fx::fence(n), Ring::rationals()));
    for (int n = 2; n <= 5; ++n) CHECK(has_outer_derivation(fx::crown(n), Ring::rationals()));
}

TEST_CASE("property: gf(p) solution spaces match rank counts") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = testsupport::random_poset(rng, 3 + rng() % 6, 0.5);
        const auto m = consistency_matrix(p).matrix;
        for (long q : {2L, 3L}) {
            const auto basis = kernel_basis(m, Ring::prime_field(static_cast<std::uint64_t>(q)));
            CHECK(basis.size() == p.covers().size() - testsupport::rank_mod_p(m, q));
            CHECK(der_pot_dims(p, Ring::prime_field(static_cast<std::uint64_t>(q))).der_dim == basis.size());
        }
    }
}
