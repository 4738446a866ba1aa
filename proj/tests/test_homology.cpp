#include "doctest.h"

#include "posetder/errors.hpp"
#include "posetder/fixtures.hpp"
#include "posetder/homology.hpp"
#include "support.hpp"

using namespace posetder;
namespace fx = posetder::fixtures;

namespace {

std::vector<long> torsion(const HomologySummary& h) {
    std::vector<long> out;
    for (const auto& t : h.torsion) out.push_back(t.get_si());
    return out;
}

}  // namespace

TEST_CASE("order complex sizes") {
    const auto a = order_complex(fx::antichain(3));
    CHECK(a.count(0) == 3);
    CHECK(a.count(1) == 0);
    CHECK(a.count(2) == 0);

    const auto k = order_complex(fx::rp2());
    CHECK(k.count(0) == 13);
    CHECK(k.count(1) == 36);
    CHECK(k.count(2) == 24);

    const auto c = order_complex(fx::chain(3));
    CHECK(c.count(0) == 3);
    CHECK(c.count(1) == 3);
    CHECK(c.count(2) == 1);

    CHECK(order_complex(fx::chain(5)).top_dimension() == 2);
    CHECK(order_complex(fx::chain(5), -1).top_dimension() == 4);
}

TEST_CASE("simplices are lexicographic chains") {
    const auto p = fx::rp2();
    const auto k = order_complex(p);
    for (int d = 0; d <= k.top_dimension(); ++d) {
        const auto& s = k.simplices_by_dim[static_cast<std::size_t>(d)];
        CHECK(std::is_sorted(s.begin(), s.end()));
        for (const auto& simplex : s)
            for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
                CHECK(simplex[i] < simplex[i + 1]);
            }
    }
}

TEST_CASE("boundary matrices") {
    const auto edge = Poset::from_covers({"x", "y"}, {{"x", "y"}});
    const auto d1 = boundary_matrix(order_complex(edge), 1);
    CHECK(d1 == IntegerMatrix{{-1}, {1}});

    const auto c = order_complex(fx::chain(3));
    CHECK((boundary_matrix(c, 1) * boundary_matrix(c, 2)).is_zero());

    const auto k = order_complex(fx::rp2());
    const auto b1 = boundary_matrix(k, 1);
    const auto b2 = boundary_matrix(k, 2);
    CHECK(b1.rows() == 13);
    CHECK(b1.cols() == 36);
    CHECK(b2.rows() == 36);
    CHECK(b2.cols() == 24);
    CHECK((b1 * b2).is_zero());

    CHECK_THROWS_AS(boundary_matrix(k, 0), DimensionError);
    CHECK_THROWS_AS(boundary_matrix(k, 3), DimensionError);
}

TEST_CASE("first homology of fixtures") {
    auto h = homology(fx::crown(2), 1);
    CHECK(h.betti == 1);
    CHECK(h.torsion.empty());

    h = homology(fx::rp2(), 1);
    CHECK(h.betti == 0);
    CHECK(torsion(h) == std::vector<long>{2});

    h = homology(fx::chain(3), 1);
    CHECK(h.betti == 0);
    CHECK(h.torsion.empty());

    h = homology(fx::rp2(), 2);
    CHECK(h.betti == 0);
    CHECK(h.torsion.empty());

    h = homology(fx::antichain(4), 0);
    CHECK(h.betti == 4);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(order_complex(fx::chain(1))) == 1);
    CHECK(euler_characteristic(order_complex(fx::rp2())) == 1);
    CHECK(euler_characteristic(order_complex(fx::crown(2))) == 0);
    CHECK(euler_characteristic(order_complex(fx::s5(), -1)) == 0);
}

TEST_CASE("classification") {
    auto v = classify(fx::rp2());
    CHECK(!v.soluble);
    CHECK(!v.defective_uct);
    CHECK(!v.conclusive_paper);
    CHECK(!v.interpretations_disagree());

    v = classify(fx::crown(3));
    CHECK(v.defective_uct);
    CHECK(v.conclusive_paper);
    CHECK(v.betti1 == 1);

    v = classify(fx::chain(5));
    CHECK(v.soluble);
    CHECK(v.conclusive_paper);
}

TEST_CASE("property: homology invariants on random posets and fixtures") {
    std::mt19937 rng(31337);
    std::vector<Poset> posets;
    for (const auto& name : fx::sample_names())
        if (name != "table1") posets.push_back(fx::by_name(name));
    for (int trial = 0; trial < 150; ++trial) posets.push_back(testsupport::random_poset(rng, 1 + rng() % 8));

    for (const auto& p : posets) {
        const auto k = order_complex(p, -1);
        for (int d = 1; d < k.top_dimension(); ++d) CHECK((boundary_matrix(k, d) * boundary_matrix(k, d + 1)).is_zero());

        const auto s = shape_stats(p);
        CHECK(homology(p, 0).betti == s.component_count);
        CHECK(homology(p, 0).torsion.empty());

        const auto h1 = homology(p, 1);
        if (s.height <= 2) CHECK(h1.torsion.empty());

        std::vector<int> perm(p.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h1r = homology(testsupport::relabel(p, perm), 1);
        CHECK(h1r.betti == h1.betti);
        CHECK(h1r.torsion == h1.torsion);
    }
}
