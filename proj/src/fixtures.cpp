#include "posetder/fixtures.hpp"

#include <charconv>

#include "posetder/errors.hpp"

namespace posetder::fixtures {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

int parse_param(std::string_view name, std::string_view param, int min) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), v);
    if (param.empty() || ec != std::errc() || ptr != param.data() + param.size() || v < min)
        throw UnknownFixtureError("bad fixture parameter in '" + std::string(name) + "'");
    return v;
}

}  // namespace

Poset rp2() {
    std::vector<std::string> elements{"n1", "n2", "n3", "a1", "a2", "a3", "a4", "a5", "a6", "m1", "m2", "m3", "m4"};
    Pairs covers{
        {"n1", "a1"}, {"n1", "a2"}, {"n1", "a3"}, {"n1", "a5"},
        {"n2", "a2"}, {"n2", "a3"}, {"n2", "a4"}, {"n2", "a6"},
        {"n3", "a1"}, {"n3", "a4"}, {"n3", "a5"}, {"n3", "a6"},
        {"a1", "m1"}, {"a2", "m1"}, {"a6", "m1"},
        {"a1", "m2"}, {"a3", "m2"}, {"a4", "m2"},
        {"a2", "m3"}, {"a4", "m3"}, {"a5", "m3"},
        {"a3", "m4"}, {"a5", "m4"}, {"a6", "m4"},
    };
    return Poset::from_covers(std::move(elements), covers);
}

std::vector<mpq_class> table1_cover_values() {
    const Poset p = rp2();
    const Pairs ones{{"a1", "m1"}, {"a5", "m4"}, {"n1", "a1"}, {"n1", "a3"},
                     {"n3", "a1"}, {"n3", "a4"}, {"n3", "a5"}};
    std::vector<mpq_class> values(p.covers().size(), 0);
    for (const auto& [lo, hi] : ones) values[static_cast<std::size_t>(*p.cover_index(p.index_of(lo), p.index_of(hi)))] = 1;
    return values;
}

std::vector<std::pair<std::string, std::vector<std::string>>> rp2_upper_cycles() {
    return {
        {"C1", {"a1", "m1", "a6", "m4", "a3", "m2", "a1"}},
        {"C2", {"a1", "m1", "a2", "m3", "a4", "m2", "a1"}},
        {"C3", {"a5", "m4", "a6", "m1", "a2", "m3", "a5"}},
    };
}

Poset crown(int n) {
    if (n < 2) throw UnknownFixtureError("crowns need n >= 2");
    auto elements = numbered("x", n);
    auto ys = numbered("y", n);
    elements.insert(elements.end(), ys.begin(), ys.end());
    Pairs covers;
    for (int i = 1; i <= n; ++i) {
        covers.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
        covers.emplace_back("x" + std::to_string(i), "y" + std::to_string(i % n + 1));
    }
    return Poset::from_covers(std::move(elements), covers);
}

Poset chain(int n) {
    auto elements = numbered("c", n);
    Pairs covers;
    for (int i = 1; i < n; ++i) covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    return Poset::from_covers(std::move(elements), covers);
}

Poset antichain(int n) {
    return Poset::from_covers(numbered("p", n), {});
}

Poset diamond() {
    return Poset::from_covers({"x", "a", "b", "y"}, {{"x", "a"}, {"a", "y"}, {"x", "b"}, {"b", "y"}});
}

Poset fence(int n) {
    auto elements = numbered("z", n);
    Pairs covers;
    for (int i = 1; i < n; ++i) {
        auto lo = "z" + std::to_string(i % 2 == 1 ? i : i + 1);
        auto hi = "z" + std::to_string(i % 2 == 1 ? i + 1 : i);
        covers.emplace_back(lo, hi);
    }
    return Poset::from_covers(std::move(elements), covers);
}

Poset s5() {
    std::vector<std::string> elements;
    Pairs covers;
    for (int level = 1; level <= 6; ++level) {
        for (char side : {'a', 'b'}) elements.push_back("s" + std::to_string(level) + side);
        if (level == 1) continue;
        for (char lo : {'a', 'b'})
            for (char hi : {'a', 'b'})
                covers.emplace_back("s" + std::to_string(level - 1) + lo, "s" + std::to_string(level) + hi);
    }
    return Poset::from_covers(std::move(elements), covers);
}

Poset by_name(std::string_view name) {
    if (name == "rp2") return rp2();
    if (name == "diamond") return diamond();
    if (name == "s5") return s5();
    const auto colon = name.find(':');
    if (colon != std::string_view::npos) {
        const auto kind = name.substr(0, colon);
        const auto param = name.substr(colon + 1);
        if (kind == "crown") return crown(parse_param(name, param, 2));
        if (kind == "chain") return chain(parse_param(name, param, 1));
        if (kind == "antichain") return antichain(parse_param(name, param, 1));
        if (kind == "fence") return fence(parse_param(name, param, 1));
    }
    throw UnknownFixtureError("unknown fixture '" + std::string(name) + "'");
}

const std::vector<std::string>& sample_names() {
    static const std::vector<std::string> names = {"rp2", "table1", "crown:2", "crown:3", "chain:4",
                                                   "antichain:3", "diamond", "s5", "fence:5"};
    return names;
}

}  // namespace posetder::fixtures
