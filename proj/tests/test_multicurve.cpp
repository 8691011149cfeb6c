#include <doctest.h>

#include <algorithm>
#include <set>

#include "tightcalc/multicurve.hpp"
#include "tightcalc/slope.hpp"

using namespace tightcalc;
using namespace tightcalc::multicurve;

namespace {

using Vec = std::array<std::int64_t, 6>;

// Every vector on the grid [0, 2 max k]^3 x [0, max k]^3 that meets the
// three endpoint equations, in lexicographic order.
std::vector<Vec> brute_force(std::int64_t k1, std::int64_t k2, std::int64_t k3, bool bp) {
    const std::int64_t n = 2 * std::max({k1, k2, k3}), b = bp ? n / 2 : 0;
    std::vector<Vec> out;
    for (std::int64_t n12 = 0; n12 <= n; ++n12)
        for (std::int64_t n13 = 0; n13 <= n; ++n13)
            for (std::int64_t n23 = 0; n23 <= n; ++n23)
                for (std::int64_t b1 = 0; b1 <= b; ++b1)
                    for (std::int64_t b2 = 0; b2 <= b; ++b2)
                        for (std::int64_t b3 = 0; b3 <= b; ++b3)
                            if (n12 + n13 + 2 * b1 == 2 * k1 && n12 + n23 + 2 * b2 == 2 * k2 &&
                                n13 + n23 + 2 * b3 == 2 * k3)
                                out.push_back({n12, n13, n23, b1, b2, b3});
    return out;
}

std::vector<Vec> tuples(const std::vector<MulticurveCoordinates>& ms) {
    std::vector<Vec> out;
    for (const auto& m : ms) out.push_back(m.tuple());
    return out;
}

}  // namespace

TEST_CASE("enumerate small cases") {
    CHECK(tuples(enumerate({1, 1, 1}, false)) == std::vector<Vec>{{1, 1, 1, 0, 0, 0}});
    CHECK(tuples(enumerate({1, 1, 1}, true)) == std::vector<Vec>{{0, 0, 0, 1, 1, 1},
                                                               {0, 0, 2, 1, 0, 0},
                                                               {0, 2, 0, 0, 1, 0},
                                                               {1, 1, 1, 0, 0, 0},
                                                               {2, 0, 0, 0, 0, 1}});
    for (bool bp : {false, true}) CHECK(tuples(enumerate({0, 0, 0}, bp)) == std::vector<Vec>{{0, 0, 0, 0, 0, 0}});
    CHECK(count({1, 1, 1}, false) == 1);
    CHECK(count({1, 1, 1}, true) == 5);
    CHECK(count({2, 2, 2}, false) == 1);
    CHECK(enumerate({3, 1, 1}, false).empty());
}

TEST_CASE("tight candidates") {
    CHECK(is_tight_candidate(MulticurveCoordinates::parse("(1,1,1|0,0,0)")));
    CHECK_FALSE(is_tight_candidate(MulticurveCoordinates::parse("(2,0,0|0,0,1)")));
    CHECK(is_tight_candidate(MulticurveCoordinates{}));
}

TEST_CASE("enumeration matches an exhaustive solver for all k <= 10") {
    for (std::int64_t k1 = 0; k1 <= 10; ++k1)
        for (std::int64_t k2 = 0; k2 <= 10; ++k2)
            for (std::int64_t k3 = 0; k3 <= 10; ++k3) {
                BoundaryData bd{k1, k2, k3};
                auto tight = enumerate(bd, false);
                CHECK(tuples(tight) == brute_force(k1, k2, k3, false));
                bool triangle = k1 + k2 >= k3 && k1 + k3 >= k2 && k2 + k3 >= k1;
                CHECK(tight.size() == (triangle ? 1u : 0u));
                if (triangle) {
                    CHECK(tight[0].n12 == k1 + k2 - k3);
                    CHECK(tight[0].n13 == k1 + k3 - k2);
                    CHECK(tight[0].n23 == k2 + k3 - k1);
                }
                auto all = enumerate(bd, true);
                for (const auto& m : all) CHECK(satisfies_endpoints(bd, m));
                CHECK(count(bd, true) >= count(bd, false));
                CHECK(count(bd, true) == all.size());
                CHECK(std::is_sorted(all.begin(), all.end(),
                                     [](const auto& a, const auto& b) { return a.tuple() < b.tuple(); }));
            }
}

TEST_CASE("boundary-parallel enumeration matches the grid for small k") {
    for (std::int64_t k1 = 0; k1 <= 4; ++k1)
        for (std::int64_t k2 = 0; k2 <= 4; ++k2)
            for (std::int64_t k3 = 0; k3 <= 4; ++k3)
                CHECK(tuples(enumerate({k1, k2, k3}, true)) == brute_force(k1, k2, k3, true));
}

TEST_CASE("enumeration is equivariant under relabelling the boundary (property)") {
    // Boundary index permutation sigma acts on arc pairs {i, j} -> {sigma i, sigma j}.
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto pair_slot = [](int i, int j) {
        if (i > j) std::swap(i, j);
        return i == 0 ? (j == 1 ? 0 : 1) : 2;
    };
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (std::int64_t a = 0; a <= 5; ++a)
        for (std::int64_t b = 0; b <= 5; ++b)
            for (std::int64_t c = 0; c <= 5; ++c) {
                const std::array<std::int64_t, 3> k{a, b, c};
                for (const auto& sigma : perms) {
                    std::array<std::int64_t, 3> pk{};
                    for (int i = 0; i < 3; ++i) pk[sigma[i]] = k[i];
                    for (bool bp : {false, true}) {
                        std::set<Vec> expected;
                        for (const auto& m : enumerate({k[0], k[1], k[2]}, bp)) {
                            auto t = m.tuple();
                            Vec img{};
                            for (int s = 0; s < 3; ++s)
                                img[pair_slot(sigma[pairs[s].first], sigma[pairs[s].second])] = t[s];
                            for (int i = 0; i < 3; ++i) img[3 + sigma[i]] = t[3 + i];
                            expected.insert(img);
                        }
                        auto got = tuples(enumerate({pk[0], pk[1], pk[2]}, bp));
                        CHECK(std::set<Vec>(got.begin(), got.end()) == expected);
                    }
                }
            }
}

TEST_CASE("text forms") {
    auto bd = BoundaryData::parse("2, 3,4");
    CHECK(bd == BoundaryData{2, 3, 4});
    CHECK(bd.str() == "2,3,4");
    CHECK_THROWS_AS(BoundaryData::parse("1,2"), ParseError);
    CHECK_THROWS_AS(BoundaryData::parse("1,-2,3"), ParseError);

    for (const auto& m : enumerate({3, 2, 2}, true)) CHECK(MulticurveCoordinates::parse(m.str()) == m);
    CHECK(MulticurveCoordinates::parse("(2,0,0|0,0,1)").str() == "(2,0,0|0,0,1)");
    CHECK_THROWS_AS(MulticurveCoordinates::parse("(1,1,1)"), ParseError);
}
