#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace netmap;
using namespace testing_support;

namespace {

HurwitzStructureSet random_hs(std::mt19937_64& rng, Int m, Int n) {
    AGroup g(m, n);
    std::set<AElement> used;
    std::array<AElement, 4> elems;
    for (auto& h : elems) {
        do h = g.element(static_cast<int>(uniform(rng, 0, g.size() - 1)));
        while (used.count(g.pm_rep(h)));
        used.insert(g.pm_rep(h));
    }
    return make_structure_set({m, n}, elems);
}

NetMapPresentation euclidean(Int m, Int n) {
    NetMapPresentation p;
    p.a = IntMatrix2::diag(m, n);
    const Vec2 corners[4] = {{0, 0}, {m, 0}, {0, n}, {m, n}};
    for (int i = 0; i < 4; ++i) p.arcs[i] = {corners[i], corners[i]};
    return p;
}

std::vector<AElement> table(const SpecialAutomorphism& phi, Int m, Int n) {
    AGroup g(m, n);
    std::vector<AElement> out;
    for (int i = 0; i < g.size(); ++i) out.push_back(phi.apply(g.element(i), m, n));
    return out;
}

// orbit of hs under all special automorphisms and order-2 translations
std::set<HurwitzStructureSet> orbit(const HurwitzStructureSet& hs) {
    std::set<HurwitzStructureSet> out;
    Int m = hs.divisors.m, n = hs.divisors.n;
    for (const auto& phi : enumerate_special_automorphisms(m, n))
        for (AElement t : order_two_elements(m, n)) out.insert(apply(hs, phi, t));
    return out;
}

}  // namespace

TEST_CASE("structure set of the degree 6 fixture") {
    HurwitzStructureSet hs = hs_from_presentation(load_presentation("degree6.net"));
    CHECK(hs.divisors == ElementaryDivisors{6, 1});
    CHECK(to_string(hs) == "{±(1,0), ±(1,1), ±(2,0), ±(2,1)}");
}

TEST_CASE("Euclidean structure set is the image of the lattice") {
    for (auto [m, n] : std::vector<std::pair<Int, Int>>{{2, 1}, {3, 1}, {4, 2}, {3, 3}}) {
        HurwitzStructureSet hs = hs_from_presentation(euclidean(m, n));
        std::set<AElement> got(hs.pairs.begin(), hs.pairs.end());
        CHECK(got == std::set<AElement>{{0, 0}, {m, 0}, {0, n}, {m, n}});
    }
}

TEST_CASE("structure set of the degree 10 example") {
    NetMapPresentation p = load_presentation("degree10.net");
    HurwitzStructureSet hs = hs_from_presentation(p);
    AGroup g(p.a);
    std::set<AElement> expected;
    for (Vec2 v : {Vec2{0, 0}, Vec2{2, 0}, Vec2{0, 5}, Vec2{2, 3}}) expected.insert(g.pm_rep(g.coords(v)));
    CHECK(std::set<AElement>(hs.pairs.begin(), hs.pairs.end()) == expected);
}

TEST_CASE("make_structure_set rejects repeated classes") {
    CHECK_THROWS_AS(make_structure_set({3, 1}, {AElement{1, 0}, {5, 0}, {0, 1}, {2, 1}}), Error);
}

TEST_CASE("special automorphisms") {
    CHECK(enumerate_special_automorphisms(1, 1).size() == 6);
    for (auto [m, n] : std::vector<std::pair<Int, Int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}, {4, 2}}) {
        auto autos = enumerate_special_automorphisms(m, n);
        std::set<std::vector<AElement>> tables;
        for (const auto& phi : autos) tables.insert(table(phi, m, n));
        CHECK(tables.size() == autos.size());
        CHECK(tables.count(table(SpecialAutomorphism{}, m, n)) == 1);
        AGroup g(m, n);
        for (const auto& t1 : tables)
            for (const auto& t2 : tables) {
                std::vector<AElement> comp;
                for (int i = 0; i < g.size(); ++i) comp.push_back(t1[g.index(t2[i])]);
                REQUIRE(tables.count(comp) == 1);
            }
    }
}

TEST_CASE("special automorphisms of (Z/4)+(Z/2) match an exhaustive search") {
    std::set<std::vector<AElement>> brute;
    AGroup g(2, 1);
    for (Int a = 0; a < 4; ++a)
        for (Int b = 0; b < 4; b += 2)
            for (Int c = 0; c < 2; ++c)
                for (Int d = 0; d < 2; ++d) {
                    if (mod(a * d - b * c, 2) != 1) continue;
                    std::vector<AElement> t;
                    std::set<AElement> image;
                    for (int i = 0; i < g.size(); ++i) {
                        AElement h = g.element(i);
                        t.push_back({mod(a * h.x + b * h.y, 4), mod(c * h.x + d * h.y, 2)});
                        image.insert(t.back());
                    }
                    if (static_cast<int>(image.size()) == g.size()) brute.insert(t);
                }
    std::set<std::vector<AElement>> got;
    for (const auto& phi : enumerate_special_automorphisms(2, 1)) got.insert(table(phi, 2, 1));
    CHECK(got == brute);
}

TEST_CASE("canonical invariant examples") {
    HurwitzStructureSet hs = hs_from_presentation(load_presentation("degree6.net"));
    CHECK(canonical_hurwitz_invariant(apply(hs, SpecialAutomorphism{}, {6, 1})) == canonical_hurwitz_invariant(hs));
    std::mt19937_64 rng(3);
    SpecialAutomorphism shear{1, 2, 0, 1};
    for (int i = 0; i < 20; ++i) {
        HurwitzStructureSet h = random_hs(rng, 2, 1);
        CHECK(canonical_hurwitz_invariant(apply(h, shear, {0, 0})) == canonical_hurwitz_invariant(h));
    }
}

TEST_CASE("canonical invariant is constant on orbits") {
    std::mt19937_64 rng(17);
    const std::vector<std::pair<Int, Int>> shapes{{2, 1}, {3, 1}, {4, 1}, {2, 2}, {6, 1}, {4, 2}, {3, 3}, {9, 1}};
    for (int i = 0; i < 100; ++i) {
        auto [m, n] = shapes[i % shapes.size()];
        HurwitzStructureSet hs = random_hs(rng, m, n);
        HurwitzStructureSet canon = canonical_hurwitz_invariant(hs);
        auto autos = enumerate_special_automorphisms(m, n);
        auto twos = order_two_elements(m, n);
        for (int j = 0; j < 20; ++j) {
            const auto& phi = autos[uniform(rng, 0, static_cast<Int>(autos.size()) - 1)];
            AElement t = twos[uniform(rng, 0, 3)];
            REQUIRE(canonical_hurwitz_invariant(apply(hs, phi, t)) == canon);
        }
    }
}

TEST_CASE("hurwitz_equivalent") {
    std::mt19937_64 rng(23);
    NetMapPresentation p = load_presentation("degree10.net");
    CHECK(hurwitz_equivalent(p, p));
    for (int i = 0; i < 10; ++i) CHECK(hurwitz_equivalent(p, transform(p, random_lattice_affine(rng, p.a))));

    DynamicPortrait g = parse_portrait_json(read_file(data_path("degree4_portrait.json")));
    NetMapPresentation built = presentation_from_portrait(compact(g), 4, 1, ChoicePolicy::alternative);
    NetMapPresentation flat = euclidean(4, 1);
    auto o = orbit(hs_from_presentation(flat));
    bool brute = o.count(hs_from_presentation(built)) > 0;
    CHECK(hurwitz_equivalent(flat, built) == brute);
}

TEST_CASE("class counts") {
    CHECK(enumerate_hurwitz_classes(2, 1).size() == 3);
    CHECK(enumerate_hurwitz_classes(3, 1).size() == 9);
    CHECK(enumerate_hurwitz_classes(4, 2, 4).size() == 85);
    CHECK_THROWS_AS(enumerate_hurwitz_classes(1, 1), Error);
}

TEST_CASE("workers do not change the enumeration") {
    CHECK(enumerate_hurwitz_classes(6, 1, 1) == enumerate_hurwitz_classes(6, 1, 3));
}

TEST_CASE("the Euclidean class is enumerated exactly once") {
    for (Int d = 2; d <= 9; ++d)
        for (Int n = 1; n * n <= d; ++n) {
            if (d % (n * n) != 0) continue;
            Int m = d / n;
            HurwitzStructureSet e = canonical_hurwitz_invariant(hs_from_presentation(euclidean(m, n)));
            auto classes = enumerate_hurwitz_classes(m, n, 2);
            CHECK(std::count(classes.begin(), classes.end(), e) == 1);
        }
}

TEST_CASE("typical classes consist of NET maps") {
    for (auto [m, n] : std::vector<std::pair<Int, Int>>{{3, 1}, {4, 1}, {5, 1}, {6, 1}}) {
        for (const auto& hs : enumerate_hurwitz_classes(m, n, 2)) {
            std::array<int, 4> eta{0, 1, 2, 3};
            do {
                for (Int bx = 0; bx < 2; ++bx)
                    for (Int by = 0; by < 2; ++by)
                        REQUIRE(postcritical_set(standard_presentation(hs, eta, {bx, by})).size() == 4);
            } while (std::next_permutation(eta.begin(), eta.end()));
        }
    }
}

TEST_CASE("deck groups") {
    HurwitzStructureSet order_two = make_structure_set({2, 2}, {AElement{0, 0}, {1, 0}, {2, 0}, {1, 2}});
    DeckGroup g = deck_group(order_two);
    CHECK(g.order == 2);
    REQUIRE(g.generators.size() == 1);
    CHECK(g.generators[0] == AElement{2, 0});
    CHECK(deck_group(hs_from_presentation(load_presentation("deck_order2.net"))).order == 2);
    CHECK(deck_group(hs_from_presentation(euclidean(2, 2))).order == 4);
    CHECK(deck_group(hs_from_presentation(euclidean(4, 2))).order == 4);
    for (Int d : {3, 5, 7, 9})
        for (Int n = 1; n * n <= d; ++n) {
            if (d % (n * n) != 0) continue;
            for (const auto& hs : enumerate_hurwitz_classes(d / n, n, 2)) REQUIRE(deck_group(hs).order == 1);
        }
}

TEST_CASE("deck group structure") {
    std::mt19937_64 rng(29);
    const std::vector<std::pair<Int, Int>> shapes{{2, 1}, {4, 1}, {2, 2}, {4, 2}, {6, 1}, {6, 2}};
    for (int i = 0; i < 60; ++i) {
        auto [m, n] = shapes[i % shapes.size()];
        HurwitzStructureSet hs = random_hs(rng, m, n);
        DeckGroup g = deck_group(hs);
        REQUIRE(4 % g.order == 0);
        AGroup grp(m, n);
        for (AElement t : g.generators) {
            REQUIRE(grp.add(t, t) == AElement{0, 0});
            REQUIRE(apply(hs, SpecialAutomorphism{}, t) == hs);
        }
    }
}

TEST_CASE("lifting special automorphisms") {
    CHECK(lift_special_automorphism(1, 0, 0, 1, 6, 2) == IntMatrix2::identity());
    CHECK(lift_special_automorphism(3, 0, 0, 1, 4, 2) == IntMatrix2{3, 4, 2, 3});
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 500) {
        Int n = uniform(rng, 1, 4), m = n * uniform(rng, 1, 5);
        Int a = uniform(rng, 0, m - 1), b = (m / n) * uniform(rng, 0, n - 1), c = uniform(rng, 0, n - 1),
            d = uniform(rng, 0, n - 1);
        if (mod(a * d - b * c, n) != mod(1, n)) continue;
        std::set<std::pair<Int, Int>> image;
        for (Int x = 0; x < m; ++x)
            for (Int y = 0; y < n; ++y) image.insert({mod(a * x + b * y, m), mod(c * x + d * y, n)});
        if (static_cast<Int>(image.size()) != m * n) continue;
        IntMatrix2 l = lift_special_automorphism(a, b, c, d, m, n);
        REQUIRE(det2(l) == 1);
        REQUIRE(mod(l.a - a, m) == 0);
        REQUIRE(mod(l.b - b, m) == 0);
        REQUIRE(mod(l.c - c, n) == 0);
        REQUIRE(mod(l.d - d, n) == 0);
        ++checked;
    }
}
