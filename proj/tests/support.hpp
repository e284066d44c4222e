#pragma once

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "netmap/hurwitz.hpp"
#include "netmap/io.hpp"
#include "netmap/modular.hpp"
#include "netmap/portrait.hpp"
#include "netmap/slope.hpp"

namespace testing_support {

using namespace netmap;

inline std::string data_path(const std::string& name) { return std::string(NETMAP_TEST_DATA) + "/" + name; }

inline NetMapPresentation load_presentation(const std::string& name) {
    return parse_presentation(read_file(data_path(name)));
}

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

// product of a few elementary matrices
inline IntMatrix2 random_sl2(std::mt19937_64& rng, int steps = 4, Int range = 3) {
    IntMatrix2 m = IntMatrix2::identity();
    for (int i = 0; i < steps; ++i) {
        Int k = uniform(rng, -range, range);
        m = m * (i % 2 == 0 ? IntMatrix2{1, k, 0, 1} : IntMatrix2{1, 0, k, 1});
    }
    return m;
}

inline IntMatrix2 random_positive_matrix(std::mt19937_64& rng, Int max_det) {
    for (;;) {
        IntMatrix2 m{uniform(rng, -40, 40), uniform(rng, -40, 40), uniform(rng, -40, 40), uniform(rng, -40, 40)};
        Int d = det2(m);
        if (d > 0 && d <= max_det) return m;
        if (d < 0 && -d <= max_det) return IntMatrix2{m.b, m.a, m.d, m.c};
    }
}

// A with the given determinant up to unimodular changes on both sides
inline IntMatrix2 random_lattice_matrix(std::mt19937_64& rng, Int degree) {
    std::vector<std::pair<Int, Int>> shapes;
    for (Int p = 1; p <= degree; ++p)
        if (degree % p == 0) shapes.push_back({p, degree / p});
    auto [p, r] = shapes[uniform(rng, 0, static_cast<Int>(shapes.size()) - 1)];
    IntMatrix2 h{p, 0, uniform(rng, 0, r - 1), r};
    return random_sl2(rng, 2, 2) * h * random_sl2(rng, 2, 2);
}

// random valid presentation with arcs at the four corner classes and four
// distinct ±-classes of terminals, all lifted by random 2Λ1 offsets
inline NetMapPresentation random_presentation(std::mt19937_64& rng, Int degree) {
    NetMapPresentation p;
    p.a = random_lattice_matrix(rng, degree);
    AGroup g(p.a);
    auto offset = [&] { return 2 * (p.a * Vec2{uniform(rng, -2, 2), uniform(rng, -2, 2)}); };
    const Vec2 corners[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::set<AElement> used;
    for (int i = 0; i < 4; ++i) {
        p.arcs[i].initial = p.a * corners[i] + offset();
        for (;;) {
            AElement h = g.element(static_cast<int>(uniform(rng, 0, g.size() - 1)));
            if (used.count(g.pm_rep(h))) continue;
            used.insert(g.pm_rep(h));
            p.arcs[i].terminal = g.q() * Vec2{h.x, h.y} + offset();
            break;
        }
    }
    p.b = p.a * Vec2{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    return p;
}

// x -> Mx + t with M = A U A⁻¹ for U in SL(2,Z) and t in Λ1
inline AffineMap random_lattice_affine(std::mt19937_64& rng, const IntMatrix2& a) {
    for (;;) {
        IntMatrix2 u = random_sl2(rng, 3, 2);
        IntMatrix2 num = a * u * adjugate(a);
        Int det = det2(a);
        if (num.a % det || num.b % det || num.c % det || num.d % det) continue;
        IntMatrix2 m{num.a / det, num.b / det, num.c / det, num.d / det};
        return {m, a * Vec2{uniform(rng, -3, 3), uniform(rng, -3, 3)}};
    }
}

inline NetMapPresentation transform(const NetMapPresentation& p, const AffineMap& psi) {
    NetMapPresentation q = p;
    for (auto& arc : q.arcs) {
        arc.initial = psi(arc.initial);
        arc.terminal = psi(arc.terminal);
    }
    q.b = psi(p.b);
    return q;
}

inline Slope random_slope(std::mt19937_64& rng, Int range = 6) {
    for (;;) {
        Int p = uniform(rng, -range, range), q = uniform(rng, 0, range);
        if ((p != 0 || q != 0) && std::gcd(p, q) == 1) return Slope(p, q);
    }
}

// Components and covering degree of the preimage of a slope-s curve under
// the Euclidean map of A, counted directly: the curve lifts to the lines
// det[v, x] = c for c in 1/2 + Z (c doubled to odd residues), two lines lie
// in one component when x -> 2λ ± x with λ in Λ1 carries one onto the other.
inline Multiplier brute_force_multiplier(const IntMatrix2& a, const Slope& s) {
    Vec2 v = s.direction();
    Int degree = det2(a);
    Int modulus = 4 * degree;
    auto omega = [&](Vec2 x) { return v.x * x.y - v.y * x.x; };
    Int shifts[2] = {4 * omega(a.col1()), 4 * omega(a.col2())};
    std::vector<Int> parent(modulus);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](Int x, Int y) { parent[find(x)] = find(y); };
    for (Int c = 1; c < modulus; c += 2) {
        for (Int sh : shifts) unite(c, mod(c + sh, modulus));
        unite(c, mod(-c, modulus));
    }
    std::set<Int> classes;
    for (Int c = 1; c < modulus; c += 2) classes.insert(find(c));
    Int k = 1;
    while (!lattice_contains(Lattice{a}, k * v)) ++k;
    return {static_cast<Int>(classes.size()), k};
}

// slope values of the Euclidean map of A on the given slopes and their
// images under the matrices in moves
inline SlopeOracle euclidean_oracle(const IntMatrix2& a, const std::vector<Slope>& seeds,
                                    const std::vector<IntMatrix2>& moves) {
    std::set<Slope> all(seeds.begin(), seeds.end());
    for (const Slope& s : seeds)
        for (const auto& m : moves) all.insert(matrix_on_slope(m, s));
    SlopeOracle oracle;
    for (const Slope& s : all) oracle.entries.push_back({s, euclidean_slope_map(a, s), euclidean_multiplier(a, s)});
    return oracle;
}

inline std::vector<Slope> small_slopes() {
    return {Slope(0, 1), Slope(1, 0), Slope(1, 1), Slope(-1, 1), Slope(2, 1), Slope(1, 2), Slope(-2, 1), Slope(3, 2)};
}

// positive parabolic generator fixing the slope p/q on directions
inline IntMatrix2 twist(const Slope& s) {
    Int p = s.p(), q = s.q();
    return {1 - q * p, q * q, -p * p, 1 + p * q};
}

inline IntMatrix2 power(IntMatrix2 m, Int k) {
    IntMatrix2 r = IntMatrix2::identity();
    if (k < 0) {
        m = unimodular_inverse(m);
        k = -k;
    }
    while (k-- > 0) r = r * m;
    return r;
}

// random element of Γ(2) as a word in the two standard generators and -I
inline IntMatrix2 random_gamma2(std::mt19937_64& rng, int letters) {
    IntMatrix2 m = uniform(rng, 0, 1) ? IntMatrix2::identity() : -IntMatrix2::identity();
    for (int i = 0; i < letters; ++i) {
        Int k = uniform(rng, -3, 3);
        m = m * (i % 2 == 0 ? IntMatrix2{1, 2 * k, 0, 1} : IntMatrix2{1, 0, 2 * k, 1});
    }
    return m;
}

}  // namespace testing_support
