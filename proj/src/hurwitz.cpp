#include "netmap/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <thread>

#include "netmap/portrait.hpp"

namespace netmap {

namespace {

AElement pm_rep(AElement h, Int m, Int n) {
    AElement neg{mod(-h.x, 2 * m), mod(-h.y, 2 * n)};
    return std::min(h, neg);
}

void check_divisor_pair(Int m, Int n) {
    if (m < 1 || n < 1 || m % n != 0)
        throw Error(ErrorKind::domain, "elementary divisors need n | m, got (" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");
}

}  // namespace

HurwitzStructureSet make_structure_set(ElementaryDivisors divisors, const std::array<AElement, 4>& elements) {
    HurwitzStructureSet hs{divisors, {}};
    for (int i = 0; i < 4; ++i)
        hs.pairs[i] = pm_rep({mod(elements[i].x, 2 * divisors.m), mod(elements[i].y, 2 * divisors.n)}, divisors.m,
                             divisors.n);
    std::sort(hs.pairs.begin(), hs.pairs.end());
    for (int i = 0; i + 1 < 4; ++i)
        if (hs.pairs[i] == hs.pairs[i + 1])
            throw Error(ErrorKind::domain, "not a Hurwitz structure set: repeated ±-class " + to_string(hs.pairs[i]));
    return hs;
}

std::string to_string(const HurwitzStructureSet& hs) {
    std::string s = "{";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ", ";
        AElement h = hs.pairs[i];
        bool order_two = mod(-h.x, 2 * hs.divisors.m) == h.x && mod(-h.y, 2 * hs.divisors.n) == h.y;
        s += (order_two ? "" : "±") + to_string(h);
    }
    return s + "}";
}

AElement SpecialAutomorphism::apply(AElement h, Int m, Int n) const {
    return {mod(a * h.x + b * h.y, 2 * m), mod(c * h.x + d * h.y, 2 * n)};
}

std::vector<SpecialAutomorphism> enumerate_special_automorphisms(Int m, Int n) {
    check_divisor_pair(m, n);
    std::vector<SpecialAutomorphism> out;
    const Int mm = 2 * m, nn = 2 * n, step = m / n, size = mm * nn;
    std::vector<char> seen(size);
    for (Int a = 0; a < mm; ++a)
        for (Int b = 0; b < mm; b += step)
            for (Int c = 0; c < nn; ++c)
                for (Int d = 0; d < nn; ++d) {
                    if (mod(a * d - b * c, nn) != 1 % nn) continue;
                    SpecialAutomorphism phi{a, b, c, d};
                    std::fill(seen.begin(), seen.end(), 0);
                    Int hit = 0;
                    for (Int x = 0; x < mm; ++x)
                        for (Int y = 0; y < nn; ++y) {
                            AElement img = phi.apply({x, y}, m, n);
                            char& s = seen[img.x * nn + img.y];
                            if (!s) {
                                s = 1;
                                ++hit;
                            }
                        }
                    if (hit == size) out.push_back(phi);
                }
    return out;
}

std::vector<AElement> order_two_elements(Int m, Int n) { return {{0, 0}, {0, n}, {m, 0}, {m, n}}; }

HurwitzStructureSet hs_from_presentation(const NetMapPresentation& p) {
    PresentationData pd(p);
    std::array<AElement, 4> terms;
    for (int i = 0; i < 4; ++i) terms[i] = pd.terminal(i);
    return make_structure_set(pd.group().divisors(), terms);
}

namespace {

std::array<AElement, 4> image_pairs(const HurwitzStructureSet& hs, const SpecialAutomorphism& phi, AElement t) {
    const Int m = hs.divisors.m, n = hs.divisors.n;
    std::array<AElement, 4> out;
    for (int i = 0; i < 4; ++i) {
        AElement h = phi.apply(hs.pairs[i], m, n);
        out[i] = pm_rep({(h.x + t.x) % (2 * m), (h.y + t.y) % (2 * n)}, m, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<AElement, 4> canonical_pairs(const HurwitzStructureSet& hs, const std::vector<SpecialAutomorphism>& group,
                                        const std::vector<AElement>& translations) {
    std::array<AElement, 4> best = hs.pairs;
    for (const auto& phi : group)
        for (AElement t : translations) best = std::min(best, image_pairs(hs, phi, t));
    return best;
}

}  // namespace

HurwitzStructureSet apply(const HurwitzStructureSet& hs, const SpecialAutomorphism& phi, AElement t) {
    return {hs.divisors, image_pairs(hs, phi, t)};
}

HurwitzStructureSet canonical_hurwitz_invariant(const HurwitzStructureSet& hs) {
    const Int m = hs.divisors.m, n = hs.divisors.n;
    return {hs.divisors, canonical_pairs(hs, enumerate_special_automorphisms(m, n), order_two_elements(m, n))};
}

bool hurwitz_equivalent(const NetMapPresentation& p1, const NetMapPresentation& p2) {
    HurwitzStructureSet h1 = hs_from_presentation(p1), h2 = hs_from_presentation(p2);
    if (h1.divisors != h2.divisors) return false;
    return canonical_hurwitz_invariant(h1) == canonical_hurwitz_invariant(h2);
}

NetMapPresentation standard_presentation(const HurwitzStructureSet& hs, const std::array<int, 4>& eta, Vec2 bbar) {
    const Int m = hs.divisors.m, n = hs.divisors.n;
    const std::array<Vec2, 4> corners{Vec2{0, 0}, Vec2{m, 0}, Vec2{0, n}, Vec2{m, n}};
    NetMapPresentation p;
    p.a = IntMatrix2::diag(m, n);
    p.b = {mod(bbar.x, 2) * m, mod(bbar.y, 2) * n};
    for (int k = 0; k < 4; ++k) {
        AElement h = hs.pairs[eta[k]];
        p.arcs[k] = {corners[k], {h.x, h.y}};
    }
    return p;
}

bool has_net_realization(const HurwitzStructureSet& hs) {
    std::array<int, 4> eta{0, 1, 2, 3};
    do {
        for (int bits = 0; bits < 4; ++bits) {
            NetMapPresentation p = standard_presentation(hs, eta, {bits >> 1, bits & 1});
            if (postcritical_set(p).size() == 4) return true;
        }
    } while (std::next_permutation(eta.begin(), eta.end()));
    return false;
}

std::vector<HurwitzStructureSet> enumerate_hurwitz_classes(Int m, Int n, int workers) {
    check_divisor_pair(m, n);
    if (m == 1 && n == 1) throw Error(ErrorKind::domain, "degree must be at least 2");
    workers = std::max(1, workers);
    const ElementaryDivisors div{m, n};
    std::vector<AElement> reps;
    for (Int x = 0; x < 2 * m; ++x)
        for (Int y = 0; y < 2 * n; ++y)
            if (pm_rep({x, y}, m, n) == AElement{x, y}) reps.push_back({x, y});
    std::vector<std::array<int, 4>> subsets;
    const int r = static_cast<int>(reps.size());
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int k = j + 1; k < r; ++k)
                for (int l = k + 1; l < r; ++l) subsets.push_back({i, j, k, l});

    const auto group = enumerate_special_automorphisms(m, n);
    const auto translations = order_two_elements(m, n);
    std::vector<std::set<std::array<AElement, 4>>> found(workers);
    auto work = [&](int w) {
        for (std::size_t s = w; s < subsets.size(); s += workers) {
            HurwitzStructureSet hs{div, {reps[subsets[s][0]], reps[subsets[s][1]], reps[subsets[s][2]],
                                         reps[subsets[s][3]]}};
            found[w].insert(canonical_pairs(hs, group, translations));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::set<std::array<AElement, 4>> all;
    for (const auto& f : found) all.insert(f.begin(), f.end());

    const bool atypical = (m == 2 && n == 1) || (m == 2 && n == 2);
    std::vector<HurwitzStructureSet> out;
    for (const auto& pairs : all) {
        HurwitzStructureSet hs{div, pairs};
        if (atypical && !has_net_realization(hs)) continue;
        out.push_back(hs);
    }
    return out;
}

DeckGroup deck_group(const HurwitzStructureSet& hs) {
    const Int m = hs.divisors.m, n = hs.divisors.n;
    DeckGroup g;
    g.elements.clear();
    for (AElement t : order_two_elements(m, n)) {
        if (t.x % 2 != 0 || t.y % 2 != 0) continue;  // outside the image of 2Λ2
        if (image_pairs(hs, SpecialAutomorphism{}, t) == hs.pairs) g.elements.push_back(t);
    }
    std::sort(g.elements.begin(), g.elements.end());
    g.order = static_cast<int>(g.elements.size());
    std::set<AElement> span{{0, 0}};
    for (AElement t : g.elements) {
        if (span.count(t)) continue;
        g.generators.push_back(t);
        std::set<AElement> next = span;
        for (AElement s : span) next.insert({(s.x + t.x) % (2 * m), (s.y + t.y) % (2 * n)});
        span = next;
    }
    return g;
}

namespace {

std::vector<Int> prime_divisors(Int a) {
    std::vector<Int> out;
    for (Int p = 2; p * p <= a; ++p)
        if (a % p == 0) {
            out.push_back(p);
            while (a % p == 0) a /= p;
        }
    if (a > 1) out.push_back(a);
    return out;
}

bool is_special(Int a, Int b, Int c, Int d, Int m, Int n) {
    if (m % n != 0 || b % (m / n) != 0) return false;
    if (mod(a * d - b * c, n) != 1 % n) return false;
    std::vector<char> seen(m * n, 0);
    for (Int x = 0; x < m; ++x)
        for (Int y = 0; y < n; ++y) {
            Int u = mod(a * x + b * y, m), v = mod(c * x + d * y, n);
            if (seen[u * n + v]) return false;
            seen[u * n + v] = 1;
        }
    return true;
}

}  // namespace

IntMatrix2 lift_special_automorphism(Int a, Int b, Int c, Int d, Int m, Int n) {
    if (m < 1 || n < 1) throw Error(ErrorKind::domain, "not special: moduli must be positive");
    a = mod(a, m);
    b = mod(b, m);
    c = mod(c, n);
    d = mod(d, n);
    if (!is_special(a, b, c, d, m, n))
        throw Error(ErrorKind::domain, "not special: (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + "," + std::to_string(d) + ") mod (" +
                                           std::to_string(m) + "," + std::to_string(n) + ")");
    if (a == 0) a = m;
    // z by CRT: z = 0 mod p when p does not divide b, z = 1 mod p otherwise
    Int z = 0, modulus = 1;
    for (Int p : prime_divisors(a)) {
        Int want = b % p == 0 ? 1 : 0;
        while (z % p != want) z += modulus;
        modulus = checked_mul(modulus, p);
    }
    Int b1 = checked_add(b, checked_mul(z, m));
    ExtGcd e = ext_gcd(a, b1);
    if (e.g != 1) throw Error(ErrorKind::domain, "internal: lifted first row is not primitive");
    // all solutions: (x + k b1, y - k a); take the smallest |x|, preferring x > 0
    Int x = e.x, y = e.y;
    Int k = b1 == 0 ? 0 : -x / b1;
    x += k * b1;
    y -= k * a;
    for (Int step : {Int{-1}, Int{1}}) {
        if (b1 == 0) break;
        Int x2 = x + step * b1, y2 = y - step * a;
        if (std::llabs(x2) < std::llabs(x) || (std::llabs(x2) == std::llabs(x) && x2 > x)) {
            x = x2;
            y = y2;
        }
    }
    Int defect = checked_sub(1, checked_sub(checked_mul(a, d), checked_mul(b1, c)));
    IntMatrix2 out{a, b1, checked_sub(c, checked_mul(y, defect)), checked_add(d, checked_mul(x, defect))};
    if (det2(out) != 1) throw Error(ErrorKind::domain, "internal: lift has determinant " + std::to_string(det2(out)));
    return out;
}

}  // namespace netmap
