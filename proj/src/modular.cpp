#include "netmap/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace netmap {

ModularElement ModularElement::normalized() const {
    ModularElement e{m, {mod(t.x, 2), mod(t.y, 2)}};
    Int first = m.a != 0 ? m.a : m.b != 0 ? m.b : m.c != 0 ? m.c : m.d;
    if (first < 0) e.m = -m;
    return e;
}

bool ModularElement::operator==(const ModularElement& other) const {
    ModularElement x = normalized(), y = other.normalized();
    return x.m == y.m && x.t == y.t;
}

ModularElement compose(const ModularElement& e1, const ModularElement& e2) {
    return ModularElement{e1.m * e2.m, e1.m * e2.t + e1.t}.normalized();
}

ModularElement inverse(const ModularElement& e) {
    IntMatrix2 inv = unimodular_inverse(e.m);
    return ModularElement{inv, -(inv * e.t)}.normalized();
}

const char* to_string(ElementType t) {
    switch (t) {
    case ElementType::translation: return "translation";
    case ElementType::elliptic: return "elliptic";
    case ElementType::parabolic: return "parabolic";
    case ElementType::hyperbolic: return "hyperbolic";
    case ElementType::reflection: return "reflection";
    case ElementType::glide_reflection: return "glide_reflection";
    }
    return "translation";
}

ElementType element_type(const ModularElement& e) {
    Int det = det2(e.m);
    if (det == 1) {
        if (e.m == IntMatrix2::identity() || e.m == -IntMatrix2::identity()) return ElementType::translation;
        Int tr = std::llabs(trace(e.m));
        if (tr < 2) return ElementType::elliptic;
        if (tr == 2) return ElementType::parabolic;
        return ElementType::hyperbolic;
    }
    if (det == -1) return e.m * e.m == IntMatrix2::identity() ? ElementType::reflection : ElementType::glide_reflection;
    throw Error(ErrorKind::domain, "modular element needs determinant ±1, got " + to_string(e.m));
}

namespace {

struct LiftContext {
    PresentationData data;
    Lattice lattice;
    std::set<AElement> hs;

    explicit LiftContext(const NetMapPresentation& p) : data(p), lattice(p.lattice()) {
        for (int i = 0; i < 4; ++i) hs.insert(data.terminal(i));
    }

    bool preserves_lattice(const IntMatrix2& m) const {
        return lattice_contains(lattice, m * lattice.basis.col1()) && lattice_contains(lattice, m * lattice.basis.col2());
    }

    // representatives of Z²/Λ1
    std::vector<Vec2> coset_reps() const {
        const AGroup& g = data.group();
        std::vector<Vec2> out;
        for (Int i = 0; i < g.m(); ++i)
            for (Int j = 0; j < g.n(); ++j) out.push_back(g.q() * Vec2{i, j});
        return out;
    }

    bool maps_hs_onto_hs(const AffineMap& psi) const {
        std::set<AElement> image;
        for (int i = 0; i < 4; ++i)
            image.insert(data.group().pm_rep(data.group().coords(psi(data.presentation().arcs[i].terminal))));
        return image == hs;
    }
};

void check_element(const ModularElement& e) {
    if (std::llabs(det2(e.m)) != 1)
        throw Error(ErrorKind::domain, "modular element needs determinant ±1, got " + to_string(e.m));
}

}  // namespace

std::vector<AffineMap> liftable_representatives(const NetMapPresentation& p, const ModularElement& e) {
    check_element(e);
    LiftContext ctx(p);
    std::vector<AffineMap> out;
    if (!ctx.preserves_lattice(e.m)) return out;
    std::set<AElement> seen;
    for (Vec2 w : ctx.coset_reps()) {
        Vec2 t = e.t + 2 * w;
        if (!lattice_contains(ctx.lattice, t)) continue;
        AElement cls = ctx.data.group().coords(t);
        if (!seen.insert(cls).second) continue;
        AffineMap psi{e.m, t};
        if (ctx.maps_hs_onto_hs(psi)) out.push_back(psi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_liftable(const NetMapPresentation& p, const ModularElement& e) {
    return !liftable_representatives(p, e).empty();
}

bool is_pure_liftable(const NetMapPresentation& p, const ModularElement& e) {
    check_element(e);
    const IntMatrix2& m = e.m;
    if (det2(m) != 1 || mod(m.a, 2) != 1 || mod(m.b, 2) != 0 || mod(m.c, 2) != 0 || mod(m.d, 2) != 1 ||
        mod(e.t.x, 2) != 0 || mod(e.t.y, 2) != 0)
        throw Error(ErrorKind::domain, "not pure: element is outside the pure modular group");
    LiftContext ctx(p);
    if (!ctx.preserves_lattice(m)) return false;
    const AGroup& g = ctx.data.group();
    // the translation must be trivial on A, so only the linear part matters
    for (int i = 0; i < 4; ++i) {
        Vec2 h = p.arcs[i].terminal;
        AElement before = g.coords(h), after = g.coords(m * h);
        if (after != before && after != g.neg(before)) return false;
    }
    return true;
}

Int liftable_index_bound(Int degree) {
    if (degree < 2) throw Error(ErrorKind::domain, "index bound needs degree at least 2");
    Int num = checked_mul(16, checked_mul(degree, checked_mul(degree, degree))), den = 1;
    Int rest = 2 * degree;
    for (Int p = 2; rest > 1; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        num = checked_mul(num, p * p - 1);
        den = checked_mul(den, p * p);
        Int g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw Error(ErrorKind::domain, "internal: index bound is not an integer");
    return num;
}

}  // namespace netmap
