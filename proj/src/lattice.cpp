#include "netmap/lattice.hpp"

#include <cstdlib>
#include <numeric>

namespace netmap {

Vec2 operator+(Vec2 u, Vec2 v) { return {checked_add(u.x, v.x), checked_add(u.y, v.y)}; }
Vec2 operator-(Vec2 u, Vec2 v) { return {checked_sub(u.x, v.x), checked_sub(u.y, v.y)}; }
Vec2 operator-(Vec2 u) { return {checked_sub(0, u.x), checked_sub(0, u.y)}; }
Vec2 operator*(Int k, Vec2 v) { return {checked_mul(k, v.x), checked_mul(k, v.y)}; }

std::string to_string(Vec2 v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

IntMatrix2 operator*(const IntMatrix2& p, const IntMatrix2& q) {
    auto dot = [](Int x1, Int y1, Int x2, Int y2) {
        return checked_add(checked_mul(x1, y1), checked_mul(x2, y2));
    };
    return {dot(p.a, q.a, p.b, q.c), dot(p.a, q.b, p.b, q.d),
            dot(p.c, q.a, p.d, q.c), dot(p.c, q.b, p.d, q.d)};
}

Vec2 operator*(const IntMatrix2& p, Vec2 v) {
    return {checked_add(checked_mul(p.a, v.x), checked_mul(p.b, v.y)),
            checked_add(checked_mul(p.c, v.x), checked_mul(p.d, v.y))};
}

IntMatrix2 operator-(const IntMatrix2& p) {
    return {checked_sub(0, p.a), checked_sub(0, p.b), checked_sub(0, p.c), checked_sub(0, p.d)};
}

std::string to_string(const IntMatrix2& m) {
    return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) +
           "," + std::to_string(m.d) + "]]";
}

Int det2(const IntMatrix2& m) { return checked_sub(checked_mul(m.a, m.d), checked_mul(m.b, m.c)); }

Int trace(const IntMatrix2& m) { return checked_add(m.a, m.d); }

IntMatrix2 adjugate(const IntMatrix2& m) {
    return {m.d, checked_sub(0, m.b), checked_sub(0, m.c), m.a};
}

IntMatrix2 unimodular_inverse(const IntMatrix2& m) {
    Int det = det2(m);
    if (det == 1) return adjugate(m);
    if (det == -1) return -adjugate(m);
    throw Error(ErrorKind::domain, "matrix is not unimodular: " + to_string(m));
}

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

namespace {

// Working state for A = Q W R. Row ops on W update Q, column ops update R.
struct SnfState {
    IntMatrix2 q = IntMatrix2::identity(), w, r = IntMatrix2::identity();

    // row0 += k * row1
    void add_row1_to_row0(Int k) {
        w.a = checked_add(w.a, checked_mul(k, w.c));
        w.b = checked_add(w.b, checked_mul(k, w.d));
        q.b = checked_sub(q.b, checked_mul(k, q.a));
        q.d = checked_sub(q.d, checked_mul(k, q.c));
    }
    // row1 += k * row0
    void add_row0_to_row1(Int k) {
        w.c = checked_add(w.c, checked_mul(k, w.a));
        w.d = checked_add(w.d, checked_mul(k, w.b));
        q.a = checked_sub(q.a, checked_mul(k, q.b));
        q.c = checked_sub(q.c, checked_mul(k, q.d));
    }
    // col0 += k * col1
    void add_col1_to_col0(Int k) {
        w.a = checked_add(w.a, checked_mul(k, w.b));
        w.c = checked_add(w.c, checked_mul(k, w.d));
        r.c = checked_sub(r.c, checked_mul(k, r.a));
        r.d = checked_sub(r.d, checked_mul(k, r.b));
    }
    // col1 += k * col0
    void add_col0_to_col1(Int k) {
        w.b = checked_add(w.b, checked_mul(k, w.a));
        w.d = checked_add(w.d, checked_mul(k, w.c));
        r.a = checked_sub(r.a, checked_mul(k, r.c));
        r.b = checked_sub(r.b, checked_mul(k, r.d));
    }
    // (row0, row1) <- (-row1, row0)
    void rotate_rows() {
        w = IntMatrix2{0, -1, 1, 0} * w;
        q = q * IntMatrix2{0, 1, -1, 0};
    }
    // (col0, col1) <- (col1, -col0)
    void rotate_cols() {
        w = w * IntMatrix2{0, -1, 1, 0};
        r = IntMatrix2{0, 1, -1, 0} * r;
    }
};

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Snf snf2(const IntMatrix2& a) {
    if (det2(a) <= 0)
        throw Error(ErrorKind::domain, "orientation: determinant must be positive for " + to_string(a));
    SnfState s;
    s.w = a;
    for (;;) {
        IntMatrix2& w = s.w;
        if (w.b == 0 && w.c == 0) {
            if (w.a < 0) {
                s.w = -s.w;
                s.q = -s.q;
            }
            if (w.a % w.d == 0) break;
            s.add_row1_to_row0(1);
            continue;
        }
        // move the smallest nonzero entry (row-major tie break) to the lower-right pivot
        Int entries[4] = {w.a, w.b, w.c, w.d};
        int best = -1;
        for (int i = 0; i < 4; ++i) {
            if (entries[i] == 0) continue;
            if (best < 0 || std::llabs(entries[i]) < std::llabs(entries[best])) best = i;
        }
        if (best / 2 == 0) s.rotate_rows();
        if (best % 2 == 0) s.rotate_cols();
        Int p = w.d;
        if (w.b != 0) s.add_row1_to_row0(-floor_div(w.b, p));
        if (w.c != 0) s.add_col1_to_col0(-floor_div(w.c, p));
    }
    if (s.w.d < 0) {
        // diag(-x, -y) = (-I) diag(x, y)
        s.w = -s.w;
        s.q = -s.q;
    }
    return {s.q, s.w, s.r};
}

ElementaryDivisors elementary_divisors(const IntMatrix2& a) {
    Snf s = snf2(a);
    return {s.d.a, s.d.d};
}

IntMatrix2 column_hermite_form(const IntMatrix2& basis) {
    if (det2(basis) == 0) throw Error(ErrorKind::domain, "degenerate lattice basis");
    // column operations until the top-right entry vanishes
    Int a = basis.a, b = basis.b, c = basis.c, d = basis.d;
    while (b != 0) {
        Int k = a / b;
        a -= k * b;
        c = checked_sub(c, checked_mul(k, d));
        std::swap(a, b);
        std::swap(c, d);
    }
    if (a < 0) {
        a = -a;
        c = -c;
    }
    if (d < 0) d = -d;
    c = mod(c, d);
    return {a, 0, c, d};
}

bool Lattice::operator==(const Lattice& other) const {
    return column_hermite_form(basis) == column_hermite_form(other.basis);
}

std::optional<Vec2> lattice_contains(const Lattice& l, Vec2 v) {
    Int det = det2(l.basis);
    if (det == 0) throw Error(ErrorKind::domain, "degenerate lattice basis");
    Vec2 scaled = adjugate(l.basis) * v;
    if (scaled.x % det != 0 || scaled.y % det != 0) return std::nullopt;
    return Vec2{scaled.x / det, scaled.y / det};
}

std::string to_string(AElement h) {
    return "(" + std::to_string(h.x) + "," + std::to_string(h.y) + ")";
}

AGroup::AGroup(const IntMatrix2& a) {
    Snf s = snf2(a);
    m_ = s.d.a;
    n_ = s.d.d;
    q_ = s.q;
    qinv_ = unimodular_inverse(s.q);
}

AGroup::AGroup(Int m, Int n) : AGroup(IntMatrix2::diag(m, n)) {}

AElement AGroup::coords(Vec2 v) const {
    Vec2 w = qinv_ * v;
    return {mod(w.x, 2 * m_), mod(w.y, 2 * n_)};
}

AElement AGroup::add(AElement g, AElement h) const {
    return {(g.x + h.x) % (2 * m_), (g.y + h.y) % (2 * n_)};
}

AElement AGroup::neg(AElement h) const {
    return {mod(-h.x, 2 * m_), mod(-h.y, 2 * n_)};
}

AElement AGroup::pm_rep(AElement h) const { return std::min(h, neg(h)); }

AElement a_coords(const IntMatrix2& a, Vec2 v) { return AGroup(a).coords(v); }

}  // namespace netmap
