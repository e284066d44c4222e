#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "netmap/error.hpp"

namespace netmap {

struct Vec2 {
    Int x = 0, y = 0;
    auto operator<=>(const Vec2&) const = default;
};

Vec2 operator+(Vec2 u, Vec2 v);
Vec2 operator-(Vec2 u, Vec2 v);
Vec2 operator-(Vec2 u);
Vec2 operator*(Int k, Vec2 v);
std::string to_string(Vec2 v);

// Row-major [[a, b], [c, d]]; the columns are the images of e1 and e2.
struct IntMatrix2 {
    Int a = 0, b = 0, c = 0, d = 0;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }
    static IntMatrix2 diag(Int m, Int n) { return {m, 0, 0, n}; }
    static IntMatrix2 from_columns(Vec2 u, Vec2 v) { return {u.x, v.x, u.y, v.y}; }
    Vec2 col1() const { return {a, c}; }
    Vec2 col2() const { return {b, d}; }
    auto operator<=>(const IntMatrix2&) const = default;
};

IntMatrix2 operator*(const IntMatrix2& p, const IntMatrix2& q);
Vec2 operator*(const IntMatrix2& p, Vec2 v);
IntMatrix2 operator-(const IntMatrix2& p);
std::string to_string(const IntMatrix2& m);

Int det2(const IntMatrix2& m);
Int trace(const IntMatrix2& m);
IntMatrix2 adjugate(const IntMatrix2& m);
// inverse of a matrix with determinant ±1
IntMatrix2 unimodular_inverse(const IntMatrix2& m);

// g = gcd(a, b) >= 0 with a*x + b*y = g
struct ExtGcd {
    Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

struct Snf {
    IntMatrix2 q, d, r;
};

// A = Q D R with Q, R in SL(2,Z), D = diag(m, n), n | m.
Snf snf2(const IntMatrix2& a);

struct ElementaryDivisors {
    Int m = 1, n = 1;
    auto operator<=>(const ElementaryDivisors&) const = default;
};

ElementaryDivisors elementary_divisors(const IntMatrix2& a);

// column Hermite form: lower triangular [[p, 0], [q, r]], p, r > 0, 0 <= q < r
IntMatrix2 column_hermite_form(const IntMatrix2& basis);

struct Lattice {
    IntMatrix2 basis;
    bool operator==(const Lattice& other) const;
};

// coordinates of v in the basis when v lies in the lattice
std::optional<Vec2> lattice_contains(const Lattice& l, Vec2 v);

struct AElement {
    Int x = 0, y = 0;
    auto operator<=>(const AElement&) const = default;
};

std::string to_string(AElement h);

// The group Λ2/2Λ1 in standardized coordinates (Z/2m) ⊕ (Z/2n).
class AGroup {
public:
    explicit AGroup(const IntMatrix2& a);
    AGroup(Int m, Int n);  // A = diag(m, n)

    Int m() const { return m_; }
    Int n() const { return n_; }
    ElementaryDivisors divisors() const { return {m_, n_}; }
    const IntMatrix2& q() const { return q_; }

    AElement coords(Vec2 v) const;
    AElement add(AElement g, AElement h) const;
    AElement neg(AElement h) const;
    // the lexicographically smaller of h and -h
    AElement pm_rep(AElement h) const;
    bool in_lattice_image(AElement h) const { return h.x % m_ == 0 && h.y % n_ == 0; }
    int index(AElement h) const { return static_cast<int>(h.x * 2 * n_ + h.y); }
    int size() const { return static_cast<int>(4 * m_ * n_); }
    AElement element(int index) const { return {index / (2 * n_), index % (2 * n_)}; }

private:
    Int m_, n_;
    IntMatrix2 q_, qinv_;
};

AElement a_coords(const IntMatrix2& a, Vec2 v);

}  // namespace netmap
