#pragma once

#include <string>
#include <vector>

#include "netmap/presentation.hpp"

namespace netmap {

// Affine map x -> Mx + t.
struct AffineMap {
    IntMatrix2 m = IntMatrix2::identity();
    Vec2 t;
    Vec2 operator()(Vec2 x) const { return m * x + t; }
    auto operator<=>(const AffineMap&) const = default;
};

// Class of x -> Mx + t modulo x -> 2λ ± x (λ in Z²): M up to sign, t mod 2.
struct ModularElement {
    IntMatrix2 m = IntMatrix2::identity();
    Vec2 t;

    ModularElement normalized() const;
    bool operator==(const ModularElement& other) const;
};

ModularElement compose(const ModularElement& e1, const ModularElement& e2);  // e1 after e2
ModularElement inverse(const ModularElement& e);

enum class ElementType { translation, elliptic, parabolic, hyperbolic, reflection, glide_reflection };

const char* to_string(ElementType t);
ElementType element_type(const ModularElement& e);

// SAff(f)-representatives x -> Mx + t' over the translation classes
// t' in (t + 2Z²) mod 2Λ1; empty when e does not lift.
std::vector<AffineMap> liftable_representatives(const NetMapPresentation& p, const ModularElement& e);
bool is_liftable(const NetMapPresentation& p, const ModularElement& e);
bool is_pure_liftable(const NetMapPresentation& p, const ModularElement& e);

// 16 D³ ∏_{p | 2D} (1 - p⁻²)
Int liftable_index_bound(Int degree);

}  // namespace netmap
