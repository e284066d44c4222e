#pragma once

#include <array>
#include <vector>

#include "netmap/presentation.hpp"

namespace netmap {

// Four disjoint ±-pairs in (Z/2m) ⊕ (Z/2n), each stored as its smaller
// representative, pairs sorted.
struct HurwitzStructureSet {
    ElementaryDivisors divisors;
    std::array<AElement, 4> pairs;
    auto operator<=>(const HurwitzStructureSet&) const = default;
};

// Normalizes the four elements into canonical storage; throws when two of
// them share a ±-class.
HurwitzStructureSet make_structure_set(ElementaryDivisors divisors, const std::array<AElement, 4>& elements);
std::string to_string(const HurwitzStructureSet& hs);

// (x, y) -> (ax + by mod 2m, cx + dy mod 2n)
struct SpecialAutomorphism {
    Int a = 1, b = 0, c = 0, d = 1;
    AElement apply(AElement h, Int m, Int n) const;
    auto operator<=>(const SpecialAutomorphism&) const = default;
};

std::vector<SpecialAutomorphism> enumerate_special_automorphisms(Int m, Int n);
std::vector<AElement> order_two_elements(Int m, Int n);

HurwitzStructureSet hs_from_presentation(const NetMapPresentation& p);
HurwitzStructureSet apply(const HurwitzStructureSet& hs, const SpecialAutomorphism& phi, AElement t);
HurwitzStructureSet canonical_hurwitz_invariant(const HurwitzStructureSet& hs);
bool hurwitz_equivalent(const NetMapPresentation& p1, const NetMapPresentation& p2);

// Presentation with A = diag(m, n): arc k joins the corner
// (0,0), (m,0), (0,n), (m,n) (k = 0..3) to hs.pairs[eta[k]];
// b = bbar.x * (m,0) + bbar.y * (0,n).
NetMapPresentation standard_presentation(const HurwitzStructureSet& hs, const std::array<int, 4>& eta, Vec2 bbar);

// true when some choice of η and b̄ gives four postcritical points
bool has_net_realization(const HurwitzStructureSet& hs);

std::vector<HurwitzStructureSet> enumerate_hurwitz_classes(Int m, Int n, int workers = 1);

struct DeckGroup {
    int order = 1;
    std::vector<AElement> generators;
    std::vector<AElement> elements;
};

DeckGroup deck_group(const HurwitzStructureSet& hs);

// Lifts a special automorphism of (Z/m) ⊕ (Z/n) to SL(2,Z).
IntMatrix2 lift_special_automorphism(Int a, Int b, Int c, Int d, Int m, Int n);

}  // namespace netmap
