#pragma once

#include <array>

#include "netmap/lattice.hpp"

namespace netmap {

struct Arc {
    Vec2 initial, terminal;
    auto operator<=>(const Arc&) const = default;
};

// Presentation data (A, b, four arcs). A's columns span Λ1 inside Λ2 = Z².
struct NetMapPresentation {
    IntMatrix2 a = IntMatrix2::identity();
    Vec2 b;
    std::array<Arc, 4> arcs;

    Int degree() const { return det2(a); }
    Lattice lattice() const { return {a}; }
    auto operator<=>(const NetMapPresentation&) const = default;
};

// Throws Error(domain) naming the first violated invariant.
void validate_presentation(const NetMapPresentation& p);

// Combinatorial data shared by the portrait construction and the lift
// bookkeeping: arc i joins corner class corner[i] to terminal class terminal[i].
class PresentationData {
public:
    explicit PresentationData(const NetMapPresentation& p);

    const NetMapPresentation& presentation() const { return p_; }
    const AGroup& group() const { return group_; }
    AElement corner(int i) const { return corner_[i]; }
    AElement terminal(int i) const { return terminal_[i]; }

    // index of the arc whose terminal has the ±-class of h, or -1
    int terminal_index(AElement h) const;
    // index of the arc whose initial point has class h in Λ1/2Λ1, or -1
    int corner_index(AElement h) const;
    // γ: lattice point -> arc index of the corner (r+b1)λ1 + (s+b2)λ2 mod 2Λ1
    int gamma(Vec2 v) const;
    // φ = η∘γ as an arc index (i.e. the P2 point terminal(phi(v)))
    int phi(Vec2 v) const { return gamma(v); }
    // corner i lies in P2 as terminal(j); -1 when the corner is not in P2
    int corner_in_p2(int i) const { return corner_to_terminal_[i]; }

private:
    NetMapPresentation p_;
    AGroup group_;
    std::array<AElement, 4> corner_, terminal_;
    std::array<int, 4> corner_to_terminal_;
    Vec2 b_coords_;
};

}  // namespace netmap
