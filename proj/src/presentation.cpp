#include "netmap/presentation.hpp"

#include <algorithm>

namespace netmap {

void validate_presentation(const NetMapPresentation& p) {
    if (det2(p.a) <= 0)
        throw Error(ErrorKind::domain, "orientation: matrix determinant must be positive");
    Lattice l = p.lattice();
    if (!lattice_contains(l, p.b))
        throw Error(ErrorKind::domain, "translation not in Λ1: " + to_string(p.b));
    AGroup g(p.a);
    std::array<AElement, 4> corners{}, terms{};
    for (int i = 0; i < 4; ++i) {
        const Arc& arc = p.arcs[i];
        if (!lattice_contains(l, arc.initial))
            throw Error(ErrorKind::domain,
                        "arc " + std::to_string(i + 1) + " initial point not in Λ1: " + to_string(arc.initial));
        corners[i] = g.coords(arc.initial);
        terms[i] = g.pm_rep(g.coords(arc.terminal));
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (corners[i] == corners[j])
                throw Error(ErrorKind::domain, "arc initial points " + std::to_string(i + 1) + " and " +
                                                   std::to_string(j + 1) + " have the same class in Λ1/2Λ1");
            if (terms[i] == terms[j])
                throw Error(ErrorKind::domain, "not a Hurwitz structure set: terminals " + std::to_string(i + 1) +
                                                   " and " + std::to_string(j + 1) + " have the same ±-class");
        }
    }
}

PresentationData::PresentationData(const NetMapPresentation& p) : p_(p), group_(p.a) {
    validate_presentation(p);
    for (int i = 0; i < 4; ++i) {
        corner_[i] = group_.coords(p.arcs[i].initial);
        terminal_[i] = group_.pm_rep(group_.coords(p.arcs[i].terminal));
    }
    for (int i = 0; i < 4; ++i) corner_to_terminal_[i] = terminal_index(corner_[i]);
    b_coords_ = *lattice_contains(p.lattice(), p.b);
}

int PresentationData::terminal_index(AElement h) const {
    AElement r = group_.pm_rep(h);
    for (int i = 0; i < 4; ++i)
        if (terminal_[i] == r) return i;
    return -1;
}

int PresentationData::corner_index(AElement h) const {
    for (int i = 0; i < 4; ++i)
        if (corner_[i] == h) return i;
    return -1;
}

int PresentationData::gamma(Vec2 v) const {
    Int r = mod(v.x + b_coords_.x, 2), s = mod(v.y + b_coords_.y, 2);
    Vec2 image = r * p_.a.col1() + s * p_.a.col2();
    return corner_index(group_.coords(image));
}

}  // namespace netmap
