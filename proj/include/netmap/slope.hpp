#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netmap/modular.hpp"

namespace netmap {

// p/q in lowest terms with q >= 0 and 1/0 for the vertical slope, or the
// non-slope symbol for inessential and peripheral curves.
class Slope {
public:
    Slope() = default;
    Slope(Int p, Int q);
    static Slope non_slope();
    static Slope from_direction(Vec2 v);
    static Slope parse(std::string_view text);

    bool is_slope() const { return slope_; }
    Int p() const { return p_; }
    Int q() const { return q_; }
    Vec2 direction() const;
    std::string to_string() const;
    auto operator<=>(const Slope&) const = default;

private:
    Int p_ = 0, q_ = 1;
    bool slope_ = true;
};

struct Multiplier {
    Int c = 0, d = 1;
    auto operator<=>(const Multiplier&) const = default;
};

struct SlopeOracleEntry {
    Slope input, image;
    std::optional<Multiplier> multiplier;
};

struct SlopeOracle {
    std::vector<SlopeOracleEntry> entries;
    const SlopeOracleEntry* find(const Slope& s) const;
};

SlopeOracle parse_slope_oracle(std::string_view text);

Slope matrix_on_slope(const IntMatrix2& m, const Slope& s);
Slope euclidean_slope_map(const IntMatrix2& a, const Slope& s);
Multiplier euclidean_multiplier(const IntMatrix2& a, const Slope& s);

// Q with det Q = eps taking the line of slope first to that of second for
// both pairs; sign normalized so the first nonzero entry is positive.
IntMatrix2 solve_linear_part(std::pair<Slope, Slope> pair1, std::pair<Slope, Slope> pair2, int eps);

// translation class of the lift of psi, as a vector in {0,1}²
Vec2 translation_part(const NetMapPresentation& p, const AffineMap& psi);

struct LiftValue {
    IntMatrix2 q;
    Vec2 tau;
    auto operator<=>(const LiftValue&) const = default;
};

std::vector<LiftValue> virtual_multiendomorphism(const NetMapPresentation& p, const ModularElement& e,
                                                 const SlopeOracle& oracle);

// z -> (alpha z + beta) / (gamma z + delta), with z replaced by its conjugate
// when conjugate is set
struct Mobius {
    Int alpha = 1, beta = 0, gamma = 0, delta = 1;
    bool conjugate = false;

    IntMatrix2 matrix() const { return {alpha, beta, gamma, delta}; }
    bool operator==(const Mobius& other) const;
    std::string to_string() const;
};

Mobius teichmuller_action(const ModularElement& e);
Mobius compose(const Mobius& f, const Mobius& g);  // f after g
ElementType mobius_type(const Mobius& f);

}  // namespace netmap
