#include "netmap/slope.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace netmap {

Slope::Slope(Int p, Int q) {
    if (p == 0 && q == 0) throw Error(ErrorKind::domain, "0/0 is not a slope");
    Int g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q;
}

Slope Slope::non_slope() {
    Slope s;
    s.slope_ = false;
    s.p_ = 0;
    s.q_ = 0;
    return s;
}

Slope Slope::from_direction(Vec2 v) { return Slope(v.y, v.x); }

Vec2 Slope::direction() const {
    if (!slope_) throw Error(ErrorKind::domain, "non-slope has no direction");
    return {q_, p_};
}

std::string Slope::to_string() const {
    if (!slope_) return "o";
    if (q_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
}

namespace {

Int parse_int(std::string_view s) {
    Int v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::parse, "bad integer '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
    text = trim(text);
    if (text == "o") return non_slope();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Slope(parse_int(text), 1);
    Int p = parse_int(trim(text.substr(0, slash))), q = parse_int(trim(text.substr(slash + 1)));
    if (p == 0 && q == 0) throw Error(ErrorKind::parse, "0/0 is not a slope");
    return Slope(p, q);
}

const SlopeOracleEntry* SlopeOracle::find(const Slope& s) const {
    for (const auto& e : entries)
        if (e.input == s) return &e;
    return nullptr;
}

SlopeOracle parse_slope_oracle(std::string_view text) {
    SlopeOracle oracle;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        try {
            SlopeOracleEntry entry;
            auto semi = line.find(';');
            if (semi != std::string_view::npos) {
                std::string_view mult = trim(line.substr(semi + 1));
                line = trim(line.substr(0, semi));
                auto slash = mult.find('/');
                if (slash == std::string_view::npos) throw Error(ErrorKind::parse, "multiplier must be c/d");
                Multiplier m{parse_int(trim(mult.substr(0, slash))), parse_int(trim(mult.substr(slash + 1)))};
                if (m.c < 0 || m.d <= 0) throw Error(ErrorKind::parse, "multiplier needs c >= 0 and d > 0");
                entry.multiplier = m;
            }
            auto arrow = line.find("->");
            if (arrow == std::string_view::npos) throw Error(ErrorKind::parse, "expected 'p/q -> p'/q''");
            entry.input = Slope::parse(line.substr(0, arrow));
            entry.image = Slope::parse(line.substr(arrow + 2));
            if (!entry.input.is_slope()) throw Error(ErrorKind::parse, "input must be a slope");
            if (oracle.find(entry.input))
                throw Error(ErrorKind::parse, "duplicate entry for slope " + entry.input.to_string());
            oracle.entries.push_back(entry);
        } catch (const Error& e) {
            throw Error(ErrorKind::parse, "slope oracle line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return oracle;
}

Slope matrix_on_slope(const IntMatrix2& m, const Slope& s) {
    if (!s.is_slope()) throw Error(ErrorKind::domain, "non-slope input");
    if (std::llabs(det2(m)) != 1) throw Error(ErrorKind::domain, "matrix must have determinant ±1");
    return Slope::from_direction(m * s.direction());
}

Slope euclidean_slope_map(const IntMatrix2& a, const Slope& s) {
    if (!s.is_slope()) throw Error(ErrorKind::domain, "non-slope input");
    if (det2(a) <= 0) throw Error(ErrorKind::domain, "orientation: determinant must be positive");
    return Slope::from_direction(adjugate(a) * s.direction());
}

Multiplier euclidean_multiplier(const IntMatrix2& a, const Slope& s) {
    if (!s.is_slope()) throw Error(ErrorKind::domain, "non-slope input");
    Int det = det2(a);
    if (det <= 0) throw Error(ErrorKind::domain, "orientation: determinant must be positive");
    // A⁻¹v = u / det; smallest k with k u / det in 2Z²
    Vec2 u = adjugate(a) * s.direction();
    Int g = std::gcd(u.x, u.y);
    Int k = 2 * det / std::gcd(g, 2 * det);
    if (k % 2 != 0 || det % (k / 2) != 0) throw Error(ErrorKind::domain, "internal: multiplier is not integral");
    return {det / (k / 2), k / 2};
}

namespace {

IntMatrix2 sign_normalized(IntMatrix2 q) {
    Int first = q.a != 0 ? q.a : q.b != 0 ? q.b : q.c != 0 ? q.c : q.d;
    return first < 0 ? -q : q;
}

std::vector<Int> signed_divisors(Int n) {
    std::vector<Int> out;
    Int a = std::llabs(n);
    for (Int k = 1; k * k <= a; ++k)
        if (a % k == 0) {
            for (Int v : {k, a / k}) {
                out.push_back(v);
                out.push_back(-v);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

IntMatrix2 solve_linear_part(std::pair<Slope, Slope> pair1, std::pair<Slope, Slope> pair2, int eps) {
    if (eps != 1 && eps != -1) throw Error(ErrorKind::domain, "orientation sign must be ±1");
    for (const Slope* s : {&pair1.first, &pair1.second, &pair2.first, &pair2.second})
        if (!s->is_slope()) throw Error(ErrorKind::domain, "inconsistent slope data: non-slope in a slope pair");
    if (pair1.first == pair2.first || pair1.second == pair2.second)
        throw Error(ErrorKind::domain, "inconsistent slope data: slopes in a pair coincide");
    IntMatrix2 u = IntMatrix2::from_columns(pair1.first.direction(), pair2.first.direction());
    IntMatrix2 w = IntMatrix2::from_columns(pair1.second.direction(), pair2.second.direction());
    Int du = det2(u), dw = det2(w);
    Int num = checked_mul(eps, du);
    if (num % dw != 0) throw Error(ErrorKind::domain, "inconsistent slope data: scalar product is not an integer");
    Int n = num / dw;
    std::set<IntMatrix2> found;
    for (Int a1 : signed_divisors(n)) {
        Int a2 = n / a1;
        IntMatrix2 scaled = w * IntMatrix2::diag(a1, a2) * adjugate(u);
        if (scaled.a % du || scaled.b % du || scaled.c % du || scaled.d % du) continue;
        IntMatrix2 q{scaled.a / du, scaled.b / du, scaled.c / du, scaled.d / du};
        if (det2(q) != eps) continue;
        found.insert(sign_normalized(q));
    }
    if (found.empty()) throw Error(ErrorKind::domain, "inconsistent slope data: no integral solution");
    if (found.size() > 1) throw Error(ErrorKind::domain, "internal: linear part is not unique up to sign");
    return *found.begin();
}

namespace {

void require_lift(const PresentationData& pd, const AffineMap& psi) {
    Lattice l = pd.presentation().lattice();
    bool ok = std::llabs(det2(psi.m)) == 1 && lattice_contains(l, psi.m * l.basis.col1()) &&
              lattice_contains(l, psi.m * l.basis.col2()) && lattice_contains(l, psi.t);
    if (ok) {
        std::set<int> hit;
        for (int i = 0; i < 4; ++i) {
            int j = pd.terminal_index(pd.group().coords(psi(pd.presentation().arcs[i].terminal)));
            if (j < 0) ok = false;
            hit.insert(j);
        }
        ok = ok && hit.size() == 4;
    }
    if (!ok) throw Error(ErrorKind::domain, "not a lift: map is not in SAff(f)");
}

}  // namespace

Vec2 translation_part(const NetMapPresentation& p, const AffineMap& psi) {
    PresentationData pd(p);
    require_lift(pd, psi);
    const std::array<Vec2, 4> taus{Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}};
    int p0 = pd.phi(taus[0]);
    int image = pd.terminal_index(pd.group().coords(psi(p.arcs[p0].terminal)));
    for (Vec2 tau : taus)
        if (pd.phi(tau) == image) return tau;
    throw Error(ErrorKind::domain, "internal: translation classes do not name the postcritical points");
}

std::vector<LiftValue> virtual_multiendomorphism(const NetMapPresentation& p, const ModularElement& e,
                                                 const SlopeOracle& oracle) {
    std::vector<AffineMap> reps = liftable_representatives(p, e);
    if (reps.empty()) throw Error(ErrorKind::infeasible, "element is not liftable");
    const int eps = static_cast<int>(det2(e.m));

    std::set<std::string> missing;
    std::optional<IntMatrix2> q;
    struct Usable {
        Slope image, image_of_moved;
    };
    std::vector<Usable> usable;
    for (const auto& entry : oracle.entries) {
        if (!entry.image.is_slope()) continue;
        Slope moved = matrix_on_slope(e.m, entry.input);
        const SlopeOracleEntry* target = oracle.find(moved);
        if (!target) {
            missing.insert(moved.to_string());
            continue;
        }
        if (!target->image.is_slope()) continue;
        usable.push_back({entry.image, target->image});
    }
    for (std::size_t i = 0; i < usable.size() && !q; ++i)
        for (std::size_t j = i + 1; j < usable.size() && !q; ++j)
            if (usable[i].image != usable[j].image)
                q = solve_linear_part({usable[i].image, usable[i].image_of_moved},
                                      {usable[j].image, usable[j].image_of_moved}, eps);
    if (!q) {
        std::string msg = "oracle insufficient: need two slopes s with distinct slope images and μ(M·s) known";
        if (!missing.empty()) {
            msg += "; missing";
            for (const auto& s : missing) msg += " " + s;
        }
        throw Error(ErrorKind::infeasible, msg);
    }
    std::set<LiftValue> values;
    for (const auto& psi : reps) values.insert({*q, translation_part(p, psi)});
    return {values.begin(), values.end()};
}

bool Mobius::operator==(const Mobius& other) const {
    return conjugate == other.conjugate && (matrix() == other.matrix() || matrix() == -other.matrix());
}

std::string Mobius::to_string() const {
    std::string z = conjugate ? "conj(z)" : "z";
    auto term = [&](Int coef, Int constant) {
        std::ostringstream os;
        bool any = false;
        if (coef != 0) {
            if (coef == -1)
                os << "-";
            else if (coef != 1)
                os << coef;
            os << z;
            any = true;
        }
        if (constant != 0 || !any) {
            if (any && constant >= 0) os << "+";
            os << constant;
        }
        return os.str();
    };
    auto group = [](const std::string& t) {
        return t.find_first_of("+-", 1) == std::string::npos ? t : "(" + t + ")";
    };
    std::string num = term(alpha, beta), den = term(gamma, delta);
    if (den == "1") return "z -> " + num;
    return "z -> " + group(num) + "/" + group(den);
}

Mobius teichmuller_action(const ModularElement& e) {
    Int det = det2(e.m);
    if (det != 1 && det != -1) throw Error(ErrorKind::domain, "modular element needs determinant ±1");
    return {e.m.d, e.m.b, e.m.c, e.m.a, det == -1};
}

Mobius compose(const Mobius& f, const Mobius& g) {
    IntMatrix2 m = f.matrix() * g.matrix();
    return {m.a, m.b, m.c, m.d, f.conjugate != g.conjugate};
}

ElementType mobius_type(const Mobius& f) { return element_type(ModularElement{f.matrix(), {}}); }

}  // namespace netmap
