#include "netmap/portrait.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace netmap {

namespace {

int closure_mask(const std::array<int, 4>& to, int seed) {
    int mask = seed;
    for (;;) {
        int next = mask;
        for (int x = 0; x < 4; ++x)
            if (mask >> x & 1) next |= 1 << to[x];
        if (next == mask) return mask;
        mask = next;
    }
}

}  // namespace

PortraitReport validate_portrait(const DynamicPortrait& g) {
    PortraitReport report;
    auto& diag = report.diagnostics;
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        if (!index.emplace(v.id, static_cast<int>(i)).second)
            diag.push_back("vertex " + v.id + " has more than one out-edge");
        if (v.weight != 1 && v.weight != 2)
            diag.push_back("vertex " + v.id + " has weight " + std::to_string(v.weight) + " (expected 1 or 2)");
    }
    for (const auto& v : g.vertices)
        if (!index.count(v.to)) diag.push_back("edge from " + v.id + " ends at unknown vertex " + v.to);
    for (const auto& e : g.extra_critical) {
        if (!index.count(e.to)) diag.push_back("extra critical vertices point at unknown vertex " + e.to);
        if (e.count < 0) diag.push_back("negative extra critical count for " + e.to);
    }
    if (!diag.empty()) return report;

    std::size_t nv = g.vertices.size();
    std::vector<int> to(nv), in(nv, 0);
    std::vector<bool> critical_value(nv, false);
    long critical = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        const auto& v = g.vertices[i];
        to[i] = index[v.to];
        in[to[i]] += v.weight;
        if (v.weight == 2) {
            ++critical;
            critical_value[to[i]] = true;
        }
    }
    for (const auto& e : g.extra_critical) {
        critical += e.count;
        in[index[e.to]] += 2 * e.count;
        if (e.count > 0) critical_value[index[e.to]] = true;
    }
    if (critical < 2 || critical % 2 != 0) {
        diag.push_back("number of critical vertices is " + std::to_string(critical) +
                       "; Riemann-Hurwitz needs an even number at least 2");
        return report;
    }
    int d = static_cast<int>((critical + 2) / 2);
    for (std::size_t i = 0; i < nv; ++i)
        if (in[i] > d)
            diag.push_back("incoming degree of " + g.vertices[i].id + " is " + std::to_string(in[i]) +
                           " > degree " + std::to_string(d));
    std::vector<bool> post(critical_value);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < nv; ++i)
            if (post[i] && !post[to[i]]) post[to[i]] = changed = true;
    }
    long npost = std::count(post.begin(), post.end(), true);
    if (npost != 4) diag.push_back("postcritical set has " + std::to_string(npost) + " points, expected 4");
    for (std::size_t i = 0; i < nv; ++i)
        if (!post[i] && g.vertices[i].weight != 2)
            diag.push_back("vertex " + g.vertices[i].id + " is neither critical nor postcritical");
    if (diag.empty()) report.degree = d;
    return report;
}

int CompactPortrait::incoming(int x) const {
    int total = 2 * extra[x];
    for (int y = 0; y < 4; ++y)
        if (to[y] == x) total += weight[y];
    return total;
}

CompactPortrait compact(const DynamicPortrait& g) {
    PortraitReport report = validate_portrait(g);
    if (!report.valid()) {
        std::string msg = "invalid portrait";
        for (const auto& s : report.diagnostics) msg += "; " + s;
        throw Error(ErrorKind::domain, msg);
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i].id] = i;
    std::vector<bool> post(g.vertices.size(), false);
    for (const auto& v : g.vertices)
        if (v.weight == 2) post[index[v.to]] = true;
    for (const auto& e : g.extra_critical)
        if (e.count > 0) post[index[e.to]] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            std::size_t t = index[g.vertices[i].to];
            if (post[i] && !post[t]) post[t] = changed = true;
        }
    }
    CompactPortrait c;
    c.degree = *report.degree;
    std::map<std::string, int> slot;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (post[i]) {
            int k = static_cast<int>(slot.size());
            slot[g.vertices[i].id] = k;
            c.ids[k] = g.vertices[i].id;
        }
    for (const auto& v : g.vertices) {
        if (slot.count(v.id)) {
            int k = slot[v.id];
            c.to[k] = slot.at(v.to);
            c.weight[k] = v.weight;
        } else {
            c.extra[slot.at(v.to)] += 1;
        }
    }
    for (const auto& e : g.extra_critical) c.extra[slot.at(e.to)] += e.count;
    return c;
}

DynamicPortrait expand(const CompactPortrait& g) {
    DynamicPortrait out;
    for (int x = 0; x < 4; ++x) out.vertices.push_back({g.ids[x], g.weight[x], g.ids[g.to[x]]});
    for (int x = 0; x < 4; ++x)
        if (g.extra[x] > 0) out.extra_critical.push_back({g.ids[x], g.extra[x]});
    return out;
}

namespace {

int full_fiber_count(const CompactPortrait& g) {
    int k = 0;
    for (int x = 0; x < 4; ++x) {
        bool critical_value = g.extra[x] > 0;
        bool weight_one = false;
        for (int y = 0; y < 4; ++y)
            if (g.to[y] == x) (g.weight[y] == 2 ? critical_value : weight_one) = true;
        if (critical_value && !weight_one && g.incoming(x) == g.degree) ++k;
    }
    return k;
}

void check_divisors(int d, Int m, Int n) {
    if (m <= 0 || n <= 0 || m % n != 0)
        throw Error(ErrorKind::domain, "elementary divisors need n | m, got (" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");
    if (m * n != d)
        throw Error(ErrorKind::domain, "m*n = " + std::to_string(m * n) + " differs from degree " +
                                           std::to_string(d));
}

}  // namespace

Mod2Divisors mod2_divisors(const CompactPortrait& g) {
    switch (full_fiber_count(g)) {
    case 0: return {1, 1};
    case 2: return {0, 1};
    case 3: return {0, 0};
    }
    throw Error(ErrorKind::domain, "malformed portrait: number of full critical fibers is not 0, 2 or 3");
}

bool exceptional_ok(const CompactPortrait& g) {
    return !(mod2_divisors(g) == Mod2Divisors{0, 0} && g.degree % 4 != 0);
}

bool realizable_with(const CompactPortrait& g, Int m, Int n) {
    check_divisors(g.degree, m, n);
    Mod2Divisors r = mod2_divisors(g);
    return m % 2 == r.m && n % 2 == r.n;
}

BranchData branch_data(const CompactPortrait& g) {
    BranchData bd;
    bd.degree = g.degree;
    for (int x = 0; x < 4; ++x) {
        std::vector<int> parts(g.extra[x], 2);
        bool critical_value = g.extra[x] > 0;
        for (int y = 0; y < 4; ++y)
            if (g.to[y] == x) {
                parts.push_back(g.weight[y]);
                critical_value |= g.weight[y] == 2;
            }
        if (!critical_value) continue;
        parts.resize(parts.size() + (g.degree - g.incoming(x)), 1);
        std::sort(parts.rbegin(), parts.rend());
        bd.partitions.push_back(parts);
    }
    std::sort(bd.partitions.begin(), bd.partitions.end());
    return bd;
}

BranchData branch_data_from_divisors(int d, Int m, Int n) {
    check_divisors(d, m, n);
    BranchData bd;
    bd.degree = d;
    auto shape = [d](int ones) {
        std::vector<int> parts((d - ones) / 2, 2);
        parts.resize(parts.size() + ones, 1);
        return parts;
    };
    auto add = [&](int ones, int copies) {
        if (ones == d) return;  // all-ones fibers are not over critical values
        for (int i = 0; i < copies; ++i) bd.partitions.push_back(shape(ones));
    };
    if (m % 2 == 1) {
        add(1, 4);
    } else if (n % 2 == 1) {
        add(2, 2);
        add(0, 2);
    } else {
        add(4, 1);
        add(0, 3);
    }
    std::sort(bd.partitions.begin(), bd.partitions.end());
    return bd;
}

bool branch_data_realizable(const BranchData& bd) {
    int d = bd.degree;
    if (d < 2 || bd.partitions.empty() || bd.partitions.size() > 4) return false;
    int ramification = 0, full = 0;
    std::vector<int> ones;
    for (const auto& p : bd.partitions) {
        int sum = 0, o = 0;
        for (int part : p) {
            if (part != 1 && part != 2) return false;
            sum += part;
            o += part == 1;
            ramification += part - 1;
        }
        if (sum != d || o == d) return false;
        if (o == 0)
            ++full;
        else
            ones.push_back(o);
    }
    if (ramification != 2 * d - 2) return false;
    int rest = static_cast<int>(ones.size());
    auto all = [&](int v) { return std::all_of(ones.begin(), ones.end(), [v](int o) { return o == v; }); };
    if (d % 2 == 1) return full == 0 && rest == 4 && all(1);
    if (full == 2) return all(2) && (rest == 2 || d == 2);
    if (full == 3) return all(4) && (rest == 1 || d == 4) && d % 4 == 0;
    return false;
}

// ---- portrait of a presentation ----

PresentationPortrait portrait_from_presentation(const NetMapPresentation& p) {
    PresentationData pd(p);
    int d = static_cast<int>(p.degree());
    std::array<std::string, 4> p2_name;
    std::array<bool, 4> p2_in_p1{};
    for (int j = 0; j < 4; ++j) p2_name[j] = to_string(p.arcs[j].terminal);
    for (int i = 0; i < 4; ++i)
        if (pd.corner_in_p2(i) >= 0) p2_in_p1[pd.corner_in_p2(i)] = true;

    PresentationPortrait out;
    std::array<int, 4> outside{};  // noncritical preimages outside P2
    for (int i = 0; i < 4; ++i) {
        int j = pd.corner_in_p2(i);
        int image = pd.phi(p.arcs[i].initial);
        if (j >= 0) {
            out.phi.emplace_back(p2_name[j], p2_name[image]);
        } else {
            out.phi.emplace_back(to_string(p.arcs[i].initial), p2_name[image]);
            ++outside[image];
        }
    }
    std::array<int, 4> image{}, in{};
    for (int j = 0; j < 4; ++j) {
        image[j] = pd.phi(p.arcs[j].terminal);
        if (!p2_in_p1[j]) out.phi.emplace_back(p2_name[j], p2_name[image[j]]);
        in[image[j]] += p2_in_p1[j] ? 1 : 2;
    }
    for (int j = 0; j < 4; ++j)
        out.portrait.vertices.push_back({p2_name[j], p2_in_p1[j] ? 1 : 2, p2_name[image[j]]});
    for (int j = 0; j < 4; ++j) {
        int missing = d - in[j] - outside[j];
        if (missing < 0 || missing % 2 != 0)
            throw Error(ErrorKind::domain, "internal: inconsistent fiber over " + p2_name[j]);
        if (missing > 0) out.portrait.extra_critical.push_back({p2_name[j], missing / 2});
        out.adjoined_critical += missing / 2;
    }
    return out;
}

std::vector<std::string> postcritical_set(const NetMapPresentation& p) {
    PresentationPortrait pp = portrait_from_presentation(p);
    std::array<int, 4> to{};
    std::map<std::string, int> index;
    for (int j = 0; j < 4; ++j) index[pp.portrait.vertices[j].id] = j;
    int seed = 0;
    for (int j = 0; j < 4; ++j) {
        to[j] = index[pp.portrait.vertices[j].to];
        if (pp.portrait.vertices[j].weight == 2) seed |= 1 << to[j];
    }
    for (const auto& e : pp.portrait.extra_critical) seed |= 1 << index[e.to];
    int mask = closure_mask(to, seed);
    std::vector<std::string> out;
    for (int j = 0; j < 4; ++j)
        if (mask >> j & 1) out.push_back(pp.portrait.vertices[j].id);
    return out;
}

// ---- presentation of a portrait ----

namespace {

struct Corner {
    Vec2 point;
    int bits;  // position among the corners as (x, y) bits over F2
};

IntMatrix2 lift_sl2_f2(int c00, int c01, int c10, int c11) {
    static const std::pair<IntMatrix2, IntMatrix2> table[] = {
        {{1, 0, 0, 1}, {1, 0, 0, 1}},  {{1, 1, 0, 1}, {1, 1, 0, 1}},  {{1, 0, 1, 1}, {1, 0, 1, 1}},
        {{0, 1, 1, 0}, {0, 1, -1, 0}}, {{1, 1, 1, 0}, {1, 1, -1, 0}}, {{0, 1, 1, 1}, {0, 1, -1, 1}},
    };
    IntMatrix2 key{c00, c01, c10, c11};
    for (const auto& [reduced, lift] : table)
        if (reduced == key) return lift;
    throw Error(ErrorKind::domain, "internal: matrix over F2 is singular");
}

int parity_code(Vec2 v) { return static_cast<int>(mod(v.x, 2) * 2 + mod(v.y, 2)); }

}  // namespace

std::optional<NetMapPresentation> try_presentation_from_portrait(const CompactPortrait& g, Int m, Int n,
                                                                 ChoicePolicy policy) {
    const int d = g.degree;
    check_divisors(d, m, n);
    struct P1Point {
        int vertex;  // -1 for points added outside P2
        int target;
    };
    std::vector<P1Point> p1;
    for (int x = 0; x < 4; ++x)
        if (g.weight[x] == 1) p1.push_back({x, g.to[x]});
    for (int x = 0; x < 4; ++x)
        for (int k = g.incoming(x); k < d; ++k) p1.push_back({-1, x});
    std::vector<int> critical;
    for (int x = 0; x < 4; ++x)
        if (g.weight[x] == 2) critical.push_back(x);
    if (p1.size() != 4) return std::nullopt;

    std::array<Corner, 4> corners;
    if (policy == ChoicePolicy::alternative)
        corners = {Corner{{0, 0}, 0}, Corner{{m, 0}, 2}, Corner{{0, n}, 1}, Corner{{m, n}, 3}};
    else
        corners = {Corner{{0, 0}, 0}, Corner{{0, n}, 1}, Corner{{m, 0}, 2}, Corner{{m, n}, 3}};

    const PortraitKey target_key = portrait_canonical(g);
    AGroup group(m, n);

    std::array<int, 4> slot_of{0, 1, 2, 3};  // corner k holds p1[slot_of[k]]
    do {
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k)
            for (int l = k + 1; l < 4 && ok; ++l) {
                bool same_parity = parity_code(corners[k].point) == parity_code(corners[l].point);
                bool same_image = p1[slot_of[k]].target == p1[slot_of[l]].target;
                ok = same_parity == same_image;
            }
        if (!ok) continue;

        std::vector<int> added_corners;
        for (int k = 0; k < 4; ++k)
            if (p1[slot_of[k]].vertex < 0) added_corners.push_back(k);
        std::vector<int> eta_order = critical;
        do {
            // eta_corner[x]: corner whose arc ends at P2 vertex x
            std::array<int, 4> eta_corner{};
            for (int k = 0; k < 4; ++k)
                if (p1[slot_of[k]].vertex >= 0) eta_corner[p1[slot_of[k]].vertex] = k;
            for (std::size_t i = 0; i < added_corners.size(); ++i) eta_corner[eta_order[i]] = added_corners[i];

            // partial mod-2 map: label parity -> corner bits
            std::array<int, 4> theta{-1, -1, -1, -1};
            bool consistent = true;
            for (int k = 0; k < 4 && consistent; ++k) {
                int p = parity_code(corners[k].point);
                int bits = corners[eta_corner[p1[slot_of[k]].target]].bits;
                if (theta[p] >= 0 && theta[p] != bits) consistent = false;
                theta[p] = bits;
            }
            if (!consistent) continue;

            std::array<int, 4> sigma{0, 1, 2, 3};
            do {
                bool extends = true;
                for (int p = 0; p < 4; ++p)
                    if (theta[p] >= 0 && sigma[p] != theta[p]) extends = false;
                if (!extends) continue;
                std::array<int, 4> parity_for_bits{};
                for (int p = 0; p < 4; ++p) parity_for_bits[sigma[p]] = p;

                // labels for the critical P2 vertices
                std::set<AElement> used;
                std::array<Vec2, 4> label{};
                bool placed = true;
                for (int x : critical) {
                    int want = parity_for_bits[corners[eta_corner[g.to[x]]].bits];
                    bool found = false;
                    for (Int px = 0; px < 2 * m && !found; ++px)
                        for (Int py = 0; py < 2 * n && !found; ++py) {
                            Vec2 v{px, py};
                            AElement h{px, py};
                            if (parity_code(v) != want || group.in_lattice_image(h)) continue;
                            AElement r = group.pm_rep(h);
                            if (used.count(r)) continue;
                            used.insert(r);
                            label[x] = v;
                            found = true;
                        }
                    if (!found) placed = false;
                }
                if (!placed) continue;

                auto bit_vec = [](int bits) { return Vec2{bits >> 1 & 1, bits & 1}; };
                Vec2 b0 = bit_vec(sigma[0]);
                Vec2 c1 = bit_vec(sigma[2] ^ sigma[0]);
                Vec2 c2 = bit_vec(sigma[1] ^ sigma[0]);
                IntMatrix2 q = lift_sl2_f2(static_cast<int>(c1.x), static_cast<int>(c2.x), static_cast<int>(c1.y),
                                           static_cast<int>(c2.y));
                NetMapPresentation out;
                out.a = q * IntMatrix2::diag(m, n);
                out.b = out.a * b0;
                for (int k = 0; k < 4; ++k) {
                    const P1Point& pt = p1[slot_of[k]];
                    Vec2 init = q * corners[k].point;
                    Vec2 term = init;
                    if (pt.vertex < 0) {
                        for (int x : critical)
                            if (eta_corner[x] == k) term = q * label[x];
                    }
                    out.arcs[k] = {init, term};
                }
                try {
                    CompactPortrait back = compact(portrait_from_presentation(out).portrait);
                    if (portrait_canonical(back) == target_key) return out;
                } catch (const Error&) {
                }
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        } while (std::next_permutation(eta_order.begin(), eta_order.end()));
    } while (std::next_permutation(slot_of.begin(), slot_of.end()));
    return std::nullopt;
}

NetMapPresentation presentation_from_portrait(const CompactPortrait& g, Int m, Int n, ChoicePolicy policy) {
    if (!realizable_with(g, m, n))
        throw Error(ErrorKind::infeasible, "portrait is not realizable with elementary divisors (" +
                                               std::to_string(m) + "," + std::to_string(n) + ")");
    auto p = try_presentation_from_portrait(g, m, n, policy);
    if (!p) throw Error(ErrorKind::domain, "internal: realizability contract violated");
    return *p;
}

// ---- canonical forms and enumeration ----

namespace {

constexpr int kWordBits = 12;

PortraitKey encode(const std::array<int, 4>& to, const std::array<int, 4>& weight, const std::array<int, 4>& extra,
                   const std::array<int, 4>& perm) {
    std::array<PortraitKey, 4> word{};
    for (int u = 0; u < 4; ++u)
        word[perm[u]] = static_cast<PortraitKey>(perm[to[u]]) << 7 | static_cast<PortraitKey>(weight[u] - 1) << 6 |
                        static_cast<PortraitKey>(extra[u]);
    PortraitKey key = 0;
    for (int i = 0; i < 4; ++i) key = key << kWordBits | word[i];
    return key;
}

PortraitKey canonical_key(const std::array<int, 4>& to, const std::array<int, 4>& weight,
                          const std::array<int, 4>& extra) {
    static const std::vector<std::array<int, 4>> perms = [] {
        std::vector<std::array<int, 4>> all;
        std::array<int, 4> p{0, 1, 2, 3};
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return all;
    }();
    PortraitKey best = ~PortraitKey{0};
    for (const auto& p : perms) best = std::min(best, encode(to, weight, extra, p));
    return best;
}

}  // namespace

PortraitKey portrait_canonical(const CompactPortrait& g) {
    for (int x = 0; x < 4; ++x)
        if (g.extra[x] >= 64) throw Error(ErrorKind::domain, "portrait too large for canonical encoding");
    return canonical_key(g.to, g.weight, g.extra);
}

bool portrait_isomorphic(const CompactPortrait& g1, const CompactPortrait& g2) {
    return g1.degree == g2.degree && portrait_canonical(g1) == portrait_canonical(g2);
}

CompactPortrait portrait_from_key(PortraitKey key, int degree) {
    CompactPortrait g;
    g.degree = degree;
    for (int i = 3; i >= 0; --i) {
        PortraitKey word = key & ((PortraitKey{1} << kWordBits) - 1);
        key >>= kWordBits;
        g.to[i] = static_cast<int>(word >> 7 & 3);
        g.weight[i] = static_cast<int>(word >> 6 & 1) + 1;
        g.extra[i] = static_cast<int>(word & 63);
        g.ids[i] = "p" + std::to_string(i);
    }
    return g;
}

namespace {

void enumerate_range(int d, int worker, int workers, std::vector<PortraitKey>& out) {
    std::set<PortraitKey> keys;
    for (int code = worker; code < 256; code += workers) {
        std::array<int, 4> to{code & 3, code >> 2 & 3, code >> 4 & 3, code >> 6 & 3};
        for (int wmask = 0; wmask < 16; ++wmask) {
            std::array<int, 4> weight{};
            std::array<int, 4> in_p{};
            int w2 = 0;
            for (int x = 0; x < 4; ++x) {
                weight[x] = (wmask >> x & 1) + 1;
                in_p[to[x]] += weight[x];
                w2 += weight[x] == 2;
            }
            if (std::any_of(in_p.begin(), in_p.end(), [d](int v) { return v > d; })) continue;
            int total = 2 * d - 2 - w2;
            if (total < 0) continue;
            std::array<int, 4> cap{};
            for (int x = 0; x < 4; ++x) cap[x] = (d - in_p[x]) / 2;
            std::array<int, 4> extra{};
            for (extra[0] = 0; extra[0] <= std::min(cap[0], total); ++extra[0])
                for (extra[1] = 0; extra[1] <= std::min(cap[1], total - extra[0]); ++extra[1])
                    for (extra[2] = 0; extra[2] <= std::min(cap[2], total - extra[0] - extra[1]); ++extra[2]) {
                        extra[3] = total - extra[0] - extra[1] - extra[2];
                        if (extra[3] > cap[3]) continue;
                        int seed = 0;
                        for (int x = 0; x < 4; ++x) {
                            if (weight[x] == 2) seed |= 1 << to[x];
                            if (extra[x] > 0) seed |= 1 << x;
                        }
                        if (closure_mask(to, seed) != 15) continue;
                        CompactPortrait g;
                        g.to = to;
                        g.weight = weight;
                        g.extra = extra;
                        g.degree = d;
                        int k = full_fiber_count(g);
                        if (k != 0 && k != 2 && k != 3) continue;
                        if (k == 3 && d % 4 != 0) continue;
                        keys.insert(canonical_key(to, weight, extra));
                    }
        }
    }
    out.assign(keys.begin(), keys.end());
}

}  // namespace

std::vector<CompactPortrait> enumerate_portraits(int d, int workers) {
    if (d < 2) throw Error(ErrorKind::domain, "degree must be at least 2");
    if (d > 64) throw Error(ErrorKind::domain, "degree too large for portrait enumeration");
    workers = std::clamp(workers, 1, 256);
    std::vector<std::vector<PortraitKey>> parts(workers);
    if (workers == 1) {
        enumerate_range(d, 0, 1, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(enumerate_range, d, w, workers, std::ref(parts[w]));
        for (auto& t : pool) t.join();
    }
    std::vector<PortraitKey> keys;
    for (const auto& p : parts) keys.insert(keys.end(), p.begin(), p.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<CompactPortrait> out;
    out.reserve(keys.size());
    for (PortraitKey k : keys) out.push_back(portrait_from_key(k, d));
    return out;
}

}  // namespace netmap
