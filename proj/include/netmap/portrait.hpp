#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netmap/presentation.hpp"

namespace netmap {

struct PortraitVertex {
    std::string id;
    int weight = 1;
    std::string to;
};

struct ExtraCritical {
    std::string to;
    int count = 0;
};

// Weighted functional digraph as exchanged in files: named vertices plus
// anonymous weight-2 vertices recorded as counts per target.
struct DynamicPortrait {
    std::vector<PortraitVertex> vertices;
    std::vector<ExtraCritical> extra_critical;
};

struct PortraitReport {
    std::optional<int> degree;
    std::vector<std::string> diagnostics;
    bool valid() const { return degree.has_value(); }
};

PortraitReport validate_portrait(const DynamicPortrait& g);

// Normal form on the four postcritical vertices. Critical vertices outside
// the postcritical set are collapsed into per-target counts.
struct CompactPortrait {
    std::array<std::string, 4> ids;
    std::array<int, 4> to{};
    std::array<int, 4> weight{};
    std::array<int, 4> extra{};
    int degree = 0;

    int incoming(int x) const;
};

// Throws Error(domain) with the diagnostics when g is invalid.
CompactPortrait compact(const DynamicPortrait& g);
DynamicPortrait expand(const CompactPortrait& g);

struct Mod2Divisors {
    int m = 1, n = 1;
    auto operator<=>(const Mod2Divisors&) const = default;
};

Mod2Divisors mod2_divisors(const CompactPortrait& g);
bool exceptional_ok(const CompactPortrait& g);
bool realizable_with(const CompactPortrait& g, Int m, Int n);

struct BranchData {
    int degree = 0;
    std::vector<std::vector<int>> partitions;  // each sorted descending; list sorted
    auto operator<=>(const BranchData&) const = default;
};

BranchData branch_data(const CompactPortrait& g);
BranchData branch_data_from_divisors(int d, Int m, Int n);
bool branch_data_realizable(const BranchData& bd);

struct PresentationPortrait {
    std::vector<std::pair<std::string, std::string>> phi;  // P1 ∪ P2 in presentation order
    DynamicPortrait portrait;  // the four P2 points plus anonymous criticals
    int adjoined_critical = 0;
};

PresentationPortrait portrait_from_presentation(const NetMapPresentation& p);
std::vector<std::string> postcritical_set(const NetMapPresentation& p);

enum class ChoicePolicy { standard, alternative };

NetMapPresentation presentation_from_portrait(const CompactPortrait& g, Int m, Int n,
                                              ChoicePolicy policy = ChoicePolicy::standard);
// Runs the construction without the congruence precondition; empty when no
// consistent labeling exists.
std::optional<NetMapPresentation> try_presentation_from_portrait(const CompactPortrait& g, Int m, Int n,
                                                                 ChoicePolicy policy = ChoicePolicy::standard);

using PortraitKey = std::uint64_t;

PortraitKey portrait_canonical(const CompactPortrait& g);
bool portrait_isomorphic(const CompactPortrait& g1, const CompactPortrait& g2);
// anonymous representative of a canonical key (ids "p0".."p3")
CompactPortrait portrait_from_key(PortraitKey key, int degree);

std::vector<CompactPortrait> enumerate_portraits(int d, int workers = 1);

}  // namespace netmap
