#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "braidtk/linking_graph.hpp"

namespace braidtk {

// A system of curves on a surface, pairwise transverse and intersecting at
// most once. `events` lists the intersections; `cyclic[c]` orders the events
// along curve c; `flips[e]` picks one of the two transverse corner pairings
// at event e (relative to the canonical role order of the event's pair).
struct CurveConfiguration {
    int curves = 0;
    std::vector<std::array<int, 2>> events;
    std::vector<std::vector<int>> cyclic;
    std::vector<std::uint8_t> flips;

    int degree(int c) const { return static_cast<int>(cyclic[c].size()); }
};

// All standard brick curves of a linking graph, with rotation data from the
// brick-diagram plane coordinates.
CurveConfiguration standard_configuration(const LinkingGraph& g);

// Abstract configurations. Trees of maximum degree 3 need no extra data; a
// vertex of degree >= 4 requires explicit cyclic orders.
CurveConfiguration chain_configuration(int n);
CurveConfiguration tripod_configuration(int a, int b, int c);  // leg lengths
CurveConfiguration tree_configuration(int n, const std::vector<std::pair<int, int>>& edges);
CurveConfiguration abstract_configuration(int n, const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<std::vector<int>>& orders);

struct SubsurfaceSummary {
    int betti = 0;
    int boundary = 0;
    int genus = 0;
    bool connected = true;
};

// Regular-neighborhood data of the whole configuration; throws on a
// disconnected configuration (use the per-component variant then).
SubsurfaceSummary neighborhood_summary(const CurveConfiguration& cfg);
std::vector<SubsurfaceSummary> neighborhood_component_summaries(const CurveConfiguration& cfg);

// Neighborhood of a connected sub-collection of curves of `cfg`.
SubsurfaceSummary subset_summary(const CurveConfiguration& cfg, const std::vector<int>& curves);

// True iff the selected curves use every brick of the word's diagram.
bool spans_whole_surface(const std::vector<int>& curve_subset, const LinkingGraph& g);

// Intersection graph is a tree containing E6 as a subtree.
bool is_E_arboreal(const CurveConfiguration& cfg);
bool subset_is_E_arboreal(const CurveConfiguration& cfg, const std::vector<int>& curves);

enum class ArcTier { Unknown = 0, One = 1, Two = 2 };

// Does `curve` meet the regular neighborhood of `priors` in a single arc?
// Tier 1: exactly one event with exactly one prior. Tier 2: minimal-position
// arc count in the ribbon model, cancelling excursions through disk regions.
// `Unknown` is a refusal, never a disproof. Requires `cfg` to be a spanning
// configuration (standard_configuration output).
ArcTier single_arc_tier(const CurveConfiguration& cfg, const std::vector<int>& priors, int curve);

struct AssemblageReport {
    bool accepted = false;
    char failed_condition = 0;  // 'a', 'b' or 'c'
    int failed_index = -1;
    int h = 0;
    int r = 0;
    int betti = 0;
    std::vector<int> tiers;  // per attached curve, 1 or 2
};

// Checks that order[0..k) is an E-arboreal configuration of genus >= h_min,
// that each later curve meets the running subsurface in a single arc, and
// that the order exhausts every curve of the configuration.
AssemblageReport verify_assemblage(const CurveConfiguration& cfg, const std::vector<int>& order,
                                   int k, int h_min, bool spanning_model = true);

namespace detail {

// Rotation conventions for brick-derived configurations; frozen values are
// the survivors of the corpus validation (closure invariants of every
// non-split word with c <= 8, N <= 4).
struct RotationRule {
    int pos_type1 = 0;   // 0: lower of tops, 1: upper of bottoms
    int pos_type2 = 0;
    int tie_t2_first = 0;
    int bit_same = 0, bit_cross1 = 0, bit_cross2 = 0;
    int par_same = 0, par_cross1 = 0, par_cross2 = 0;  // xor with column parity
};

CurveConfiguration standard_configuration_with_rule(const LinkingGraph& g, const RotationRule& r);
const RotationRule& frozen_rotation_rule();

}  // namespace detail

}  // namespace braidtk
