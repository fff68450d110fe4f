#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidtk/braid.hpp"

namespace braidtk {

// Innermost rectangle of the brick diagram: two consecutive occurrences of
// the same generator. Positions are 0-based letter indices.
struct Brick {
    int column = 0;
    int top = 0;
    int bottom = 0;
    bool operator==(const Brick&) const = default;
};

enum class EdgeKind { SameColumn, CrossColumn };

struct GraphEdge {
    int u = 0, v = 0;  // brick indices, u < v
    EdgeKind kind = EdgeKind::SameColumn;
};

struct LinkingGraph {
    int strands = 1;
    int word_length = 0;
    std::vector<Brick> bricks;  // column-major, top-down
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int size() const { return static_cast<int>(bricks.size()); }
    bool adjacent(int a, int b) const;
};

LinkingGraph linking_graph(const BraidWord& w);

// Word made of the two columns' letters only, relabeled to generators 1, 2.
BraidWord two_column_subword(const BraidWord& w, int column);

bool linking_graph_connected(const BraidWord& w);
bool linking_graph_is_path(const BraidWord& w);

bool is_prime(const BraidWord& w);

// Abstract graphs (vertex count + edge list), used for Dynkin classification
// of linking graphs and of intersection graphs of curve configurations.
enum class DynkinType { A, D, E6, E7, E8, ExtendedD, Other };

struct DynkinResult {
    DynkinType type = DynkinType::Other;
    int rank = 0;  // n for A_n / D_n / ExtendedD_n (vertex count, minus one for extended)
};

DynkinResult dynkin_type(const LinkingGraph& g);
DynkinResult dynkin_type_abstract(int vertices, const std::vector<std::pair<int, int>>& edges);
std::string dynkin_name(const DynkinResult& r);

// Liechti's column-walk algorithm: an induced (chordless) path in the linking
// graph from brick v to the first brick reached in the target column. Throws
// PreconditionError when the graph is not connected.
std::vector<int> induced_path(const LinkingGraph& g, int v, int target_column);

// An induced subtree isomorphic to E6 (tripod with leg lengths 1, 2, 2),
// if one exists. Vertices are returned center-first.
std::optional<std::array<int, 6>> contains_E6_subtree(const LinkingGraph& g);
std::optional<std::array<int, 6>> find_E6_in_subset(const LinkingGraph& g,
                                                    const std::vector<int>& subset);

// Deterministic DOT rendering: vertices c<col>_<k>, same-column edges solid,
// cross-column edges dashed.
std::string to_dot(const LinkingGraph& g);

}  // namespace braidtk
