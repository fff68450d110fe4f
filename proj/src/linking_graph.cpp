#include "braidtk/linking_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidtk {

bool LinkingGraph::adjacent(int a, int b) const {
    const auto& na = adj[a];
    return std::binary_search(na.begin(), na.end(), b);
}

LinkingGraph linking_graph(const BraidWord& w) {
    LinkingGraph g;
    g.strands = w.strands;
    g.word_length = w.length();

    std::vector<std::vector<int>> occ(w.strands);  // occurrence positions per column
    for (int p = 0; p < w.length(); ++p) occ[w.letters[p]].push_back(p);

    std::vector<std::vector<int>> column_bricks(w.strands);
    for (int col = 1; col <= w.strands - 1; ++col) {
        for (std::size_t k = 0; k + 1 < occ[col].size(); ++k) {
            column_bricks[col].push_back(g.size());
            g.bricks.push_back(Brick{col, occ[col][k], occ[col][k + 1]});
        }
    }

    auto add_edge = [&](int a, int b, EdgeKind kind) {
        if (a > b) std::swap(a, b);
        g.edges.push_back(GraphEdge{a, b, kind});
    };

    for (int col = 1; col <= w.strands - 1; ++col) {
        const auto& bs = column_bricks[col];
        // Consecutive bricks of a column always share a crossing.
        for (std::size_t k = 0; k + 1 < bs.size(); ++k)
            add_edge(bs[k], bs[k + 1], EdgeKind::SameColumn);
        // Strict interleaving against the next column.
        if (col + 1 <= w.strands - 1) {
            for (int a : bs) {
                for (int b : column_bricks[col + 1]) {
                    const Brick& A = g.bricks[a];
                    const Brick& B = g.bricks[b];
                    bool ab = A.top < B.top && B.top < A.bottom && A.bottom < B.bottom;
                    bool ba = B.top < A.top && A.top < B.bottom && B.bottom < A.bottom;
                    if (ab || ba) add_edge(a, b, EdgeKind::CrossColumn);
                }
            }
        }
    }

    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    g.adj.assign(g.size(), {});
    for (const auto& e : g.edges) {
        g.adj[e.u].push_back(e.v);
        g.adj[e.v].push_back(e.u);
    }
    for (auto& ns : g.adj) std::sort(ns.begin(), ns.end());
    return g;
}

BraidWord two_column_subword(const BraidWord& w, int column) {
    std::vector<int> sub;
    for (int l : w.letters)
        if (l == column || l == column + 1) sub.push_back(l == column ? 1 : 2);
    return BraidWord(3, std::move(sub));
}

static bool graph_connected(const LinkingGraph& g) {
    if (g.size() <= 1) return true;
    std::vector<char> seen(g.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == g.size();
}

bool linking_graph_connected(const BraidWord& w) { return graph_connected(linking_graph(w)); }

static bool is_path_graph(const LinkingGraph& g) {
    if (g.size() == 0) return true;
    if (!graph_connected(g)) return false;
    if (static_cast<int>(g.edges.size()) != g.size() - 1) return false;
    for (const auto& ns : g.adj)
        if (ns.size() > 2) return false;
    return true;
}

bool linking_graph_is_path(const BraidWord& w) { return is_path_graph(linking_graph(w)); }

bool is_prime(const BraidWord& w) {
    for (int col = 1; col <= w.strands - 1; ++col) {
        bool used = false;
        for (int l : w.letters)
            if (l == col) {
                used = true;
                break;
            }
        if (!used) return false;
    }
    return linking_graph_connected(w);
}

// --- Dynkin classification ---------------------------------------------------

namespace {

struct AbstractGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
};

DynkinResult classify(const AbstractGraph& g) {
    DynkinResult out;
    out.type = DynkinType::Other;
    const int n = g.n;
    if (n == 0) return out;

    // connectivity + tree check
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1, degsum = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    for (int v = 0; v < n; ++v) degsum += static_cast<int>(g.adj[v].size());
    if (count != n || degsum != 2 * (n - 1)) return out;  // disconnected or has a cycle

    std::vector<int> deg3, deg4plus;
    for (int v = 0; v < n; ++v) {
        if (g.adj[v].size() == 3) deg3.push_back(v);
        if (g.adj[v].size() >= 4) deg4plus.push_back(v);
    }

    auto leg_length = [&](int from, int toward) {
        // walk away from `from` while degree stays <= 2
        int len = 0, prev = from, cur = toward;
        while (true) {
            ++len;
            if (g.adj[cur].size() >= 3) return -len;  // hit another branch vertex
            int next = -1;
            for (int u : g.adj[cur])
                if (u != prev) next = u;
            if (next < 0) return len;
            prev = cur;
            cur = next;
        }
    };

    if (deg4plus.size() == 1 && deg3.empty() && g.adj[deg4plus[0]].size() == 4 && n == 5) {
        out.type = DynkinType::ExtendedD;  // star with four leaves
        out.rank = 4;
        return out;
    }
    if (!deg4plus.empty()) return out;

    if (deg3.empty()) {
        out.type = DynkinType::A;  // path
        out.rank = n;
        return out;
    }
    if (deg3.size() == 1) {
        int c = deg3[0];
        std::array<int, 3> legs{};
        for (int k = 0; k < 3; ++k) legs[k] = leg_length(c, g.adj[c][k]);
        std::sort(legs.begin(), legs.end());
        if (legs[0] < 1) return out;
        if (legs[0] == 1 && legs[1] == 1) {
            out.type = DynkinType::D;
            out.rank = n;
            return out;
        }
        if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
            out.type = legs[2] == 2 ? DynkinType::E6 : (legs[2] == 3 ? DynkinType::E7 : DynkinType::E8);
            out.rank = n;
            return out;
        }
        return out;
    }
    if (deg3.size() == 2) {
        // Extended D: both branch vertices carry two pendant leaves, joined by a path.
        for (int v : deg3) {
            int leaves = 0;
            for (int u : g.adj[v])
                if (g.adj[u].size() == 1) ++leaves;
            if (leaves != 2) return out;
        }
        out.type = DynkinType::ExtendedD;
        out.rank = n - 1;
        return out;
    }
    return out;
}

}  // namespace

DynkinResult dynkin_type_abstract(int vertices, const std::vector<std::pair<int, int>>& edges) {
    AbstractGraph g;
    g.n = vertices;
    g.adj.assign(vertices, {});
    for (auto [a, b] : edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    return classify(g);
}

DynkinResult dynkin_type(const LinkingGraph& g) {
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges.size());
    for (const auto& e : g.edges) es.emplace_back(e.u, e.v);
    return dynkin_type_abstract(g.size(), es);
}

std::string dynkin_name(const DynkinResult& r) {
    switch (r.type) {
        case DynkinType::A: return "A" + std::to_string(r.rank);
        case DynkinType::D: return "D" + std::to_string(r.rank);
        case DynkinType::E6: return "E6";
        case DynkinType::E7: return "E7";
        case DynkinType::E8: return "E8";
        case DynkinType::ExtendedD: return "ExtendedD" + std::to_string(r.rank);
        case DynkinType::Other: return "Other";
    }
    return "Other";
}

// --- induced path -------------------------------------------------------------

namespace {

// Bricks of one column are consecutive in the global order; collect indices.
std::vector<int> bricks_of_column(const LinkingGraph& g, int col) {
    std::vector<int> out;
    for (int i = 0; i < g.size(); ++i)
        if (g.bricks[i].column == col) out.push_back(i);
    return out;
}

// Does brick b link toward `dir` (next column in that direction)?
bool linked_toward(const LinkingGraph& g, int b, int dir) {
    int want = g.bricks[b].column + dir;
    for (int u : g.adj[b])
        if (g.bricks[u].column == want) return true;
    return false;
}

}  // namespace

std::vector<int> induced_path(const LinkingGraph& g, int v, int target_column) {
    if (v < 0 || v >= g.size()) throw PreconditionError("induced_path: bad start vertex");
    if (!graph_connected(g)) throw PreconditionError("induced_path: graph not connected");

    int dir = target_column > g.bricks[v].column ? 1 : (target_column < g.bricks[v].column ? -1 : 0);
    std::vector<int> path{v};
    if (dir == 0) return path;

    int cur = v;
    while (g.bricks[cur].column != target_column) {
        int col = g.bricks[cur].column;
        auto colb = bricks_of_column(g, col);
        int my_idx = static_cast<int>(std::find(colb.begin(), colb.end(), cur) - colb.begin());

        // Nearest brick in this column linked toward the target; ties prefer the
        // smaller brick index (upper brick).
        int best = -1, best_dist = 1 << 30;
        for (std::size_t k = 0; k < colb.size(); ++k) {
            if (!linked_toward(g, colb[k], dir)) continue;
            int dist = std::abs(static_cast<int>(k) - my_idx);
            if (dist < best_dist) {
                best_dist = dist;
                best = static_cast<int>(k);
            }
        }
        if (best < 0) throw PreconditionError("induced_path: column has no link toward target");
        // Walk within the column (consecutive bricks are adjacent).
        int step = best >= my_idx ? 1 : -1;
        for (int k = my_idx + step; step > 0 ? k <= best : k >= best; k += step)
            path.push_back(colb[k]);
        cur = colb[best];

        // Step over: candidates in the next column adjacent to cur. Choose the
        // brick closest (within its column) to a brick linked again onward.
        int next_col = col + dir;
        auto nextb = bricks_of_column(g, next_col);
        int chosen = -1, chosen_score = 1 << 30;
        for (std::size_t k = 0; k < nextb.size(); ++k) {
            if (!g.adjacent(cur, nextb[k])) continue;
            int score = 1 << 29;
            if (next_col == target_column) {
                score = 0;  // arrival; nothing further to optimize
            } else {
                for (std::size_t j = 0; j < nextb.size(); ++j) {
                    if (!linked_toward(g, nextb[j], dir)) continue;
                    score = std::min(score,
                                     std::abs(static_cast<int>(j) - static_cast<int>(k)));
                }
            }
            if (score < chosen_score) {
                chosen_score = score;
                chosen = static_cast<int>(nextb[k]);
            }
        }
        if (chosen < 0) throw PreconditionError("induced_path: no link into next column");
        path.push_back(chosen);
        cur = chosen;
    }
    return path;
}

// --- E6 search ----------------------------------------------------------------

namespace {

// Checks that `verts` induces exactly the E6 tree: center verts[0] with legs
// verts[1]; verts[2]-verts[3]; verts[4]-verts[5].
bool induces_E6(const LinkingGraph& g, const std::array<int, 6>& v) {
    static const std::vector<std::pair<int, int>> tree = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}};
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            bool want = false;
            for (auto [x, y] : tree)
                if ((x == a && y == b) || (x == b && y == a)) want = true;
            if (g.adjacent(v[a], v[b]) != want) return false;
        }
    return true;
}

}  // namespace

std::optional<std::array<int, 6>> find_E6_in_subset(const LinkingGraph& g,
                                                    const std::vector<int>& subset) {
    std::vector<char> in(g.size(), 0);
    for (int v : subset) in[v] = 1;
    auto nbrs_in = [&](int v) {
        std::vector<int> out;
        for (int u : g.adj[v])
            if (in[u]) out.push_back(u);
        return out;
    };
    for (int c : subset) {
        auto nc = nbrs_in(c);
        if (nc.size() < 3) continue;
        const int k = static_cast<int>(nc.size());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int l = 0; l < k; ++l) {
                    if (i == j || j == l || i == l) continue;
                    int leaf = nc[i], a1 = nc[j], b1 = nc[l];
                    for (int a2 : nbrs_in(a1)) {
                        if (a2 == c) continue;
                        for (int b2 : nbrs_in(b1)) {
                            if (b2 == c || b2 == a2) continue;
                            std::array<int, 6> cand{c, leaf, a1, a2, b1, b2};
                            bool distinct = true;
                            for (int x = 0; x < 6 && distinct; ++x)
                                for (int y = x + 1; y < 6; ++y)
                                    if (cand[x] == cand[y]) {
                                        distinct = false;
                                        break;
                                    }
                            if (distinct && induces_E6(g, cand)) return cand;
                        }
                    }
                }
    }
    return std::nullopt;
}

std::optional<std::array<int, 6>> contains_E6_subtree(const LinkingGraph& g) {
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return find_E6_in_subset(g, all);
}

// --- DOT ----------------------------------------------------------------------

std::string to_dot(const LinkingGraph& g) {
    std::vector<int> index_in_column(g.size(), 0);
    std::vector<int> counter(g.strands, 0);
    for (int i = 0; i < g.size(); ++i) index_in_column[i] = counter[g.bricks[i].column]++;
    auto name = [&](int i) {
        return "c" + std::to_string(g.bricks[i].column) + "_" + std::to_string(index_in_column[i]);
    };
    std::ostringstream os;
    os << "graph linking {\n";
    for (int i = 0; i < g.size(); ++i) os << "  " << name(i) << ";\n";
    for (const auto& e : g.edges)
        os << "  " << name(e.u) << " -- " << name(e.v)
           << (e.kind == EdgeKind::SameColumn ? " [style=solid];\n" : " [style=dashed];\n");
    os << "}\n";
    return os.str();
}

}  // namespace braidtk
