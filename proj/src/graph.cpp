#include "legf/graph.hpp"

#include <algorithm>
#include <functional>

namespace legf {

AbstractGraph AbstractGraph::make(std::vector<VertexId> vertices,
                                  std::vector<Edge> edges) {
    AbstractGraph g;
    g.vertices = std::move(vertices);
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()),
                     g.vertices.end());
    g.edges = std::move(edges);
    g.check_well_formed();
    return g;
}

void AbstractGraph::check_well_formed() const {
    std::set<VertexId> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size())
        throw Error("malformed-graph", "duplicate vertex id");
    std::set<EdgeId> es;
    for (const auto& e : edges) {
        if (!es.insert(e.id).second)
            throw Error("malformed-graph", "duplicate edge id " + e.id);
        if (!vs.count(e.u) || !vs.count(e.v))
            throw Error("malformed-graph",
                        "edge " + e.id + " has undeclared endpoint");
    }
}

bool AbstractGraph::has_vertex(const VertexId& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const AbstractGraph::Edge* AbstractGraph::find_edge(const EdgeId& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

int AbstractGraph::valence(const VertexId& v) const {
    int n = 0;
    for (const auto& e : edges) {
        if (e.u == v) ++n;
        if (e.v == v) ++n;
    }
    return n;
}

std::vector<std::pair<EdgeId, VertexId>> AbstractGraph::incident(
    const VertexId& v) const {
    std::vector<std::pair<EdgeId, VertexId>> out;
    for (const auto& e : edges) {
        if (e.u == v) out.emplace_back(e.id, e.v);
        if (e.v == v) out.emplace_back(e.id, e.u);
    }
    return out;
}

namespace {

std::size_t components_of(const std::vector<VertexId>& vertices,
                          const std::vector<AbstractGraph::Edge>& edges) {
    if (vertices.empty()) return 0;
    std::map<VertexId, VertexId> parent;
    for (const auto& v : vertices) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) parent[find(e.u)] = find(e.v);
    std::set<VertexId> roots;
    for (const auto& v : vertices) roots.insert(find(v));
    return roots.size();
}

}  // namespace

std::size_t AbstractGraph::component_count() const {
    return components_of(vertices, edges);
}

bool AbstractGraph::connected() const { return component_count() <= 1; }

// ---------------------------------------------------------------------------
// Cycles

Cycle canonical_cycle(const Cycle& c) {
    const std::size_t n = c.edges.size();
    if (n == 0) return c;
    Cycle best;
    bool first = true;
    auto consider = [&](const Cycle& cand) {
        if (first || cand.edges < best.edges ||
            (cand.edges == best.edges && cand.vertices < best.vertices)) {
            best = cand;
            first = false;
        }
    };
    // forward rotations
    for (std::size_t r = 0; r < n; ++r) {
        Cycle cand;
        for (std::size_t i = 0; i < n; ++i) {
            cand.edges.push_back(c.edges[(r + i) % n]);
            cand.vertices.push_back(c.vertices[(r + i) % n]);
        }
        consider(cand);
    }
    // reversed traversal: edge k seen backwards, tail becomes the other end
    for (std::size_t r = 0; r < n; ++r) {
        Cycle cand;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t k = (r + n - i) % n;  // edge index walked backwards
            cand.edges.push_back(c.edges[(k + n - 1) % n]);
            cand.vertices.push_back(c.vertices[k]);
        }
        consider(cand);
    }
    return best;
}

std::string cycle_key(const Cycle& c) {
    Cycle canon = canonical_cycle(c);
    std::string key;
    for (std::size_t i = 0; i < canon.edges.size(); ++i) {
        if (i) key += ",";
        key += canon.edges[i];
    }
    return key;
}

bool cycle_valid(const AbstractGraph& g, const Cycle& c) {
    const std::size_t n = c.edges.size();
    if (n == 0 || c.vertices.size() != n) return false;
    std::set<EdgeId> seen_e(c.edges.begin(), c.edges.end());
    if (seen_e.size() != n) return false;
    std::set<VertexId> seen_v(c.vertices.begin(), c.vertices.end());
    if (seen_v.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto* e = g.find_edge(c.edges[i]);
        if (!e) return false;
        const VertexId& tail = c.vertices[i];
        const VertexId& head = c.vertices[(i + 1) % n];
        bool ok = (e->u == tail && e->v == head) || (e->v == tail && e->u == head);
        if (!ok) return false;
    }
    return true;
}

std::vector<Cycle> enumerate_cycles(const AbstractGraph& g) {
    g.check_well_formed();
    std::map<std::string, Cycle> found;

    auto record = [&](const Cycle& c) {
        Cycle canon = canonical_cycle(c);
        found.emplace(cycle_key(canon), canon);
    };

    for (const auto& e : g.edges)
        if (e.u == e.v) record(Cycle{{e.id}, {e.u}});

    // DFS for cycles of length >= 2: start vertex is the least on the cycle.
    std::vector<VertexId> order = g.vertices;
    std::sort(order.begin(), order.end());
    for (const auto& start : order) {
        std::vector<EdgeId> path_edges;
        std::vector<VertexId> path_vertices{start};
        std::set<VertexId> on_path{start};
        std::set<EdgeId> used;

        std::function<void(const VertexId&)> dfs = [&](const VertexId& at) {
            for (const auto& e : g.edges) {
                if (e.u == e.v) continue;
                if (used.count(e.id)) continue;
                VertexId to;
                if (e.u == at)
                    to = e.v;
                else if (e.v == at)
                    to = e.u;
                else
                    continue;
                if (to == start) {
                    if (path_edges.size() >= 1) {
                        Cycle c;
                        c.edges = path_edges;
                        c.edges.push_back(e.id);
                        c.vertices = path_vertices;
                        record(c);
                    }
                    continue;
                }
                if (to < start || on_path.count(to)) continue;
                path_edges.push_back(e.id);
                path_vertices.push_back(to);
                on_path.insert(to);
                used.insert(e.id);
                dfs(to);
                used.erase(e.id);
                on_path.erase(to);
                path_vertices.pop_back();
                path_edges.pop_back();
            }
        };
        dfs(start);
    }

    std::vector<Cycle> out;
    out.reserve(found.size());
    for (auto& [key, c] : found) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.edges.size() != b.edges.size())
            return a.edges.size() < b.edges.size();
        if (a.edges != b.edges) return a.edges < b.edges;
        return a.vertices < b.vertices;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Cut vertices and cut edges

CutSet cut_set(const AbstractGraph& g) {
    g.check_well_formed();
    CutSet out;

    // Lowlink over the multigraph, loops ignored. Parallel edges act as back
    // edges (only the tree edge itself is skipped on the way back), so they
    // cancel bridges and articulation as the deletion definition requires.
    std::map<VertexId, int> disc, low;
    int timer = 0;

    struct Arc {
        VertexId to;
        EdgeId via;
    };
    std::map<VertexId, std::vector<Arc>> adj;
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        adj[e.u].push_back({e.v, e.id});
        adj[e.v].push_back({e.u, e.id});
    }

    std::function<void(const VertexId&, const EdgeId*, bool)> dfs =
        [&](const VertexId& u, const EdgeId* via, bool is_root) {
            disc[u] = low[u] = timer++;
            int children = 0;
            bool articulates = false;
            for (const auto& arc : adj[u]) {
                if (via && arc.via == *via) continue;
                if (disc.count(arc.to)) {
                    low[u] = std::min(low[u], disc[arc.to]);
                    continue;
                }
                ++children;
                dfs(arc.to, &arc.via, false);
                low[u] = std::min(low[u], low[arc.to]);
                if (low[arc.to] > disc[u]) out.edges.insert(arc.via);
                if (!is_root && low[arc.to] >= disc[u]) articulates = true;
            }
            if ((is_root && children >= 2) || articulates)
                out.vertices.insert(u);
        };

    for (const auto& v : g.vertices)
        if (!disc.count(v)) dfs(v, nullptr, true);
    return out;
}

// ---------------------------------------------------------------------------
// K4 minor recognition

namespace {

struct WorkGraph {
    std::vector<VertexId> vertices;
    std::vector<AbstractGraph::Edge> edges;
};

int work_valence(const WorkGraph& g, const VertexId& v) {
    int n = 0;
    for (const auto& e : g.edges) {
        if (e.u == v) ++n;
        if (e.v == v) ++n;
    }
    return n;
}

}  // namespace

bool is_k4_minor_free(const AbstractGraph& g) {
    g.check_well_formed();
    WorkGraph w{g.vertices, g.edges};
    bool changed = true;
    while (changed) {
        changed = false;
        // deletions first: loops, then valence<=1 vertices
        for (std::size_t i = 0; i < w.edges.size(); ++i) {
            if (w.edges[i].u == w.edges[i].v) {
                w.edges.erase(w.edges.begin() + i);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (std::size_t i = 0; i < w.vertices.size(); ++i) {
            if (work_valence(w, w.vertices[i]) <= 1) {
                VertexId v = w.vertices[i];
                w.vertices.erase(w.vertices.begin() + i);
                for (std::size_t j = 0; j < w.edges.size(); ++j) {
                    if (w.edges[j].u == v || w.edges[j].v == v) {
                        w.edges.erase(w.edges.begin() + j);
                        break;
                    }
                }
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // merge one parallel pair
        for (std::size_t i = 0; i < w.edges.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < w.edges.size() && !changed; ++j) {
                const auto& a = w.edges[i];
                const auto& b = w.edges[j];
                bool same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
                if (same) {
                    w.edges.erase(w.edges.begin() + j);
                    changed = true;
                }
            }
        }
        if (changed) continue;
        // suppress one valence-2 vertex
        for (std::size_t i = 0; i < w.vertices.size() && !changed; ++i) {
            const VertexId v = w.vertices[i];
            if (work_valence(w, v) != 2) continue;
            std::vector<std::size_t> inc;
            for (std::size_t j = 0; j < w.edges.size(); ++j)
                if (w.edges[j].u == v || w.edges[j].v == v) inc.push_back(j);
            // two distinct non-loop edges (loops were removed above)
            VertexId a = w.edges[inc[0]].u == v ? w.edges[inc[0]].v : w.edges[inc[0]].u;
            VertexId b = w.edges[inc[1]].u == v ? w.edges[inc[1]].v : w.edges[inc[1]].u;
            EdgeId keep = w.edges[inc[0]].id;
            w.edges.erase(w.edges.begin() + inc[1]);
            w.edges.erase(w.edges.begin() + inc[0]);
            w.edges.push_back({keep, a, b});
            w.vertices.erase(w.vertices.begin() + i);
            changed = true;
        }
    }
    return w.vertices.empty() && w.edges.empty();
}

// ---------------------------------------------------------------------------
// Brute-force oracle

bool brute_force_k4_oracle(const AbstractGraph& g) {
    g.check_well_formed();
    if (g.vertices.size() > 8 || g.edges.size() > 14)
        throw Error("instance-too-large",
                    "oracle is limited to 8 vertices and 14 edges");
    const std::size_t n = g.vertices.size();
    if (n < 4) return false;

    // simple adjacency (loops/parallels are irrelevant to minors of K4)
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[g.vertices[i]] = i;
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        std::size_t a = index[e.u], b = index[e.v];
        adj[a][b] = adj[b][a] = true;
    }

    std::vector<int> part(n, 0);  // 0 = unused, 1..4 = branch set
    auto connected_part = [&](int p) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (part[i] == p) members.push_back(i);
        if (members.empty()) return false;
        std::set<std::size_t> seen{members[0]};
        std::vector<std::size_t> stack{members[0]};
        while (!stack.empty()) {
            std::size_t at = stack.back();
            stack.pop_back();
            for (std::size_t j : members)
                if (!seen.count(j) && adj[at][j]) {
                    seen.insert(j);
                    stack.push_back(j);
                }
        }
        return seen.size() == members.size();
    };
    auto touching = [&](int p, int q) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (part[i] == p && part[j] == q && adj[i][j]) return true;
        return false;
    };

    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (std::size_t i = 0; i < n; ++i) {
            part[i] = int(x % 5);
            x /= 5;
        }
        bool ok = true;
        for (int p = 1; p <= 4 && ok; ++p) ok = connected_part(p);
        for (int p = 1; p <= 4 && ok; ++p)
            for (int q = p + 1; q <= 4 && ok; ++q) ok = touching(p, q);
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// K4 subdivision witnesses

bool witness_valid(const AbstractGraph& g, const MinorWitness& w) {
    std::set<VertexId> branch(w.branch.begin(), w.branch.end());
    if (branch.size() != 4) return false;
    for (const auto& b : branch)
        if (!g.has_vertex(b)) return false;

    static const int pair_of[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                      {1, 2}, {1, 3}, {2, 3}};
    std::set<VertexId> interiors;
    std::set<EdgeId> used_edges;
    for (int k = 0; k < 6; ++k) {
        const auto& p = w.paths[k];
        if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1)
            return false;
        if (p.vertices.front() != w.branch[pair_of[k][0]]) return false;
        if (p.vertices.back() != w.branch[pair_of[k][1]]) return false;
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            const auto* e = g.find_edge(p.edges[i]);
            if (!e) return false;
            const VertexId& a = p.vertices[i];
            const VertexId& b = p.vertices[i + 1];
            if (!((e->u == a && e->v == b) || (e->v == a && e->u == b)))
                return false;
            if (!used_edges.insert(p.edges[i]).second) return false;
        }
        for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            const VertexId& v = p.vertices[i];
            if (branch.count(v)) return false;
            if (!interiors.insert(v).second) return false;
        }
    }
    return true;
}

namespace {

struct SubdivisionSearch {
    const AbstractGraph& g;
    bool collect_all;
    std::vector<MinorWitness> found;
    std::set<std::string> seen_keys;

    std::array<VertexId, 4> branch;
    std::set<VertexId> blocked;  // branch vertices + interiors already used
    std::set<EdgeId> used_edges;
    std::array<WitnessPath, 6> paths;

    explicit SubdivisionSearch(const AbstractGraph& graph, bool all)
        : g(graph), collect_all(all) {}

    std::string key_of(const MinorWitness& w) {
        std::vector<std::string> parts;
        for (const auto& p : w.paths) {
            std::vector<EdgeId> es = p.edges;
            std::sort(es.begin(), es.end());
            std::string s;
            for (const auto& e : es) s += e + ";";
            parts.push_back(s);
        }
        std::sort(parts.begin(), parts.end());
        std::string key;
        for (const auto& b : w.branch) key += b + "|";
        for (const auto& p : parts) key += p + "#";
        return key;
    }

    bool pair_paths(int k) {
        if (k == 6) {
            MinorWitness w{branch, paths};
            if (seen_keys.insert(key_of(w)).second) found.push_back(w);
            return !collect_all;
        }
        static const int pair_of[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                          {1, 2}, {1, 3}, {2, 3}};
        const VertexId& from = branch[pair_of[k][0]];
        const VertexId& to = branch[pair_of[k][1]];
        WitnessPath path;
        path.vertices.push_back(from);
        return extend(k, from, to, path);
    }

    bool extend(int k, const VertexId& at, const VertexId& to,
                WitnessPath& path) {
        for (const auto& e : g.edges) {
            if (used_edges.count(e.id)) continue;
            VertexId next;
            if (e.u == at)
                next = e.v;
            else if (e.v == at)
                next = e.u;
            else
                continue;
            if (next == to) {
                path.edges.push_back(e.id);
                path.vertices.push_back(next);
                used_edges.insert(e.id);
                paths[k] = path;
                std::set<VertexId> added;
                for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i)
                    if (blocked.insert(path.vertices[i]).second)
                        added.insert(path.vertices[i]);
                bool done = pair_paths(k + 1);
                for (const auto& v : added) blocked.erase(v);
                used_edges.erase(e.id);
                path.vertices.pop_back();
                path.edges.pop_back();
                if (done) return true;
                continue;
            }
            if (blocked.count(next)) continue;
            // interior vertex; loops cannot appear on a simple path
            if (next == at) continue;
            path.edges.push_back(e.id);
            path.vertices.push_back(next);
            used_edges.insert(e.id);
            blocked.insert(next);
            bool done = extend(k, next, to, path);
            blocked.erase(next);
            used_edges.erase(e.id);
            path.vertices.pop_back();
            path.edges.pop_back();
            if (done) return true;
        }
        return false;
    }

    void run() {
        std::vector<VertexId> cands;
        for (const auto& v : g.vertices)
            if (g.valence(v) >= 3) cands.push_back(v);
        std::sort(cands.begin(), cands.end());
        const std::size_t m = cands.size();
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t c = b + 1; c < m; ++c)
                    for (std::size_t d = c + 1; d < m; ++d) {
                        branch = {cands[a], cands[b], cands[c], cands[d]};
                        blocked = {branch.begin(), branch.end()};
                        used_edges.clear();
                        if (pair_paths(0) && !collect_all) return;
                    }
    }
};

}  // namespace

std::optional<MinorWitness> find_k4_subdivision(const AbstractGraph& g) {
    g.check_well_formed();
    SubdivisionSearch s(g, false);
    s.run();
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

std::vector<MinorWitness> all_k4_subdivisions(const AbstractGraph& g) {
    g.check_well_formed();
    SubdivisionSearch s(g, true);
    s.run();
    return s.found;
}

}  // namespace legf
