#include "legf/front.hpp"

#include <algorithm>
#include <cassert>

namespace legf {

Event lc(int pos) { return Event{EventKind::LC, pos, "", 0, 0}; }
Event rc(int pos) { return Event{EventKind::RC, pos, "", 0, 0}; }
Event xing(int pos) { return Event{EventKind::X, pos, "", 0, 0}; }
Event vx(std::string vertex, int pos, int n_left, int n_right) {
    return Event{EventKind::VX, pos, std::move(vertex), n_left, n_right};
}

Diagnostic validate(const FrontDiagram& d) {
    int count = 0;
    std::set<std::string> seen_vertices;
    for (std::size_t i = 0; i < d.events.size(); ++i) {
        const Event& e = d.events[i];
        const int idx = int(i);
        if (e.pos < 0) return Diagnostic::fail("negative position", idx);
        switch (e.kind) {
            case EventKind::LC:
                if (e.pos > count)
                    return Diagnostic::fail("left cusp position out of bounds", idx);
                count += 2;
                break;
            case EventKind::RC:
                if (e.pos + 2 > count)
                    return Diagnostic::fail("right cusp position out of bounds", idx);
                count -= 2;
                break;
            case EventKind::X:
                if (e.pos + 2 > count)
                    return Diagnostic::fail("crossing position out of bounds", idx);
                break;
            case EventKind::VX:
                if (e.vertex.empty())
                    return Diagnostic::fail("vertex event without id", idx);
                if (!seen_vertices.insert(e.vertex).second)
                    return Diagnostic::fail("vertex " + e.vertex + " appears twice", idx);
                if (e.n_left < 0 || e.n_right < 0)
                    return Diagnostic::fail("negative strand arity", idx);
                if (e.pos + e.n_left > count)
                    return Diagnostic::fail("vertex block out of bounds", idx);
                count += e.n_right - e.n_left;
                break;
        }
    }
    if (count != 0)
        return Diagnostic::fail("nonzero terminal strand count",
                                int(d.events.size()) - 1);
    return Diagnostic::pass();
}

std::vector<int> strand_counts(const FrontDiagram& d) {
    std::vector<int> counts;
    counts.reserve(d.events.size() + 1);
    int c = 0;
    counts.push_back(c);
    for (const Event& e : d.events) {
        switch (e.kind) {
            case EventKind::LC: c += 2; break;
            case EventKind::RC: c -= 2; break;
            case EventKind::X: break;
            case EventKind::VX: c += e.n_right - e.n_left; break;
        }
        counts.push_back(c);
    }
    return counts;
}

// ---------------------------------------------------------------------------
// Wire traversal

namespace {

struct Step {
    enum Kind { Continue, Turn, End } kind;
    WireRef next{};       // Continue, Turn
    EdgeEnd end{};        // End
    ChainCusp cusp{};     // Turn
};

Step step_right(const FrontDiagram& d, WireRef w) {
    const Event& e = d.events[w.gap];
    const int i = e.pos;
    switch (e.kind) {
        case EventKind::LC:
            return {Step::Continue, {w.gap + 1, w.pos < i ? w.pos : w.pos + 2}};
        case EventKind::RC:
            if (w.pos == i)
                return {Step::Turn, {w.gap, i + 1}, {}, {w.gap, i, i + 1}};
            if (w.pos == i + 1)
                return {Step::Turn, {w.gap, i}, {}, {w.gap, i + 1, i}};
            return {Step::Continue, {w.gap + 1, w.pos < i ? w.pos : w.pos - 2}};
        case EventKind::X:
            if (w.pos == i) return {Step::Continue, {w.gap + 1, i + 1}};
            if (w.pos == i + 1) return {Step::Continue, {w.gap + 1, i}};
            return {Step::Continue, {w.gap + 1, w.pos}};
        case EventKind::VX:
            if (w.pos >= i && w.pos < i + e.n_left) {
                Step s;
                s.kind = Step::End;
                s.end = {e.vertex, 0, w.pos - i};
                return s;
            }
            return {Step::Continue,
                    {w.gap + 1, w.pos < i ? w.pos : w.pos - e.n_left + e.n_right}};
    }
    return {};
}

Step step_left(const FrontDiagram& d, WireRef w) {
    const Event& e = d.events[w.gap - 1];
    const int i = e.pos;
    const int g = w.gap - 1;
    switch (e.kind) {
        case EventKind::LC:
            if (w.pos == i)
                return {Step::Turn, {w.gap, i + 1}, {}, {g, i, i + 1}};
            if (w.pos == i + 1)
                return {Step::Turn, {w.gap, i}, {}, {g, i + 1, i}};
            return {Step::Continue, {g, w.pos < i ? w.pos : w.pos - 2}};
        case EventKind::RC:
            return {Step::Continue, {g, w.pos < i ? w.pos : w.pos + 2}};
        case EventKind::X:
            if (w.pos == i) return {Step::Continue, {g, i + 1}};
            if (w.pos == i + 1) return {Step::Continue, {g, i}};
            return {Step::Continue, {g, w.pos}};
        case EventKind::VX:
            if (w.pos >= i && w.pos < i + e.n_right) {
                Step s;
                s.kind = Step::End;
                s.end = {e.vertex, 1, w.pos - i};
                return s;
            }
            return {Step::Continue,
                    {g, w.pos < i ? w.pos : w.pos + e.n_left - e.n_right}};
    }
    return {};
}

struct EndKey {
    int event;
    int side;
    int slot;
    bool operator<(const EndKey& o) const {
        if (event != o.event) return event < o.event;
        if (side != o.side) return side < o.side;
        return slot < o.slot;
    }
};

}  // namespace

FrontAnalysis::FrontAnalysis(const FrontDiagram& d) : d_(d) {
    Diagnostic diag = validate(d);
    if (!diag.ok)
        throw Error("invalid-diagram", diag.message + " (event " +
                                           std::to_string(diag.event_index) + ")");
    counts_ = strand_counts(d);

    std::vector<VertexId> vertex_ids;
    std::vector<std::pair<EndKey, EdgeEnd>> all_ends;
    for (std::size_t k = 0; k < d.events.size(); ++k) {
        const Event& e = d.events[k];
        if (e.kind != EventKind::VX) continue;
        vertex_events_[e.vertex] = int(k);
        vertex_ids.push_back(e.vertex);
        for (int s = 0; s < e.n_left; ++s)
            all_ends.push_back({{int(k), 0, s}, {e.vertex, 0, s}});
        for (int s = 0; s < e.n_right; ++s)
            all_ends.push_back({{int(k), 1, s}, {e.vertex, 1, s}});
    }
    std::sort(all_ends.begin(), all_ends.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    auto wire_of_end = [&](const EndKey& key) -> std::pair<WireRef, int> {
        const Event& e = d.events[key.event];
        if (key.side == 0) return {{key.event, e.pos + key.slot}, -1};
        return {{key.event + 1, e.pos + key.slot}, +1};
    };

    std::set<WireRef> used_wires;
    std::set<EdgeEnd> used_ends;

    for (const auto& [key, end] : all_ends) {
        if (used_ends.count(end)) continue;
        DiagramEdge edge;
        edge.ends[0] = end;
        used_ends.insert(end);
        auto [w, dir] = wire_of_end(key);
        for (;;) {
            edge.wires.push_back(w);
            edge.wire_dir.push_back(dir);
            used_wires.insert(w);
            Step s = dir > 0 ? step_right(d_, w) : step_left(d_, w);
            if (s.kind == Step::End) {
                edge.ends[1] = s.end;
                used_ends.insert(s.end);
                break;
            }
            if (s.kind == Step::Turn) {
                edge.cusps.push_back(s.cusp);
                dir = -dir;
            }
            w = s.next;
        }
        edges_.push_back(std::move(edge));
    }

    std::size_t total_wires = 0;
    for (int c : counts_) total_wires += std::size_t(c);
    if (used_wires.size() != total_wires)
        throw Error("closed-component-without-vertex",
                    "diagram contains a closed strand component that meets no "
                    "vertex");

    // orient every chain from its smaller attachment key
    auto key_of = [&](const EdgeEnd& end) {
        return EndKey{vertex_events_.at(end.vertex), end.side, end.slot};
    };
    for (auto& edge : edges_) {
        if (key_of(edge.ends[1]) < key_of(edge.ends[0])) {
            std::swap(edge.ends[0], edge.ends[1]);
            std::reverse(edge.wires.begin(), edge.wires.end());
            std::reverse(edge.wire_dir.begin(), edge.wire_dir.end());
            for (int& x : edge.wire_dir) x = -x;
            std::reverse(edge.cusps.begin(), edge.cusps.end());
            for (auto& c : edge.cusps) std::swap(c.arrive_pos, c.exit_pos);
        }
    }

    // deterministic labels by the leftmost, then topmost wire of each chain
    std::sort(edges_.begin(), edges_.end(),
              [](const DiagramEdge& a, const DiagramEdge& b) {
                  WireRef ka = *std::min_element(a.wires.begin(), a.wires.end());
                  WireRef kb = *std::min_element(b.wires.begin(), b.wires.end());
                  return ka < kb;
              });
    for (std::size_t i = 0; i < edges_.size(); ++i)
        edges_[i].label = "e" + std::to_string(i);

    for (std::size_t i = 0; i < edges_.size(); ++i) {
        end_lookup_[edges_[i].ends[0]] = {i, 0};
        end_lookup_[edges_[i].ends[1]] = {i, 1};
    }

    std::vector<AbstractGraph::Edge> graph_edges;
    for (const auto& e : edges_)
        graph_edges.push_back({e.label, e.ends[0].vertex, e.ends[1].vertex});
    graph_ = AbstractGraph::make(vertex_ids, graph_edges);
}

const DiagramEdge& FrontAnalysis::edge(const EdgeId& label) const {
    for (const auto& e : edges_)
        if (e.label == label) return e;
    throw Error("unknown-edge", "no edge labeled " + label);
}

const DiagramEdge* FrontAnalysis::edge_at(const EdgeEnd& end) const {
    auto it = end_lookup_.find(end);
    if (it == end_lookup_.end()) return nullptr;
    return &edges_[it->second.first];
}

int FrontAnalysis::end_index_at(const EdgeEnd& end) const {
    auto it = end_lookup_.find(end);
    if (it == end_lookup_.end()) return -1;
    return it->second.second;
}

int FrontAnalysis::vertex_event_index(const VertexId& v) const {
    auto it = vertex_events_.find(v);
    return it == vertex_events_.end() ? -1 : it->second;
}

AbstractGraph underlying_graph(const FrontDiagram& d) {
    return FrontAnalysis(d).graph();
}

// ---------------------------------------------------------------------------
// Cycle traces

namespace {

// Walks `cycle` exactly as given. For a 1-cycle, reverse_loop picks the walk
// starting at the loop's end 1 instead of end 0.
CycleTrace trace_oriented(const FrontAnalysis& a, const Cycle& cycle,
                          bool reverse_loop) {
    const std::size_t n = cycle.edges.size();
    CycleTrace t;
    t.cycle = cycle;

    struct WalkedEdge {
        const DiagramEdge* edge;
        bool forward;  // walked end0 -> end1
    };
    std::vector<WalkedEdge> walk;
    for (std::size_t i = 0; i < n; ++i) {
        const DiagramEdge& e = a.edge(cycle.edges[i]);
        const VertexId& tail = cycle.vertices[i];
        const VertexId& head = cycle.vertices[(i + 1) % n];
        bool forward;
        if (tail == head) {
            forward = !reverse_loop;  // loop edge: orientation tie-break
        } else if (e.ends[0].vertex == tail && e.ends[1].vertex == head) {
            forward = true;
        } else if (e.ends[1].vertex == tail && e.ends[0].vertex == head) {
            forward = false;
        } else {
            throw Error("malformed-cycle",
                        "edge " + e.label + " does not join " + tail + " and " + head);
        }
        walk.push_back({&e, forward});
    }

    // genuine cusps + wire directions
    std::map<WireRef, int> wire_dir;
    std::vector<std::pair<WireRef, int>> flat;
    for (const auto& we : walk) {
        const DiagramEdge& e = *we.edge;
        const std::size_t m = e.wires.size();
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t k = we.forward ? j : m - 1 - j;
            int dir = we.forward ? e.wire_dir[k] : -e.wire_dir[k];
            wire_dir[e.wires[k]] = dir;
            flat.push_back({e.wires[k], dir});
        }
        for (std::size_t j = 0; j < e.cusps.size(); ++j) {
            std::size_t k = we.forward ? j : e.cusps.size() - 1 - j;
            ChainCusp c = e.cusps[k];
            if (!we.forward) std::swap(c.arrive_pos, c.exit_pos);
            t.cusps.push_back({c.event_index, c.arrive_pos < c.exit_pos});
        }
    }

    // vertex passages: arrival end of the previous edge, departure end of the
    // current one
    for (std::size_t i = 0; i < n; ++i) {
        const WalkedEdge& in = walk[(i + n - 1) % n];
        const WalkedEdge& out = walk[i];
        EdgeEnd arrive = in.forward ? in.edge->ends[1] : in.edge->ends[0];
        EdgeEnd depart = out.forward ? out.edge->ends[0] : out.edge->ends[1];
        TracePassage p;
        p.vertex = cycle.vertices[i];
        p.same_side = arrive.side == depart.side;
        p.down = p.same_side && arrive.slot < depart.slot;
        t.passages.push_back(p);
    }

    // signed self-crossings: positive exactly when both strands run the same
    // x-direction (descending strand in front, standard orientation rules)
    const FrontDiagram& d = a.diagram();
    for (std::size_t k = 0; k < d.events.size(); ++k) {
        if (d.events[k].kind != EventKind::X) continue;
        WireRef upper{int(k), d.events[k].pos};
        WireRef lower{int(k), d.events[k].pos + 1};
        auto iu = wire_dir.find(upper);
        auto il = wire_dir.find(lower);
        if (iu == wire_dir.end() || il == wire_dir.end()) continue;
        t.writhe += (iu->second == il->second) ? 1 : -1;
    }

    // maximal one-direction runs
    for (const auto& [w, dir] : flat) {
        if (t.segments.empty() || t.segments.back().dir != dir)
            t.segments.push_back({dir, {}});
        t.segments.back().wires.push_back(w);
    }
    if (t.segments.size() > 1 &&
        t.segments.front().dir == t.segments.back().dir) {
        auto& first = t.segments.front();
        auto& last = t.segments.back();
        first.wires.insert(first.wires.begin(), last.wires.begin(),
                           last.wires.end());
        t.segments.pop_back();
    }
    return t;
}

Cycle reversed_cycle(const Cycle& c) {
    const std::size_t n = c.edges.size();
    Cycle r;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = (n - i) % n;
        r.edges.push_back(c.edges[(k + n - 1) % n]);
        r.vertices.push_back(c.vertices[k]);
    }
    return r;
}

}  // namespace

CycleTrace trace_cycle(const FrontAnalysis& a, const Cycle& canonical) {
    return trace_oriented(a, canonical, false);
}

CycleTrace reversed_trace(const FrontAnalysis& a, const CycleTrace& t) {
    if (t.cycle.edges.size() == 1) return trace_oriented(a, t.cycle, true);
    return trace_oriented(a, reversed_cycle(t.cycle), false);
}

std::vector<CycleTrace> cycles_with_traces(const FrontDiagram& d) {
    FrontAnalysis a(d);
    std::vector<CycleTrace> out;
    for (const Cycle& c : enumerate_cycles(a.graph()))
        out.push_back(trace_cycle(a, c));
    return out;
}

int tb_of_cycle(const CycleTrace& t) {
    int cusp_like = int(t.cusps.size());
    for (const auto& p : t.passages)
        if (p.same_side) ++cusp_like;
    assert(cusp_like % 2 == 0);
    return t.writhe - cusp_like / 2;
}

int rot_of_cycle(const CycleTrace& t) {
    int down = 0, up = 0;
    for (const auto& c : t.cusps) (c.down ? down : up)++;
    for (const auto& p : t.passages)
        if (p.same_side) (p.down ? down : up)++;
    assert((down - up) % 2 == 0);
    return (down - up) / 2;
}

InvariantReport invariant_report(const FrontDiagram& d) {
    FrontAnalysis a(d);
    InvariantReport r;
    for (const Cycle& c : enumerate_cycles(a.graph())) {
        CycleTrace t = trace_cycle(a, c);
        r.cycle_keys.push_back(cycle_key(c));
        r.tb.push_back(tb_of_cycle(t));
        r.rot.push_back(rot_of_cycle(t));
    }
    return r;
}

std::vector<std::pair<EdgeId, int>> cyclic_edge_order(const FrontDiagram& d,
                                                      const VertexId& v) {
    FrontAnalysis a(d);
    int k = a.vertex_event_index(v);
    if (k < 0) throw Error("unknown-vertex", "no vertex " + v + " in diagram");
    const Event& e = d.events[std::size_t(k)];
    std::vector<std::pair<EdgeId, int>> out;
    for (int s = e.n_right - 1; s >= 0; --s) {
        EdgeEnd end{v, 1, s};
        out.emplace_back(a.edge_at(end)->label, a.end_index_at(end));
    }
    for (int s = 0; s < e.n_left; ++s) {
        EdgeEnd end{v, 0, s};
        out.emplace_back(a.edge_at(end)->label, a.end_index_at(end));
    }
    return out;
}

bool cyclic_equal(const std::vector<std::pair<EdgeId, int>>& a,
                  const std::vector<std::pair<EdgeId, int>>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    if (n == 0) return true;
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            ok = a[i] == b[(i + r) % n];
        if (ok) return true;
    }
    return false;
}

}  // namespace legf
