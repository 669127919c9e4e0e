#ifndef LEGF_FRONT_HPP
#define LEGF_FRONT_HPP

#include <map>
#include <string>
#include <vector>

#include "legf/graph.hpp"

namespace legf {

// A generic front projection as an x-ordered event list. Between events the
// diagram is a stack of horizontal strands; positions count from the top
// (position 0 is the topmost strand).
//
//   LC i   left cusp, inserts two strands at positions i, i+1
//   RC i   right cusp, joins the adjacent strands i, i+1
//   X  i   crossing, transposes strands i, i+1 (the descending strand is in
//          front: in a front the overstrand is the one with smaller slope)
//   VX v i nL nR   vertex v, consumes nL strands at i.. and emits nR at i..
enum class EventKind { LC, RC, X, VX };

struct Event {
    EventKind kind = EventKind::LC;
    int pos = 0;
    std::string vertex;  // VX only
    int n_left = 0;      // VX only
    int n_right = 0;     // VX only

    bool operator==(const Event& o) const {
        return kind == o.kind && pos == o.pos && vertex == o.vertex &&
               n_left == o.n_left && n_right == o.n_right;
    }
};

Event lc(int pos);
Event rc(int pos);
Event xing(int pos);
Event vx(std::string vertex, int pos, int n_left, int n_right);

struct FrontDiagram {
    std::vector<Event> events;

    bool operator==(const FrontDiagram& o) const { return events == o.events; }
};

struct Diagnostic {
    bool ok = true;
    std::string message;
    int event_index = -1;

    static Diagnostic pass() { return {}; }
    static Diagnostic fail(std::string msg, int index) {
        return {false, std::move(msg), index};
    }
};

// Checks every structural invariant; reports the first violation.
Diagnostic validate(const FrontDiagram& d);

// Strand counts in the gaps around the events: entry g is the count just
// before event g; entry events.size() is the terminal count.
std::vector<int> strand_counts(const FrontDiagram& d);

// One end of an edge at a vertex event. side 0 = left, 1 = right; slot is
// the index within that side's block, counted from the top.
struct EdgeEnd {
    VertexId vertex;
    int side = 0;
    int slot = 0;

    bool operator==(const EdgeEnd& o) const {
        return vertex == o.vertex && side == o.side && slot == o.slot;
    }
    bool operator<(const EdgeEnd& o) const {
        if (vertex != o.vertex) return vertex < o.vertex;
        if (side != o.side) return side < o.side;
        return slot < o.slot;
    }
};

struct WireRef {  // one strand segment: gap index + position from the top
    int gap = 0;
    int pos = 0;

    bool operator==(const WireRef& o) const {
        return gap == o.gap && pos == o.pos;
    }
    bool operator<(const WireRef& o) const {
        if (gap != o.gap) return gap < o.gap;
        return pos < o.pos;
    }
};

struct ChainCusp {   // a genuine cusp met while walking an edge end0 -> end1
    int event_index = 0;
    int arrive_pos = 0;  // branch the walk arrives on (event-local: i or i+1)
    int exit_pos = 0;
};

struct DiagramEdge {
    EdgeId label;
    std::array<EdgeEnd, 2> ends;   // end 0 has the smaller attachment key
    std::vector<WireRef> wires;    // walk order end0 -> end1
    std::vector<int> wire_dir;     // +1 rightward, -1 leftward, per wire
    std::vector<ChainCusp> cusps;  // in walk order
};

// Wire-level structure of a valid diagram: edges, their ends and labels.
// Construction throws Error("invalid-diagram") when validate fails and
// Error("closed-component-without-vertex") when a knot component exists.
class FrontAnalysis {
public:
    explicit FrontAnalysis(const FrontDiagram& d);

    const FrontDiagram& diagram() const { return d_; }
    const AbstractGraph& graph() const { return graph_; }
    const std::vector<DiagramEdge>& edges() const { return edges_; }
    const std::vector<int>& counts() const { return counts_; }

    const DiagramEdge& edge(const EdgeId& label) const;
    const DiagramEdge* edge_at(const EdgeEnd& end) const;  // null if no end
    int end_index_at(const EdgeEnd& end) const;            // 0 or 1
    int vertex_event_index(const VertexId& v) const;       // -1 if absent

private:
    FrontDiagram d_;
    std::vector<int> counts_;
    AbstractGraph graph_;
    std::vector<DiagramEdge> edges_;
    std::map<EdgeEnd, std::pair<std::size_t, int>> end_lookup_;
    std::map<VertexId, int> vertex_events_;
};

AbstractGraph underlying_graph(const FrontDiagram& d);

// A cycle traversal through the diagram. Orientation is canonical: the
// rotation/reflection minimising the cycle key, with deterministic
// tie-breaking for palindromic edge sequences.
struct TracePassage {  // the passage through vertices[i] between edges
    VertexId vertex;
    bool same_side = false;
    bool down = false;  // meaningful only when same_side
};

struct TraceCusp {
    int event_index = 0;
    bool down = false;
};

struct RunSeg {
    int dir = 1;  // +1 rightward
    std::vector<WireRef> wires;
};

struct CycleTrace {
    Cycle cycle;                        // canonical form
    std::vector<RunSeg> segments;       // maximal one-direction runs
    std::vector<TracePassage> passages; // one per cycle vertex, cycle order
    std::vector<TraceCusp> cusps;       // genuine cusps on the cycle
    int writhe = 0;                     // signed self-crossings of the cycle
};

std::vector<CycleTrace> cycles_with_traces(const FrontDiagram& d);
CycleTrace trace_cycle(const FrontAnalysis& a, const Cycle& canonical);
CycleTrace reversed_trace(const FrontAnalysis& a, const CycleTrace& t);

int tb_of_cycle(const CycleTrace& t);
int rot_of_cycle(const CycleTrace& t);

struct InvariantReport {
    std::vector<std::string> cycle_keys;
    std::vector<int> tb;
    std::vector<int> rot;

    bool operator==(const InvariantReport& o) const {
        return cycle_keys == o.cycle_keys && tb == o.tb && rot == o.rot;
    }
};

InvariantReport invariant_report(const FrontDiagram& d);

// Counterclockwise order of the edge ends around a vertex in the contact
// plane: right-side ends bottom to top, then left-side ends top to bottom.
// Each entry is (edge label, end index within that edge).
std::vector<std::pair<EdgeId, int>> cyclic_edge_order(const FrontDiagram& d,
                                                      const VertexId& v);

// True when b is a rotation of a.
bool cyclic_equal(const std::vector<std::pair<EdgeId, int>>& a,
                  const std::vector<std::pair<EdgeId, int>>& b);

}  // namespace legf

#endif
