#ifndef LEGF_MOVES_HPP
#define LEGF_MOVES_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "legf/front.hpp"

namespace legf {

// Local rewrites on front diagrams. I, II, III are the Reidemeister moves for
// fronts; IV (vertex through a cusp), V (edge over/under a vertex) and VI (an
// edge end rotates to the other side of its vertex) are the graph moves. P is
// the planar exchange of two independent adjacent events; the event-list
// encoding needs it to express planar isotopy. "Retract" in slide scripts is
// VIInv.
enum class MoveKind { I, IInv, II, IIInv, III, IV, V, VI, VIInv, P };

std::string move_kind_token(MoveKind k);
std::optional<MoveKind> parse_move_kind(const std::string& token);

// variant encodes the reflection/direction of the move pattern:
//   I     0 [LC h+1, X h,   RC h+1]   1 [LC h, X h+1, RC h]
//         2 [LC h,   X h,   RC h+1]   3 [LC h+1, X h+1, RC h]
//         index = gap the window is inserted into, pos = host strand
//   II    0 poke below a right cusp   1 poke above a right cusp
//         2 poke below a left cusp    3 poke above a left cusp
//         index = cusp event, pos = cusp position
//   III   0 [X p, X p+1, X p] -> [X p+1, X p, X p+1]   1 the reverse
//   IV    0 right cusp, hook under -> over    1 right cusp, over -> under
//         2 left cusp, hook over -> under     3 left cusp, under -> over
//         index = vertex event
//   V     0 descending strand, crossings left -> right   1 the reverse
//         2 ascending strand, crossings left -> right    3 the reverse
//         index = vertex event
//   VI    0 TL end over the top   1 BL end under the bottom
//         2 TR end over the top   3 BR end under the bottom
//   VIInv 0 absorb to TL  1 to BL  2 to TR  3 to BR (inverse of VI variants
//         2, 3, 0, 1 respectively at the matching hook)
//   P     index = first of the two exchanged events
struct MoveInstance {
    MoveKind kind = MoveKind::P;
    int variant = 0;
    int index = 0;
    int pos = 0;

    bool operator==(const MoveInstance& o) const {
        return kind == o.kind && variant == o.variant && index == o.index &&
               pos == o.pos;
    }
};

struct IsotopyLog {
    std::uint64_t seed = 0;
    std::vector<MoveInstance> applied;
};

// Relocation of edge ends at the vertex a IV/VI move touches; identity for
// ends not listed.
using EndMap = std::map<EdgeEnd, EdgeEnd>;

// Visits applicable instances in a fixed deterministic order. Return false
// from the callback to stop early.
void for_each_applicable(const FrontDiagram& d,
                         const std::function<bool(const MoveInstance&)>& fn);

std::vector<MoveInstance> enumerate_applicable(const FrontDiagram& d);
std::size_t count_applicable(const FrontDiagram& d);
std::optional<MoveInstance> nth_applicable(const FrontDiagram& d, std::size_t n);
bool is_applicable(const FrontDiagram& d, const MoveInstance& m);

FrontDiagram apply_move(const FrontDiagram& d, const MoveInstance& m,
                        EndMap* end_map = nullptr);

// An instance applicable to apply_move(d, m) that restores d exactly.
MoveInstance inverse_of(const FrontDiagram& d, const MoveInstance& m);

// Edge relabeling induced by a move, computed through the end relocation.
std::map<EdgeId, EdgeId> edge_relabel_map(const FrontDiagram& before,
                                          const FrontDiagram& after,
                                          const EndMap& end_map);

// Inserts a zig-zag on `edge` near its first end. A cycle through the edge
// loses 1 from tb; its rot moves by +-1 according to the direction it runs
// through the zig-zag. sign > 0 means the new cusps count as down cusps for
// a cycle walking the edge from end 0 towards end 1.
FrontDiagram stabilize(const FrontDiagram& d, const EdgeId& edge, int sign);

// Transports the attachment point of the cut edge at v past |steps| cusps
// along the loop through v (steps > 0 walks towards the loop's end 0 side).
// Composite of VI / P / IV / VIInv rewrites; the invariant report of the
// result equals the input's.
FrontDiagram slide_cut_edge(const FrontDiagram& d, const VertexId& v,
                            int steps);

// n uniformly chosen applicable moves, deterministic for a fixed seed.
std::pair<FrontDiagram, IsotopyLog> random_isotopy(const FrontDiagram& d,
                                                   int n, std::uint64_t seed);

FrontDiagram replay(const FrontDiagram& d, const IsotopyLog& log);

}  // namespace legf

#endif
