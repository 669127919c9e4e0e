#ifndef LEGF_STANDARD_HPP
#define LEGF_STANDARD_HPP

#include <optional>

#include "legf/front.hpp"

namespace legf {

// Parameters of a standard-form unknot: t stabilization pairs and s further
// stabilizations of one sign, so tb = -(2t+1+s) and rot = sign * s. The pair
// (tb, rot) is realizable iff tb <= -1, tb + |rot| <= -1 and tb + rot is odd.
struct EFParams {
    int t = 0;
    int s = 0;
    int sign = +1;  // meaningful only when s > 0

    int tb() const { return -(2 * t + 1 + s); }
    int rot() const { return s == 0 ? 0 : sign * s; }
};

bool ef_realizable(int tb, int rot);

// Open standard unknot with a marked attachment cusp. anchor_right selects
// whether the marked cusp is the unique rightmost (lower right) or the
// unique leftmost cusp.
struct EfFragment {
    EFParams params;
    bool anchor_right = true;
};

// Throws Error("unrealizable-pair") when the target fails the constraints.
EfFragment ef_unknot(int tb, int rot, bool anchor_right = true);

// The fragment closed into a one-vertex loop diagram (the vertex replaces
// the marked cusp); its single cycle carries exactly the target invariants.
FrontDiagram ef_loop_diagram(const EfFragment& f, const VertexId& v = "v");

enum class LollipopForm { A, B };     // cut edge outside / inside the cusp
enum class HandcuffForm { AA, AB, BA, BB };

std::string form_token(LollipopForm f);
std::string form_token(HandcuffForm f);
std::optional<LollipopForm> parse_lollipop_form(const std::string& s);
std::optional<HandcuffForm> parse_handcuff_form(const std::string& s);

// Standard lollipop: standard unknot at v1 plus a plain cut edge to v2.
FrontDiagram lollipop_standard(int tb, int rot, LollipopForm form);

// Standard handcuff: standard unknots at v1 (attached at its lower right
// cusp) and v2 (attached at its leftmost cusp) joined by an unstabilized cut
// edge. The first form letter is the configuration at v1, the second at v2.
FrontDiagram handcuff_standard(int tb1, int rot1, int tb2, int rot2,
                               HandcuffForm form);

struct Classification {
    enum Kind { Lollipop, Handcuff } kind = Lollipop;
    int tb1 = 0, rot1 = 0;
    int tb2 = 0, rot2 = 0;  // handcuff only
    LollipopForm lollipop_form = LollipopForm::A;
    HandcuffForm handcuff_form = HandcuffForm::AA;
};

// Strict structural matcher against the generator image, up to renaming the
// vertex ids in order of first appearance. nullopt = not standard.
std::optional<Classification> classify_standard(const FrontDiagram& d);

}  // namespace legf

#endif
