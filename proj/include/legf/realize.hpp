#ifndef LEGF_REALIZE_HPP
#define LEGF_REALIZE_HPP

#include "legf/front.hpp"

namespace legf {

// A deterministic valid front for any multigraph: vertices in id order left
// to right, loops as saucers, other edges as monotone strands sorted into
// place with crossings.
FrontDiagram realize_any(const AbstractGraph& g);

// The all-trivial-unknot embedding for K4-minor-free graphs: every cycle of
// the result has tb = -1 and rot = 0. Per block, a base cycle drawn as a
// horizontal line with its closing edge arched on top, chords nested above,
// attached pieces nested below, recursively; cut edges as plain stubs.
// Throws Error("k4-minor-present") otherwise.
FrontDiagram realize_trivial(const AbstractGraph& g);

struct K4SubdivisionCheck {
    MinorWitness witness;
    std::vector<int> tb;  // the 7 cycle values, canonical cycle order
    int sum = 0;
    bool even = false;
};

struct K4ParityReport {
    std::vector<K4SubdivisionCheck> checks;

    bool all_even() const {
        for (const auto& c : checks)
            if (!c.even) return false;
        return true;
    }
};

// tb parity over every K4 subdivision of the diagram's underlying graph.
K4ParityReport parity_check_k4(const FrontDiagram& d);

// One line per subdivision: "K4SUB <branch-vertices> tbsum=<n> parity=...".
std::string format_parity_report(const K4ParityReport& r);

}  // namespace legf

#endif
