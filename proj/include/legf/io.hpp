#ifndef LEGF_IO_HPP
#define LEGF_IO_HPP

#include <string>

#include "legf/front.hpp"
#include "legf/moves.hpp"

namespace legf {

// Front text format: header line "front", then one event per line:
//   LC <i> | RC <i> | X <i> | VX <id> <i> <nL> <nR>
// '#' starts a comment, blank lines are ignored. A fully empty file parses
// as the empty diagram. Parsed diagrams are validated.
FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& d);

// Graph text format: "V <id>" and "E <id> <u> <v>" lines, '#' comments.
AbstractGraph parse_graph(const std::string& text);
std::string serialize_graph(const AbstractGraph& g);

// Isotopy log: optional "# seed=<n>" comment, then one line per move:
//   MV <kind> <variant> <event-index> <position>
IsotopyLog parse_log(const std::string& text);
std::string serialize_log(const IsotopyLog& log);

enum class RenderMode { Ascii, Svg };
std::string render(const FrontDiagram& d, RenderMode mode);

}  // namespace legf

#endif
