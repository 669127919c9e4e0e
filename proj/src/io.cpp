#include "legf/io.hpp"

#include <sstream>

namespace legf {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void syntax_error(int line, const std::string& what) {
    throw Error("syntax-error",
                what + " (line " + std::to_string(line) + ")");
}

int parse_int(const Line& line, const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        syntax_error(line.number, "expected integer, got '" + tok + "'");
    }
}

}  // namespace

FrontDiagram parse_front(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    FrontDiagram d;
    if (lines.empty()) return d;

    std::size_t i = 0;
    if (lines[0].tokens.size() == 1 && lines[0].tokens[0] == "front") {
        i = 1;
    } else {
        syntax_error(lines[0].number, "expected 'front' header");
    }
    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "LC" || t[0] == "RC" || t[0] == "X") {
            if (t.size() != 2)
                syntax_error(line.number, t[0] + " takes one position");
            int pos = parse_int(line, t[1]);
            if (t[0] == "LC") d.events.push_back(lc(pos));
            if (t[0] == "RC") d.events.push_back(rc(pos));
            if (t[0] == "X") d.events.push_back(xing(pos));
        } else if (t[0] == "VX") {
            if (t.size() != 5)
                syntax_error(line.number, "VX takes id, position, nL, nR");
            d.events.push_back(vx(t[1], parse_int(line, t[2]),
                                  parse_int(line, t[3]), parse_int(line, t[4])));
        } else {
            syntax_error(line.number, "unknown event '" + t[0] + "'");
        }
    }
    Diagnostic diag = validate(d);
    if (!diag.ok)
        throw Error("validation-diagnostic",
                    diag.message + " (event " + std::to_string(diag.event_index) + ")");
    return d;
}

std::string serialize_front(const FrontDiagram& d) {
    std::ostringstream out;
    out << "front\n";
    for (const Event& e : d.events) {
        switch (e.kind) {
            case EventKind::LC: out << "LC " << e.pos << "\n"; break;
            case EventKind::RC: out << "RC " << e.pos << "\n"; break;
            case EventKind::X: out << "X " << e.pos << "\n"; break;
            case EventKind::VX:
                out << "VX " << e.vertex << " " << e.pos << " " << e.n_left
                    << " " << e.n_right << "\n";
                break;
        }
    }
    return out.str();
}

AbstractGraph parse_graph(const std::string& text) {
    std::vector<VertexId> vertices;
    std::vector<AbstractGraph::Edge> edges;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "V") {
            if (t.size() != 2) syntax_error(line.number, "V takes one id");
            vertices.push_back(t[1]);
        } else if (t[0] == "E") {
            if (t.size() != 4)
                syntax_error(line.number, "E takes id and two endpoints");
            edges.push_back({t[1], t[2], t[3]});
        } else {
            syntax_error(line.number, "unknown record '" + t[0] + "'");
        }
    }
    return AbstractGraph::make(std::move(vertices), std::move(edges));
}

std::string serialize_graph(const AbstractGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices) out << "V " << v << "\n";
    for (const auto& e : g.edges)
        out << "E " << e.id << " " << e.u << " " << e.v << "\n";
    return out.str();
}

IsotopyLog parse_log(const std::string& text) {
    IsotopyLog log;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (raw.rfind("# seed=", 0) == 0) {
            log.seed = std::stoull(raw.substr(7));
            continue;
        }
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> t;
        std::string tok;
        while (ls >> tok) t.push_back(tok);
        if (t.empty()) continue;
        Line line{number, t};
        if (t[0] != "MV" || t.size() != 5)
            syntax_error(number, "expected 'MV <kind> <variant> <index> <pos>'");
        auto kind = parse_move_kind(t[1]);
        if (!kind) syntax_error(number, "unknown move kind '" + t[1] + "'");
        log.applied.push_back({*kind, parse_int(line, t[2]),
                               parse_int(line, t[3]), parse_int(line, t[4])});
    }
    return log;
}

std::string serialize_log(const IsotopyLog& log) {
    std::ostringstream out;
    out << "# seed=" << log.seed << "\n";
    for (const MoveInstance& m : log.applied)
        out << "MV " << move_kind_token(m.kind) << " " << m.variant << " "
            << m.index << " " << m.pos << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Schematic grid: one column block per event, one row pair per strand slot.
struct AsciiCanvas {
    std::vector<std::string> rows;

    void put(int r, int c, char ch) {
        if (r < 0 || c < 0) return;
        if (std::size_t(r) >= rows.size()) rows.resize(r + 1);
        if (rows[r].size() <= std::size_t(c)) rows[r].resize(c + 1, ' ');
        rows[r][c] = ch;
    }
    void text(int r, int c, const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i) put(r, c + int(i), s[i]);
    }
};

std::string render_ascii(const FrontDiagram& d) {
    std::vector<int> counts = strand_counts(d);
    const int width_per_event = 4;
    AsciiCanvas canvas;

    auto row_of = [](int pos) { return pos; };

    for (std::size_t g = 0; g < d.events.size(); ++g) {
        const Event& e = d.events[g];
        const int c0 = int(g) * width_per_event;
        // carry strands across the column
        int before = counts[g];
        for (int p = 0; p < before; ++p) {
            bool touched = false;
            switch (e.kind) {
                case EventKind::LC: touched = false; break;
                case EventKind::RC: touched = p == e.pos || p == e.pos + 1; break;
                case EventKind::X: touched = p == e.pos || p == e.pos + 1; break;
                case EventKind::VX:
                    touched = p >= e.pos && p < e.pos + e.n_left;
                    break;
            }
            int shift = 0;
            switch (e.kind) {
                case EventKind::LC: shift = p >= e.pos ? 2 : 0; break;
                case EventKind::RC: shift = p > e.pos + 1 ? -2 : 0; break;
                case EventKind::X: shift = 0; break;
                case EventKind::VX:
                    shift = p >= e.pos + e.n_left ? e.n_right - e.n_left : 0;
                    break;
            }
            if (!touched)
                for (int c = c0; c < c0 + width_per_event; ++c)
                    canvas.put(row_of(p + (c >= c0 + 2 ? shift : 0)), c, '-');
        }
        switch (e.kind) {
            case EventKind::LC:
                canvas.put(row_of(e.pos), c0 + 2, '/');
                canvas.put(row_of(e.pos + 1), c0 + 2, '\\');
                canvas.put(row_of(e.pos), c0 + 3, '-');
                canvas.put(row_of(e.pos + 1), c0 + 3, '-');
                break;
            case EventKind::RC:
                canvas.put(row_of(e.pos), c0, '-');
                canvas.put(row_of(e.pos + 1), c0, '-');
                canvas.put(row_of(e.pos), c0 + 1, '\\');
                canvas.put(row_of(e.pos + 1), c0 + 1, '/');
                break;
            case EventKind::X:
                canvas.put(row_of(e.pos), c0, '-');
                canvas.put(row_of(e.pos + 1), c0, '-');
                canvas.put(row_of(e.pos), c0 + 1, '\\');
                canvas.put(row_of(e.pos + 1), c0 + 1, '/');
                canvas.put(row_of(e.pos), c0 + 2, 'X');
                canvas.put(row_of(e.pos), c0 + 3, '-');  // was lower strand
                canvas.put(row_of(e.pos + 1), c0 + 3, '-');
                break;
            case EventKind::VX: {
                for (int s = 0; s < e.n_left; ++s)
                    canvas.put(row_of(e.pos + s), c0, '-');
                canvas.put(row_of(e.pos), c0 + 2, '*');
                for (int s = 0; s < e.n_right; ++s)
                    canvas.put(row_of(e.pos + s), c0 + 3, '-');
                canvas.text(row_of(e.pos), c0 + 2,
                            "*" + e.vertex);
                break;
            }
        }
    }
    std::ostringstream out;
    for (const auto& row : canvas.rows) out << row << "\n";
    return out.str();
}

std::string render_svg(const FrontDiagram& d) {
    FrontAnalysis a(d);
    const double dx = 40.0, dy = 24.0, margin = 20.0;
    const int gaps = int(d.events.size()) + 1;
    int max_count = 0;
    for (int c : a.counts()) max_count = std::max(max_count, c);

    auto xg = [&](int gap) { return margin + dx * gap; };
    auto yp = [&](int pos) { return margin + dy * (pos + 1); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << (margin * 2 + dx * gaps) << "\" height=\""
        << (margin * 2 + dy * (max_count + 1)) << "\">\n";

    // one path per edge: polyline through wire midpoints, small arcs at turns
    for (const DiagramEdge& edge : a.edges()) {
        out << "  <path fill=\"none\" stroke=\"black\" d=\"";
        for (std::size_t i = 0; i < edge.wires.size(); ++i) {
            const WireRef& w = edge.wires[i];
            double x0 = xg(w.gap), x1 = xg(w.gap + 1) - 8.0, y = yp(w.pos);
            if (i == 0)
                out << "M " << x0 << " " << y << " ";
            out << "L " << x0 << " " << y << " L " << x1 << " " << y << " ";
        }
        out << "\"/>\n";
    }
    for (std::size_t k = 0; k < d.events.size(); ++k) {
        const Event& e = d.events[k];
        if (e.kind != EventKind::VX) continue;
        out << "  <circle cx=\"" << xg(int(k)) << "\" cy=\"" << yp(e.pos)
            << "\" r=\"3\"/>\n";
        out << "  <text x=\"" << xg(int(k)) << "\" y=\"" << (yp(e.pos) - 6)
            << "\" font-size=\"10\">" << e.vertex << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render(const FrontDiagram& d, RenderMode mode) {
    Diagnostic diag = validate(d);
    if (!diag.ok) throw Error("validation-diagnostic", diag.message);
    return mode == RenderMode::Ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace legf
