#include "legf/moves.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <random>

namespace legf {

std::string move_kind_token(MoveKind k) {
    switch (k) {
        case MoveKind::I: return "I";
        case MoveKind::IInv: return "I-1";
        case MoveKind::II: return "II";
        case MoveKind::IIInv: return "II-1";
        case MoveKind::III: return "III";
        case MoveKind::IV: return "IV";
        case MoveKind::V: return "V";
        case MoveKind::VI: return "VI";
        case MoveKind::VIInv: return "VI-1";
        case MoveKind::P: return "P";
    }
    return "?";
}

std::optional<MoveKind> parse_move_kind(const std::string& token) {
    if (token == "I") return MoveKind::I;
    if (token == "I-1") return MoveKind::IInv;
    if (token == "II") return MoveKind::II;
    if (token == "II-1") return MoveKind::IIInv;
    if (token == "III") return MoveKind::III;
    if (token == "IV") return MoveKind::IV;
    if (token == "V") return MoveKind::V;
    if (token == "VI") return MoveKind::VI;
    if (token == "VI-1") return MoveKind::VIInv;
    if (token == "P") return MoveKind::P;
    return std::nullopt;
}

namespace {

bool is_lc(const Event& e, int pos) { return e.kind == EventKind::LC && e.pos == pos; }
bool is_rc(const Event& e, int pos) { return e.kind == EventKind::RC && e.pos == pos; }
bool is_x(const Event& e, int pos) { return e.kind == EventKind::X && e.pos == pos; }

// consumed/produced strand intervals of an event, both based at e.pos
int consumed_len(const Event& e) {
    switch (e.kind) {
        case EventKind::LC: return 0;
        case EventKind::RC: return 2;
        case EventKind::X: return 2;
        case EventKind::VX: return e.n_left;
    }
    return 0;
}
int produced_len(const Event& e) {
    switch (e.kind) {
        case EventKind::LC: return 2;
        case EventKind::RC: return 0;
        case EventKind::X: return 2;
        case EventKind::VX: return e.n_right;
    }
    return 0;
}

struct PSwap {
    Event first, second;
};

// Exchange of independent adjacent events A, B; nullopt when they interact.
std::optional<PSwap> p_swap(const Event& a, const Event& b) {
    const int delta_a = produced_len(a) - consumed_len(a);
    const int delta_b = produced_len(b) - consumed_len(b);
    if (b.pos + consumed_len(b) <= a.pos) {  // B acts above A
        Event a2 = a;
        a2.pos += delta_b;
        return PSwap{b, a2};
    }
    if (b.pos >= a.pos + produced_len(a)) {  // B acts below A
        Event b2 = b;
        b2.pos -= delta_a;
        return PSwap{b2, a};
    }
    return std::nullopt;
}

// Move I window for host strand at position h, by variant.
std::vector<Event> swallowtail(int h, int variant) {
    switch (variant) {
        case 0: return {lc(h + 1), xing(h), rc(h + 1)};
        case 1: return {lc(h), xing(h + 1), rc(h)};
        case 2: return {lc(h), xing(h), rc(h + 1)};
        case 3: return {lc(h + 1), xing(h + 1), rc(h)};
    }
    throw Error("move-not-applicable", "bad swallowtail variant");
}

bool match_swallowtail(const FrontDiagram& d, int i, int h, int variant) {
    if (i < 0 || std::size_t(i) + 3 > d.events.size()) return false;
    std::vector<Event> w = swallowtail(h, variant);
    return d.events[i] == w[0] && d.events[i + 1] == w[1] && d.events[i + 2] == w[2];
}

struct Matched {
    bool ok = false;
    std::vector<Event> replacement;
    int window_begin = 0;
    int window_len = 0;
    // end relocation at one vertex, filled for IV/VI/VIInv
    VertexId vertex;
    std::vector<std::pair<EdgeEnd, EdgeEnd>> relocations;
};

Matched no_match() { return {}; }

void relocate_block(Matched& m, const VertexId& v, int nl, int nr,
                    int table) {
    // table 0: TL->TR and BR->BL (IV variants 0 and 2)
    // table 1: TR->TL and BL->BR (IV variants 1 and 3)
    m.vertex = v;
    if (table == 0) {
        m.relocations.push_back({{v, 0, 0}, {v, 1, 0}});
        for (int k = 1; k < nl; ++k)
            m.relocations.push_back({{v, 0, k}, {v, 0, k - 1}});
        m.relocations.push_back({{v, 1, nr - 1}, {v, 0, nl - 1}});
        for (int k = 0; k < nr - 1; ++k)
            m.relocations.push_back({{v, 1, k}, {v, 1, k + 1}});
    } else {
        m.relocations.push_back({{v, 1, 0}, {v, 0, 0}});
        for (int k = 1; k < nr; ++k)
            m.relocations.push_back({{v, 1, k}, {v, 1, k - 1}});
        m.relocations.push_back({{v, 0, nl - 1}, {v, 1, nr - 1}});
        for (int k = 0; k < nl - 1; ++k)
            m.relocations.push_back({{v, 0, k}, {v, 0, k + 1}});
    }
}

// Match + rewrite for every move kind. counts = strand_counts(d).
Matched match_move(const FrontDiagram& d, const std::vector<int>& counts,
                   const MoveInstance& m) {
    const auto& ev = d.events;
    const int E = int(ev.size());
    Matched out;

    switch (m.kind) {
        case MoveKind::I: {
            if (m.index < 0 || m.index > E) return no_match();
            if (m.pos < 0 || m.pos >= counts[m.index]) return no_match();
            if (m.variant < 0 || m.variant > 3) return no_match();
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 0;
            out.replacement = swallowtail(m.pos, m.variant);
            return out;
        }
        case MoveKind::IInv: {
            if (!match_swallowtail(d, m.index, m.pos, m.variant)) return no_match();
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 3;
            return out;
        }
        case MoveKind::II: {
            if (m.index < 0 || m.index >= E) return no_match();
            const Event& c = ev[m.index];
            const int p = m.pos;
            if (c.pos != p) return no_match();
            const int left = counts[m.index];
            switch (m.variant) {
                case 0:  // below a right cusp
                    if (c.kind != EventKind::RC || left < p + 3) return no_match();
                    out.replacement = {xing(p + 1), xing(p), rc(p + 1)};
                    break;
                case 1:  // above a right cusp
                    if (c.kind != EventKind::RC || p < 1) return no_match();
                    out.replacement = {xing(p - 1), xing(p), rc(p - 1)};
                    break;
                case 2:  // below a left cusp
                    if (c.kind != EventKind::LC || left < p + 1) return no_match();
                    out.replacement = {lc(p + 1), xing(p), xing(p + 1)};
                    break;
                case 3:  // above a left cusp
                    if (c.kind != EventKind::LC || p < 1) return no_match();
                    out.replacement = {lc(p - 1), xing(p), xing(p - 1)};
                    break;
                default:
                    return no_match();
            }
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 1;
            return out;
        }
        case MoveKind::IIInv: {
            if (m.index < 0 || m.index + 3 > E) return no_match();
            const Event &a = ev[m.index], &b = ev[m.index + 1], &c = ev[m.index + 2];
            const int p = m.pos;
            bool ok = false;
            Event cusp{};
            switch (m.variant) {
                case 0:
                    ok = is_x(a, p + 1) && is_x(b, p) && is_rc(c, p + 1);
                    cusp = rc(p);
                    break;
                case 1:
                    ok = p >= 1 && is_x(a, p - 1) && is_x(b, p) && is_rc(c, p - 1);
                    cusp = rc(p);
                    break;
                case 2:
                    ok = is_lc(a, p + 1) && is_x(b, p) && is_x(c, p + 1);
                    cusp = lc(p);
                    break;
                case 3:
                    ok = p >= 1 && is_lc(a, p - 1) && is_x(b, p) && is_x(c, p - 1);
                    cusp = lc(p);
                    break;
            }
            if (!ok) return no_match();
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 3;
            out.replacement = {cusp};
            return out;
        }
        case MoveKind::III: {
            if (m.index < 0 || m.index + 3 > E) return no_match();
            const Event &a = ev[m.index], &b = ev[m.index + 1], &c = ev[m.index + 2];
            const int p = m.pos;
            if (m.variant == 0) {
                if (!(is_x(a, p) && is_x(b, p + 1) && is_x(c, p))) return no_match();
                out.replacement = {xing(p + 1), xing(p), xing(p + 1)};
            } else if (m.variant == 1) {
                if (!(is_x(a, p + 1) && is_x(b, p) && is_x(c, p + 1))) return no_match();
                out.replacement = {xing(p), xing(p + 1), xing(p)};
            } else {
                return no_match();
            }
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 3;
            return out;
        }
        case MoveKind::IV: {
            if (m.index < 0 || m.index >= E) return no_match();
            const Event& v = ev[m.index];
            if (v.kind != EventKind::VX || v.n_left < 1 || v.n_right < 1)
                return no_match();
            const int P = v.pos, nL = v.n_left, nR = v.n_right;
            switch (m.variant) {
                case 0: {  // right cusp, hook under -> over
                    if (m.index + 1 >= E || !is_rc(ev[m.index + 1], P + nR - 1))
                        return no_match();
                    Event v2 = v;
                    v2.pos = P + 1;
                    out.replacement = {v2, rc(P)};
                    out.window_begin = m.index;
                    out.window_len = 2;
                    relocate_block(out, v.vertex, nL, nR, 0);
                    break;
                }
                case 1: {  // right cusp, hook over -> under
                    if (P < 1 || m.index + 1 >= E || !is_rc(ev[m.index + 1], P - 1))
                        return no_match();
                    Event v2 = v;
                    v2.pos = P - 1;
                    out.replacement = {v2, rc(P + nR - 2)};
                    out.window_begin = m.index;
                    out.window_len = 2;
                    relocate_block(out, v.vertex, nL, nR, 1);
                    break;
                }
                case 2: {  // left cusp, hook over -> under
                    if (P < 1 || m.index < 1 || !is_lc(ev[m.index - 1], P - 1))
                        return no_match();
                    Event v2 = v;
                    v2.pos = P - 1;
                    out.replacement = {lc(P + nL - 2), v2};
                    out.window_begin = m.index - 1;
                    out.window_len = 2;
                    relocate_block(out, v.vertex, nL, nR, 0);
                    break;
                }
                case 3: {  // left cusp, hook under -> over
                    if (m.index < 1 || !is_lc(ev[m.index - 1], P + nL - 1))
                        return no_match();
                    Event v2 = v;
                    v2.pos = P + 1;
                    out.replacement = {lc(P), v2};
                    out.window_begin = m.index - 1;
                    out.window_len = 2;
                    relocate_block(out, v.vertex, nL, nR, 1);
                    break;
                }
                default:
                    return no_match();
            }
            out.ok = true;
            return out;
        }
        case MoveKind::V: {
            if (m.index < 0 || m.index >= E) return no_match();
            const Event& v = ev[m.index];
            if (v.kind != EventKind::VX) return no_match();
            const int Q = v.pos, nL = v.n_left, nR = v.n_right;
            switch (m.variant) {
                case 0: {  // descending strand, crossings on the left
                    if (m.index - nL < 0) return no_match();
                    for (int j = 0; j < nL; ++j)
                        if (!is_x(ev[m.index - nL + j], Q + j)) return no_match();
                    if (counts[m.index - nL] < Q + nL + 1) return no_match();
                    Event v2 = v;
                    v2.pos = Q + 1;
                    out.replacement = {v2};
                    for (int j = 0; j < nR; ++j)
                        out.replacement.push_back(xing(Q + j));
                    out.window_begin = m.index - nL;
                    out.window_len = nL + 1;
                    break;
                }
                case 1: {  // descending strand, crossings on the right
                    if (Q < 1 || m.index + 1 + nR > E) return no_match();
                    for (int j = 0; j < nR; ++j)
                        if (!is_x(ev[m.index + 1 + j], Q - 1 + j)) return no_match();
                    if (counts[m.index] < Q) return no_match();
                    out.replacement.clear();
                    for (int j = 0; j < nL; ++j)
                        out.replacement.push_back(xing(Q - 1 + j));
                    Event v2 = v;
                    v2.pos = Q - 1;
                    out.replacement.push_back(v2);
                    out.window_begin = m.index;
                    out.window_len = 1 + nR;
                    break;
                }
                case 2: {  // ascending strand, crossings on the left
                    if (Q < 1 || m.index - nL < 0) return no_match();
                    for (int j = 0; j < nL; ++j)
                        if (!is_x(ev[m.index - nL + j], Q + nL - 2 - j)) return no_match();
                    if (counts[m.index - nL] < Q) return no_match();
                    Event v2 = v;
                    v2.pos = Q - 1;
                    out.replacement = {v2};
                    for (int j = 0; j < nR; ++j)
                        out.replacement.push_back(xing(Q + nR - 2 - j));
                    out.window_begin = m.index - nL;
                    out.window_len = nL + 1;
                    break;
                }
                case 3: {  // ascending strand, crossings on the right
                    if (m.index + 1 + nR > E) return no_match();
                    for (int j = 0; j < nR; ++j)
                        if (!is_x(ev[m.index + 1 + j], Q + nR - 1 - j)) return no_match();
                    if (counts[m.index] < Q + nL + 1) return no_match();
                    out.replacement.clear();
                    for (int j = 0; j < nL; ++j)
                        out.replacement.push_back(xing(Q + nL - 1 - j));
                    Event v2 = v;
                    v2.pos = Q + 1;
                    out.replacement.push_back(v2);
                    out.window_begin = m.index;
                    out.window_len = 1 + nR;
                    break;
                }
                default:
                    return no_match();
            }
            out.ok = true;
            return out;
        }
        case MoveKind::VI: {
            if (m.index < 0 || m.index >= E) return no_match();
            const Event& v = ev[m.index];
            if (v.kind != EventKind::VX) return no_match();
            const int P = v.pos, nL = v.n_left, nR = v.n_right;
            Event v2 = v;
            out.vertex = v.vertex;
            switch (m.variant) {
                case 0:  // TL end over the top
                    if (nL < 1) return no_match();
                    v2.pos = P + 1;
                    v2.n_left = nL - 1;
                    v2.n_right = nR + 1;
                    out.replacement = {v2, rc(P)};
                    out.relocations.push_back({{v.vertex, 0, 0}, {v.vertex, 1, 0}});
                    for (int k = 1; k < nL; ++k)
                        out.relocations.push_back({{v.vertex, 0, k}, {v.vertex, 0, k - 1}});
                    for (int k = 0; k < nR; ++k)
                        out.relocations.push_back({{v.vertex, 1, k}, {v.vertex, 1, k + 1}});
                    break;
                case 1:  // BL end under the bottom
                    if (nL < 1) return no_match();
                    v2.n_left = nL - 1;
                    v2.n_right = nR + 1;
                    out.replacement = {v2, rc(P + nR)};
                    out.relocations.push_back({{v.vertex, 0, nL - 1}, {v.vertex, 1, nR}});
                    break;
                case 2:  // TR end over the top
                    if (nR < 1) return no_match();
                    v2.pos = P + 1;
                    v2.n_left = nL + 1;
                    v2.n_right = nR - 1;
                    out.replacement = {lc(P), v2};
                    out.relocations.push_back({{v.vertex, 1, 0}, {v.vertex, 0, 0}});
                    for (int k = 1; k < nR; ++k)
                        out.relocations.push_back({{v.vertex, 1, k}, {v.vertex, 1, k - 1}});
                    for (int k = 0; k < nL; ++k)
                        out.relocations.push_back({{v.vertex, 0, k}, {v.vertex, 0, k + 1}});
                    break;
                case 3:  // BR end under the bottom
                    if (nR < 1) return no_match();
                    v2.n_left = nL + 1;
                    v2.n_right = nR - 1;
                    out.replacement = {lc(P + nL), v2};
                    out.relocations.push_back({{v.vertex, 1, nR - 1}, {v.vertex, 0, nL}});
                    break;
                default:
                    return no_match();
            }
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 1;
            return out;
        }
        case MoveKind::VIInv: {
            if (m.index < 0 || m.index >= E) return no_match();
            const Event& v = ev[m.index];
            if (v.kind != EventKind::VX) return no_match();
            const int P = v.pos, nL = v.n_left, nR = v.n_right;
            Event v2 = v;
            out.vertex = v.vertex;
            switch (m.variant) {
                case 0:  // absorb the hooked TR end back to TL
                    if (nR < 1 || P < 1 || m.index + 1 >= E ||
                        !is_rc(ev[m.index + 1], P - 1))
                        return no_match();
                    v2.pos = P - 1;
                    v2.n_left = nL + 1;
                    v2.n_right = nR - 1;
                    out.replacement = {v2};
                    out.window_begin = m.index;
                    out.window_len = 2;
                    out.relocations.push_back({{v.vertex, 1, 0}, {v.vertex, 0, 0}});
                    for (int k = 1; k < nR; ++k)
                        out.relocations.push_back({{v.vertex, 1, k}, {v.vertex, 1, k - 1}});
                    for (int k = 0; k < nL; ++k)
                        out.relocations.push_back({{v.vertex, 0, k}, {v.vertex, 0, k + 1}});
                    break;
                case 1:  // absorb the hooked BR end back to BL
                    if (nR < 1 || m.index + 1 >= E ||
                        !is_rc(ev[m.index + 1], P + nR - 1))
                        return no_match();
                    v2.n_left = nL + 1;
                    v2.n_right = nR - 1;
                    out.replacement = {v2};
                    out.window_begin = m.index;
                    out.window_len = 2;
                    out.relocations.push_back({{v.vertex, 1, nR - 1}, {v.vertex, 0, nL}});
                    break;
                case 2:  // absorb the hooked TL end back to TR
                    if (nL < 1 || P < 1 || m.index < 1 ||
                        !is_lc(ev[m.index - 1], P - 1))
                        return no_match();
                    v2.pos = P - 1;
                    v2.n_left = nL - 1;
                    v2.n_right = nR + 1;
                    out.replacement = {v2};
                    out.window_begin = m.index - 1;
                    out.window_len = 2;
                    out.relocations.push_back({{v.vertex, 0, 0}, {v.vertex, 1, 0}});
                    for (int k = 1; k < nL; ++k)
                        out.relocations.push_back({{v.vertex, 0, k}, {v.vertex, 0, k - 1}});
                    for (int k = 0; k < nR; ++k)
                        out.relocations.push_back({{v.vertex, 1, k}, {v.vertex, 1, k + 1}});
                    break;
                case 3:  // absorb the hooked BL end back to BR
                    if (nL < 1 || m.index < 1 ||
                        !is_lc(ev[m.index - 1], P + nL - 1))
                        return no_match();
                    v2.n_left = nL - 1;
                    v2.n_right = nR + 1;
                    out.replacement = {v2};
                    out.window_begin = m.index - 1;
                    out.window_len = 2;
                    out.relocations.push_back({{v.vertex, 0, nL - 1}, {v.vertex, 1, nR}});
                    break;
                default:
                    return no_match();
            }
            out.ok = true;
            return out;
        }
        case MoveKind::P: {
            if (m.index < 0 || m.index + 2 > E || m.variant != 0) return no_match();
            auto swapped = p_swap(ev[m.index], ev[m.index + 1]);
            if (!swapped) return no_match();
            out.ok = true;
            out.window_begin = m.index;
            out.window_len = 2;
            out.replacement = {swapped->first, swapped->second};
            return out;
        }
    }
    return no_match();
}

}  // namespace

bool is_applicable(const FrontDiagram& d, const MoveInstance& m) {
    return match_move(d, strand_counts(d), m).ok;
}

void for_each_applicable(const FrontDiagram& d,
                         const std::function<bool(const MoveInstance&)>& fn) {
    const std::vector<int> counts = strand_counts(d);
    const int E = int(d.events.size());
    auto try_emit = [&](MoveKind kind, int variant, int index, int pos) {
        MoveInstance m{kind, variant, index, pos};
        if (!match_move(d, counts, m).ok) return true;
        return fn(m);
    };

    for (int g = 0; g <= E; ++g)
        for (int p = 0; p < counts[g]; ++p)
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::I, v, g, p)) return;

    for (int i = 0; i + 3 <= E; ++i) {
        // windows carry their base position in the middle event
        if (d.events[i + 1].kind == EventKind::X) {
            int p = d.events[i + 1].pos;
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::IInv, v, i, p) ||
                    !try_emit(MoveKind::IInv, v, i, p - 1) ||
                    !try_emit(MoveKind::IInv, v, i, p + 1))
                    return;
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::IIInv, v, i, p)) return;
            if (!try_emit(MoveKind::III, 0, i, p) ||
                !try_emit(MoveKind::III, 0, i, p - 1) ||
                !try_emit(MoveKind::III, 1, i, p) ||
                !try_emit(MoveKind::III, 1, i, p - 1))
                return;
        }
    }
    for (int i = 0; i < E; ++i) {
        const Event& e = d.events[i];
        if (e.kind == EventKind::RC || e.kind == EventKind::LC) {
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::II, v, i, e.pos)) return;
        }
        if (e.kind == EventKind::VX) {
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::IV, v, i, e.pos)) return;
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::V, v, i, e.pos)) return;
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::VI, v, i, e.pos)) return;
            for (int v = 0; v < 4; ++v)
                if (!try_emit(MoveKind::VIInv, v, i, e.pos)) return;
        }
    }
    for (int i = 0; i + 2 <= E; ++i)
        if (!try_emit(MoveKind::P, 0, i, 0)) return;
}

std::vector<MoveInstance> enumerate_applicable(const FrontDiagram& d) {
    std::vector<MoveInstance> out;
    for_each_applicable(d, [&](const MoveInstance& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::size_t count_applicable(const FrontDiagram& d) {
    std::size_t n = 0;
    for_each_applicable(d, [&](const MoveInstance&) {
        ++n;
        return true;
    });
    return n;
}

std::optional<MoveInstance> nth_applicable(const FrontDiagram& d,
                                           std::size_t n) {
    std::optional<MoveInstance> out;
    std::size_t k = 0;
    for_each_applicable(d, [&](const MoveInstance& m) {
        if (k++ == n) {
            out = m;
            return false;
        }
        return true;
    });
    return out;
}

FrontDiagram apply_move(const FrontDiagram& d, const MoveInstance& m,
                        EndMap* end_map) {
    Matched match = match_move(d, strand_counts(d), m);
    if (!match.ok)
        throw Error("move-not-applicable",
                    "move " + move_kind_token(m.kind) + " variant " +
                        std::to_string(m.variant) + " does not match at event " +
                        std::to_string(m.index));
    FrontDiagram out = d;
    out.events.erase(out.events.begin() + match.window_begin,
                     out.events.begin() + match.window_begin + match.window_len);
    out.events.insert(out.events.begin() + match.window_begin,
                      match.replacement.begin(), match.replacement.end());
    Diagnostic diag = validate(out);
    if (!diag.ok)
        throw Error("move-not-applicable",
                    "rewrite produced an invalid diagram: " + diag.message);
    if (end_map) {
        end_map->clear();
        for (const auto& [from, to] : match.relocations) (*end_map)[from] = to;
    }
    return out;
}

MoveInstance inverse_of(const FrontDiagram& d, const MoveInstance& m) {
    switch (m.kind) {
        case MoveKind::I: return {MoveKind::IInv, m.variant, m.index, m.pos};
        case MoveKind::IInv: return {MoveKind::I, m.variant, m.index, m.pos};
        case MoveKind::II: return {MoveKind::IIInv, m.variant, m.index, m.pos};
        case MoveKind::IIInv: return {MoveKind::II, m.variant, m.index, m.pos};
        case MoveKind::III: return {MoveKind::III, m.variant ^ 1, m.index, m.pos};
        case MoveKind::IV: return {MoveKind::IV, m.variant ^ 1, m.index, m.pos};
        case MoveKind::V: {
            const Event& v = d.events[m.index];
            switch (m.variant) {
                case 0: return {MoveKind::V, 1, m.index - v.n_left, m.pos};
                case 1: return {MoveKind::V, 0, m.index + v.n_left, m.pos};
                case 2: return {MoveKind::V, 3, m.index - v.n_left, m.pos};
                case 3: return {MoveKind::V, 2, m.index + v.n_left, m.pos};
            }
            break;
        }
        case MoveKind::VI:
            switch (m.variant) {
                case 0: return {MoveKind::VIInv, 0, m.index, m.pos};
                case 1: return {MoveKind::VIInv, 1, m.index, m.pos};
                case 2: return {MoveKind::VIInv, 2, m.index + 1, m.pos};
                case 3: return {MoveKind::VIInv, 3, m.index + 1, m.pos};
            }
            break;
        case MoveKind::VIInv:
            switch (m.variant) {
                case 0: return {MoveKind::VI, 0, m.index, m.pos};
                case 1: return {MoveKind::VI, 1, m.index, m.pos};
                case 2: return {MoveKind::VI, 2, m.index - 1, m.pos};
                case 3: return {MoveKind::VI, 3, m.index - 1, m.pos};
            }
            break;
        case MoveKind::P: return {MoveKind::P, 0, m.index, 0};
    }
    throw Error("move-not-applicable", "no inverse");
}

std::map<EdgeId, EdgeId> edge_relabel_map(const FrontDiagram& before,
                                          const FrontDiagram& after,
                                          const EndMap& end_map) {
    FrontAnalysis a(before), b(after);
    std::map<EdgeId, EdgeId> out;
    for (const DiagramEdge& e : a.edges()) {
        EdgeEnd end = e.ends[0];
        auto it = end_map.find(end);
        if (it != end_map.end()) end = it->second;
        const DiagramEdge* target = b.edge_at(end);
        if (!target)
            throw Error("internal-error", "end map does not land on an edge");
        out[e.label] = target->label;
    }
    return out;
}

// ---------------------------------------------------------------------------

FrontDiagram stabilize(const FrontDiagram& d, const EdgeId& edge, int sign) {
    FrontAnalysis a(d);
    const DiagramEdge& e = a.edge(edge);  // throws unknown-edge
    const WireRef w = e.wires.front();
    const int dir = e.wire_dir.front();
    const int p = w.pos;
    // down cusps along the reference direction for sign > 0
    std::vector<Event> zig;
    if ((sign > 0) == (dir > 0))
        zig = {lc(p + 1), rc(p)};
    else
        zig = {lc(p), rc(p + 1)};
    FrontDiagram out = d;
    out.events.insert(out.events.begin() + w.gap, zig.begin(), zig.end());
    assert(validate(out).ok);
    return out;
}

std::pair<FrontDiagram, IsotopyLog> random_isotopy(const FrontDiagram& d,
                                                   int n, std::uint64_t seed) {
    Diagnostic diag = validate(d);
    if (!diag.ok) throw Error("invalid-diagram", diag.message);
    std::mt19937_64 rng(seed);
    auto bounded = [&](std::uint64_t bound) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        std::uint64_t x;
        do {
            x = rng();
        } while (x >= limit);
        return x % bound;
    };
    FrontDiagram cur = d;
    IsotopyLog log;
    log.seed = seed;
    for (int step = 0; step < n; ++step) {
        std::size_t total = count_applicable(cur);
        if (total == 0) continue;
        std::size_t pick = bounded(total);
        auto m = nth_applicable(cur, pick);
        cur = apply_move(cur, *m);
        log.applied.push_back(*m);
    }
    return {cur, log};
}

FrontDiagram replay(const FrontDiagram& d, const IsotopyLog& log) {
    FrontDiagram cur = d;
    for (const MoveInstance& m : log.applied) cur = apply_move(cur, m);
    return cur;
}

// ---------------------------------------------------------------------------
// Cut edge slide

namespace {

struct SlideState {
    FrontDiagram d;
    EdgeEnd walk_end;  // the loop end the vertex slides through
};

void apply_and_track(SlideState& s, const MoveInstance& m) {
    EndMap em;
    s.d = apply_move(s.d, m, &em);
    auto it = em.find(s.walk_end);
    if (it != em.end()) s.walk_end = it->second;
}

// VI variant that rotates the end at (side, slot) out of the way.
int vi_variant_for(const Event& v, int side, int slot) {
    if (side == 0) return slot == 0 ? 0 : (slot == v.n_left - 1 ? 1 : -1);
    return slot == 0 ? 2 : (slot == v.n_right - 1 ? 3 : -1);
}

}  // namespace

FrontDiagram slide_cut_edge(const FrontDiagram& d, const VertexId& v,
                            int steps) {
    {
        FrontAnalysis a(d);
        if (a.vertex_event_index(v) < 0)
            throw Error("not-a-cut-edge-vertex", "no vertex " + v);
        const Event& ve = d.events[a.vertex_event_index(v)];
        if (ve.n_left + ve.n_right != 3)
            throw Error("not-a-cut-edge-vertex", v + " is not valence 3");
        const DiagramEdge* loop = nullptr;
        const DiagramEdge* cut = nullptr;
        for (const DiagramEdge& e : a.edges()) {
            if (e.ends[0].vertex == v && e.ends[1].vertex == v) loop = &e;
            else if (e.ends[0].vertex == v || e.ends[1].vertex == v) cut = &e;
        }
        if (!loop || !cut)
            throw Error("not-a-cut-edge-vertex",
                        v + " does not join a loop and a cut edge");
        CutSet cuts = cut_set(a.graph());
        if (!cuts.edges.count(cut->label))
            throw Error("not-a-cut-edge-vertex",
                        cut->label + " is not a cut edge");
    }
    if (steps == 0) return d;

    SlideState s{d, {}};
    {
        FrontAnalysis a(s.d);
        const DiagramEdge* loop = nullptr;
        for (const DiagramEdge& e : a.edges())
            if (e.ends[0].vertex == v && e.ends[1].vertex == v) loop = &e;
        s.walk_end = steps > 0 ? loop->ends[0] : loop->ends[1];
    }

    int remaining = steps > 0 ? steps : -steps;
    int guard = 0;
    while (remaining > 0) {
        if (++guard > 10000)
            throw Error("move-not-applicable", "slide did not converge");
        FrontAnalysis a(s.d);
        int vidx = a.vertex_event_index(v);
        const Event& ve = s.d.events[vidx];
        const DiagramEdge* loop = a.edge_at(s.walk_end);
        if (!loop)
            throw Error("internal-error", "walk end lost during slide");
        const EdgeEnd other = loop->ends[0] == s.walk_end ? loop->ends[1]
                                                          : loop->ends[0];

        if (other.side == s.walk_end.side) {
            // station state: step off through walk_end
            int var = vi_variant_for(ve, s.walk_end.side, s.walk_end.slot);
            if (var < 0) {
                // walk_end is the middle of three ends on one side; the stub
                // occupies the extreme slot the other loop end does not
                int n_side = s.walk_end.side == 0 ? ve.n_left : ve.n_right;
                int stub_slot = other.slot == 0 ? n_side - 1 : 0;
                int stub_var = vi_variant_for(ve, s.walk_end.side, stub_slot);
                apply_and_track(s, {MoveKind::VI, stub_var, vidx, ve.pos});
                continue;
            }
            apply_and_track(s, {MoveKind::VI, var, vidx, ve.pos});
            continue;
        }

        // through state: find the next cusp along the walk end
        int widx = loop->ends[0] == s.walk_end ? 0 : 1;
        WireRef first_wire = widx == 0 ? loop->wires.front() : loop->wires.back();
        int first_dir = widx == 0 ? loop->wire_dir.front() : -loop->wire_dir.back();
        if (loop->cusps.empty())
            throw Error("internal-error", "through loop without cusps");
        int cusp_event = widx == 0 ? loop->cusps.front().event_index
                                   : loop->cusps.back().event_index;
        (void)first_wire;
        (void)first_dir;

        // bring the vertex event and the cusp next to each other
        vidx = a.vertex_event_index(v);
        bool progressed = false;
        if (cusp_event > vidx + 1) {
            // try to move the vertex right, else pull the cusp left
            if (is_applicable(s.d, {MoveKind::P, 0, vidx, 0})) {
                apply_and_track(s, {MoveKind::P, 0, vidx, 0});
                progressed = true;
            } else if (is_applicable(s.d, {MoveKind::P, 0, cusp_event - 1, 0})) {
                apply_and_track(s, {MoveKind::P, 0, cusp_event - 1, 0});
                progressed = true;
            }
            if (!progressed)
                throw Error("move-not-applicable",
                            "slide corridor is blocked between events " +
                                std::to_string(vidx) + " and " +
                                std::to_string(cusp_event));
            continue;
        }
        if (cusp_event < vidx - 1) {
            if (is_applicable(s.d, {MoveKind::P, 0, vidx - 1, 0})) {
                apply_and_track(s, {MoveKind::P, 0, vidx - 1, 0});
                progressed = true;
            } else if (is_applicable(s.d, {MoveKind::P, 0, cusp_event, 0})) {
                apply_and_track(s, {MoveKind::P, 0, cusp_event, 0});
                progressed = true;
            }
            if (!progressed)
                throw Error("move-not-applicable",
                            "slide corridor is blocked between events " +
                                std::to_string(cusp_event) + " and " +
                                std::to_string(vidx));
            continue;
        }

        // adjacent: the walk end must occupy the hooked corner
        const Event& ve2 = s.d.events[vidx];
        const Event& cusp = s.d.events[cusp_event];
        bool cusp_right = cusp_event == vidx + 1;
        int need_variant = -1;
        int need_slot = -1;
        if (cusp_right && cusp.kind == EventKind::RC) {
            if (cusp.pos == ve2.pos + ve2.n_right - 1) {  // hook under: BR
                need_variant = 0;
                need_slot = ve2.n_right - 1;
            } else if (cusp.pos == ve2.pos - 1) {  // hook over: TR
                need_variant = 1;
                need_slot = 0;
            }
        } else if (!cusp_right && cusp.kind == EventKind::LC) {
            if (cusp.pos == ve2.pos - 1) {  // hook over: TL
                need_variant = 2;
                need_slot = 0;
            } else if (cusp.pos == ve2.pos + ve2.n_left - 1) {  // hook under: BL
                need_variant = 3;
                need_slot = ve2.n_left - 1;
            }
        }
        if (need_variant < 0)
            throw Error("move-not-applicable",
                        "vertex is not hooked by the adjacent cusp");
        int need_side = need_variant <= 1 ? 1 : 0;
        if (s.walk_end.side != need_side)
            throw Error("move-not-applicable", "walk end on the wrong side");
        if (s.walk_end.slot != need_slot) {
            // the stub blocks the corner; rotate it to the other side
            int stub_slot = need_slot;
            int stub_var = vi_variant_for(ve2, need_side, stub_slot);
            if (stub_var < 0)
                throw Error("move-not-applicable", "stub cannot be rotated");
            apply_and_track(s, {MoveKind::VI, stub_var, vidx, ve2.pos});
            continue;
        }
        apply_and_track(s, {MoveKind::IV, need_variant, vidx, ve2.pos});
        --remaining;
    }
    return s.d;
}

}  // namespace legf
