#include "sgt/moves.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sgt/errors.hpp"

namespace sgt {

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::R1Add: return "R1+";
        case MoveKind::R1Remove: return "R1-";
        case MoveKind::R2Add: return "R2+";
        case MoveKind::R2Remove: return "R2-";
        case MoveKind::R3: return "R3";
        case MoveKind::R4: return "R4";
        case MoveKind::R5Flip: return "R5flip";
        case MoveKind::R5Unflip: return "R5unflip";
        case MoveKind::R5Spin: return "R5spin";
        case MoveKind::R5Unspin: return "R5unspin";
        case MoveKind::R6Add: return "R6+";
        case MoveKind::R6Remove: return "R6-";
    }
    return "?";
}

std::string MoveSpec::describe() const {
    std::ostringstream os;
    auto dart = [&](const DartRef& r) { os << (r.at_crossing ? 'X' : 'V') << r.id << '.' << r.slot; };
    os << to_string(kind);
    switch (kind) {
        case MoveKind::R1Add: os << " at "; dart(a); os << " variant " << variant; break;
        case MoveKind::R1Remove: os << " X" << crossing; break;
        case MoveKind::R2Add: os << " at "; dart(a); os << " / "; dart(b); os << (variant ? " over" : " under"); break;
        case MoveKind::R2Remove: os << " X" << crossing << " X" << crossing2; break;
        case MoveKind::R3: os << " at "; dart(a); break;
        case MoveKind::R4:
            os << " V" << vertex << " slot " << slot << " run " << count;
            if (count == 0) os << " arc ", dart(a), os << (variant ? " over" : " under");
            break;
        case MoveKind::R6Remove: os << " X" << crossing << " V" << vertex; break;
        case MoveKind::R6Add: os << " V" << vertex << " slot " << slot << " sign " << variant; break;
        default: os << " V" << vertex << " sign " << variant; break;
    }
    return os.str();
}

bool move_allowed(MoveKind kind, EquivalenceMode mode) {
    switch (kind) {
        case MoveKind::R1Add:
        case MoveKind::R1Remove:
        case MoveKind::R5Flip:
        case MoveKind::R5Unflip: return mode != EquivalenceMode::Ribbon;
        case MoveKind::R6Add:
        case MoveKind::R6Remove: return mode == EquivalenceMode::Pliable;
        default: return true;
    }
}

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::array<Label, 4> rotate1(std::array<Label, 4> x) {
    std::rotate(x.begin(), x.begin() + 1, x.end());
    return x;
}

// Mutable copy of a diagram addressed through the ports of the original.
class Editor {
public:
    explicit Editor(const DiagramView& view)
        : view_(view), out_(view.diagram()), next_label_(view.diagram().next_label()),
          next_crossing_(view.diagram().next_crossing_id()) {}

    Label fresh() { return next_label_++; }
    Label get(Port p) const {
        return view_.is_crossing(p.node) ? out_.crossings[p.node - view_.vertex_count()].arcs[p.slot]
                                         : out_.vertices[p.node].arcs[p.slot];
    }
    void set(Port p, Label l) {
        if (view_.is_crossing(p.node))
            out_.crossings[p.node - view_.vertex_count()].arcs[p.slot] = l;
        else
            out_.vertices[p.node].arcs[p.slot] = l;
    }
    int add(const std::array<Label, 4>& arcs) {
        out_.crossings.push_back({next_crossing_, arcs});
        return next_crossing_++;
    }
    void drop(int node) { dropped_.insert(view_.node_id(node)); }
    void add_circle(Label l) { out_.vertices.push_back({out_.next_vertex_id(), {l, l}}); }
    void rename(Label from, Label to) {
        for (Vertex& v : out_.vertices)
            for (Label& l : v.arcs)
                if (l == from) l = to;
        for (Crossing& c : out_.crossings)
            for (Label& l : c.arcs)
                if (l == from) l = to;
    }
    Diagram finish() {
        std::erase_if(out_.crossings, [&](const Crossing& c) { return dropped_.count(c.id) > 0; });
        return std::move(out_);
    }
    Diagram& raw() { return out_; }

private:
    const DiagramView& view_;
    Diagram out_;
    Label next_label_;
    int next_crossing_;
    std::set<int> dropped_;
};

Port resolve(const DiagramView& view, const DartRef& r) {
    int node = r.at_crossing ? view.node_of_crossing(r.id) : view.node_of_vertex(r.id);
    if (node < 0) throw MoveError(std::string("no ") + (r.at_crossing ? "crossing X" : "vertex V") + std::to_string(r.id));
    if (r.slot < 0 || r.slot >= view.degree(node)) throw MoveError("slot out of range");
    return {node, r.slot};
}

DartRef ref(const DiagramView& view, Port p) { return {view.is_crossing(p.node), view.node_id(p.node), p.slot}; }

int vertex_node(const DiagramView& view, int id) {
    int n = view.node_of_vertex(id);
    if (n < 0) throw MoveError("no vertex V" + std::to_string(id));
    return n;
}

int crossing_node(const DiagramView& view, int id) {
    int n = view.node_of_crossing(id);
    if (n < 0) throw MoveError("no crossing X" + std::to_string(id));
    return n;
}

Port face_next(const DiagramView& view, Port p) { return view.rotate(view.other_end(p), -1); }

bool same_face(const DiagramView& view, Port p, Port q) {
    Port cur = p;
    do {
        if (cur == q) return true;
        cur = face_next(view, cur);
    } while (!(cur == p));
    return false;
}

// --- R1 ---------------------------------------------------------------------

Diagram r1_add(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    Port p = resolve(view, m.a);
    Port q = view.other_end(p);
    Editor ed(view);
    Label a = view.label(p), b = ed.fresh(), c = ed.fresh();
    ed.set(q, c);
    std::array<Label, 4> x;
    switch (mod(m.variant, 4)) {
        case 0: x = {a, b, b, c}; break;
        case 1: x = rotate1({a, b, b, c}); break;
        case 2: x = {a, c, b, b}; break;
        default: x = rotate1({a, c, b, b}); break;
    }
    ed.add(x);
    return ed.finish();
}

Diagram r1_remove(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    int node = crossing_node(view, m.crossing);
    for (int s = 0; s < 4; ++s)
        if (view.other_end({node, s}) == Port{node, (s + 1) % 4}) return splice_out(d, node, {{0, 2}, {1, 3}});
    throw MoveError("X" + std::to_string(m.crossing) + " has no kink");
}

// --- R2 ---------------------------------------------------------------------

Diagram r2_add(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    Port p1 = resolve(view, m.a), p2 = resolve(view, m.b);
    if (view.label(p1) == view.label(p2)) throw MoveError("R2 needs two different arcs");
    if (!same_face(view, p1, p2)) throw MoveError("R2 arcs do not share a face");
    Port q1 = view.other_end(p1), q2 = view.other_end(p2);
    Editor ed(view);
    Label a1 = view.label(p1), a2 = view.label(p2);
    Label m1 = ed.fresh(), c1 = ed.fresh(), m2 = ed.fresh(), c2 = ed.fresh();
    ed.set(q1, c1);
    ed.set(q2, c2);
    std::array<Label, 4> x1{m2, m1, c2, a1}, x2{a2, m1, m2, c1};  // first arc over
    if (!m.variant) x1 = rotate1(x1), x2 = rotate1(x2);
    ed.add(x1);
    ed.add(x2);
    return ed.finish();
}

Diagram straight_out(const Diagram& d, int crossing_id) {
    DiagramView view(d);
    return splice_out(d, crossing_node(view, crossing_id), {{0, 2}, {1, 3}});
}

Diagram r2_remove(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    int x = crossing_node(view, m.crossing), y = crossing_node(view, m.crossing2);
    if (x == y) throw MoveError("R2 removal needs two crossings");
    int shared = 0;
    std::unordered_set<Label> outer;
    for (int s = 0; s < 4; ++s) {
        if (view.other_end({x, s}).node == y) ++shared;
        outer.insert(view.label({x, s}));
        outer.insert(view.label({y, s}));
    }
    if (shared < 2) throw MoveError("crossings do not bound a bigon");
    Diagram cand = straight_out(straight_out(d, m.crossing), m.crossing2);
    // accept only if pushing the strands back reproduces d
    const std::string target = canonical_code(d, {.keep_vertex_ids = true});
    DiagramView cv(cand);
    std::vector<Port> darts;
    for (int k = 0; k < cv.dart_count(); ++k)
        if (outer.count(cv.label(cv.port(k)))) darts.push_back(cv.port(k));
    for (Port p1 : darts)
        for (Port p2 : darts) {
            if (cv.label(p1) == cv.label(p2) || !same_face(cv, p1, p2)) continue;
            for (int over = 0; over < 2; ++over) {
                MoveSpec f{.kind = MoveKind::R2Add, .a = ref(cv, p1), .b = ref(cv, p2), .variant = over};
                if (canonical_code(r2_add(cand, f), {.keep_vertex_ids = true}) == target) return cand;
            }
        }
    throw MoveError("crossings do not form a removable bigon");
}

// --- R3 ---------------------------------------------------------------------

Diagram r3(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    Port f0 = resolve(view, m.a);
    std::array<Port, 3> dep{f0, face_next(view, f0), face_next(view, face_next(view, f0))};
    if (!(face_next(view, dep[2]) == f0)) throw MoveError("R3 face is not a triangle");
    std::array<int, 3> node{}, ds{}, as{};
    for (int k = 0; k < 3; ++k) {
        node[k] = dep[k].node;
        ds[k] = dep[k].slot;
        if (!view.is_crossing(node[k])) throw MoveError("R3 triangle must have three crossings");
    }
    if (node[0] == node[1] || node[1] == node[2] || node[0] == node[2])
        throw MoveError("R3 triangle must have three distinct crossings");
    for (int k = 0; k < 3; ++k) as[k] = mod(ds[k] + 1, 4);
    // strand k runs along the side leaving crossing k
    bool ok = false;
    for (int k = 0; k < 3; ++k)
        if (ds[k] % 2 == 1 && as[(k + 1) % 3] % 2 == 1) ok = true;
    if (!ok) throw MoveError("no strand passes over both of its triangle crossings");
    std::array<Label, 3> alpha{};
    for (int k = 0; k < 3; ++k) alpha[k] = view.label(dep[k]);
    auto lab = [&](int k, int slot) { return view.label({node[mod(k, 3)], mod(slot, 4)}); };
    for (int k = 0; k < 3; ++k)
        for (int s : {as[k] + 2, ds[k] + 2})
            if (std::find(alpha.begin(), alpha.end(), lab(k, s)) != alpha.end())
                throw MoveError("R3 triangle is not embedded");
    Editor ed(view);
    std::array<Label, 3> beta{ed.fresh(), ed.fresh(), ed.fresh()};
    for (int k = 0; k < 3; ++k) {
        int km = mod(k - 1, 3), kp = (k + 1) % 3;
        ed.set({node[k], as[k]}, lab(km, ds[km] + 2));
        ed.set({node[k], mod(as[k] + 2, 4)}, beta[km]);
        ed.set({node[k], ds[k]}, lab(kp, as[kp] + 2));
        ed.set({node[k], mod(ds[k] + 2, 4)}, beta[k]);
    }
    return ed.finish();
}

// --- R4 ---------------------------------------------------------------------

Diagram r4(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    int v = vertex_node(view, m.vertex);
    const int n = view.degree(v);
    if (n == 0) throw MoveError("vertex has no edges");
    if (m.count < 0 || m.count > n) throw MoveError("bad run length");
    const int t0 = mod(m.slot, n);
    Editor ed(view);
    std::vector<Label> outer(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) outer[t] = view.label({v, t});
    Label s_in = 0, s_out = 0;
    bool over = false;
    if (m.count == 0) {
        Port p = resolve(view, m.a);
        Port q = view.other_end(p);
        if (p.node == v || q.node == v) throw MoveError("R4 strand must not end at the vertex");
        if (!same_face(view, p, {v, mod(t0 - 1, n)})) throw MoveError("R4 strand is not in the face at that corner");
        s_in = view.label(p);
        s_out = ed.fresh();
        ed.set(q, s_out);
        over = m.variant != 0;
    } else {
        std::vector<int> run;
        int prev = -1;
        over = false;
        for (int i = 0; i < m.count; ++i) {
            int t = mod(t0 + i, n);
            Port c = view.other_end({v, t});
            if (!view.is_crossing(c.node)) throw MoveError("R4 run edge does not meet a crossing");
            if (std::find(run.begin(), run.end(), c.node) != run.end()) throw MoveError("R4 run repeats a crossing");
            int before = mod(c.slot + 1, 4), after = mod(c.slot - 1, 4);
            bool o = before % 2 == 1;
            if (i == 0) {
                over = o;
                s_in = view.label({c.node, before});
            } else {
                if (o != over) throw MoveError("R4 strand changes level along the run");
                if (!(view.other_end({prev, mod(view.other_end({v, mod(t - 1, n)}).slot - 1, 4)}) ==
                      Port{c.node, before}))
                    throw MoveError("R4 run crossings are not consecutive on one strand");
            }
            s_out = view.label({c.node, after});
            outer[t] = view.label({c.node, mod(c.slot + 2, 4)});
            ed.set({v, t}, outer[t]);
            ed.drop(c.node);
            run.push_back(c.node);
            prev = c.node;
        }
    }
    const int k = n - m.count;
    if (k == 0) {
        if (s_in == s_out)
            ed.add_circle(s_in);
        else
            ed.rename(s_out, s_in);
        return ed.finish();
    }
    Label cur = s_in;
    for (int i = 0; i < k; ++i) {
        int t = mod(t0 - 1 - i, n);
        Label inner = ed.fresh();
        Label next = i + 1 == k ? s_out : ed.fresh();
        ed.set({v, t}, inner);
        if (over)
            ed.add({inner, next, outer[t], cur});
        else
            ed.add({cur, inner, next, outer[t]});
        cur = next;
    }
    return ed.finish();
}

// --- R5 ---------------------------------------------------------------------

// Reverses the rotation at v and inserts a half-twist on its edges.
Diagram flip(const Diagram& d, int vertex_id, int sign) {
    DiagramView view(d);
    int v = vertex_node(view, vertex_id);
    const int n = view.degree(v);
    if (n < 2) throw MoveError("flip needs a vertex of valence at least 2");
    Editor ed(view);
    std::vector<Label> outer(static_cast<std::size_t>(n)), cur(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) outer[p] = view.label({v, p});
    for (int k = 0; k < n; ++k) {
        cur[k] = ed.fresh();
        ed.set({v, n - 1 - k}, cur[k]);
    }
    std::vector<std::array<Label, 4>> braid;
    for (int i = n - 1; i >= 1; --i)
        for (int j = 0; j < i; ++j) {
            Label ne = ed.fresh(), nw = ed.fresh();
            std::array<Label, 4> x{cur[j], cur[j + 1], ne, nw};
            braid.push_back(sign ? rotate1(x) : x);
            cur[j] = nw;
            cur[j + 1] = ne;
        }
    std::unordered_map<Label, Label> top;
    for (int k = 0; k < n; ++k) top[cur[k]] = outer[n - 1 - k];
    for (auto& x : braid) {
        for (Label& l : x)
            if (auto it = top.find(l); it != top.end()) l = it->second;
        ed.add(x);
    }
    return ed.finish();
}

// Curl variant whose framing change cancels one strand of a full twist.
int spin_curl_variant(int sign) { return sign ? 1 : 0; }

Diagram spin(const Diagram& d, int vertex_id, int sign) {
    DiagramView view(d);
    int v = vertex_node(view, vertex_id);
    const int n = view.degree(v);
    if (n < 2) throw MoveError("spin needs a vertex of valence at least 2");
    Diagram x = d;
    for (int p = 0; p < n; ++p) {
        MoveSpec c{.kind = MoveKind::R1Add, .a = {false, vertex_id, p}, .variant = spin_curl_variant(sign)};
        x = r1_add(x, c);
    }
    return flip(flip(x, vertex_id, sign), vertex_id, sign);
}

// Undoes flip (steps = n-1 crossings per strand, reversed slots) or spin
// (2(n-1) braid crossings plus a curl, slots kept): strips the crossings met
// by following each strand from v and checks that redoing the move gives d.
Diagram unwind(const Diagram& d, int vertex_id, int sign, bool full) {
    DiagramView view(d);
    int v = vertex_node(view, vertex_id);
    const int n = view.degree(v);
    if (n < 2) throw MoveError("vertex valence too small");
    const int steps = full ? 2 * (n - 1) + 2 : n - 1;
    Editor ed(view);
    std::vector<Label> end_label(static_cast<std::size_t>(n));
    std::set<int> met;
    for (int p = 0; p < n; ++p) {
        Port cur{v, p};
        for (int i = 0; i < steps; ++i) {
            Port arrive = view.other_end(cur);
            if (!view.is_crossing(arrive.node)) throw MoveError("strand leaves the twist region early");
            met.insert(arrive.node);
            cur = view.rotate(arrive, 2);
        }
        end_label[p] = view.label(cur);
    }
    for (int node : met) ed.drop(node);
    for (int p = 0; p < n; ++p) ed.set({v, full ? p : n - 1 - p}, end_label[p]);
    Diagram cand = ed.finish();
    try {
        validate(cand);
    } catch (const InputError&) {
        throw MoveError("twist region is not isolated");
    }
    Diagram redo = full ? spin(cand, vertex_id, sign) : flip(cand, vertex_id, sign);
    if (canonical_code(redo, {.keep_vertex_ids = true}) != canonical_code(d, {.keep_vertex_ids = true}))
        throw MoveError("no vertex twist of that sign at V" + std::to_string(vertex_id));
    return cand;
}

// --- R6 ---------------------------------------------------------------------

Diagram r6_add(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    int v = vertex_node(view, m.vertex);
    const int n = view.degree(v);
    if (n < 2) throw MoveError("R6 needs two edges at the vertex");
    int t = mod(m.slot, n), t1 = (t + 1) % n;
    Editor ed(view);
    Label lt = view.label({v, t}), lt1 = view.label({v, t1});
    Label x = ed.fresh(), y = ed.fresh();
    ed.set({v, t}, y);
    ed.set({v, t1}, x);
    std::array<Label, 4> c{x, y, lt, lt1};
    ed.add(m.variant ? rotate1(c) : c);
    return ed.finish();
}

Diagram r6_remove(const Diagram& d, const MoveSpec& m) {
    DiagramView view(d);
    int c = crossing_node(view, m.crossing);
    int v = vertex_node(view, m.vertex);
    const int n = view.degree(v);
    for (int j = 0; j < 4; ++j) {
        Port e0 = view.other_end({c, j}), e1 = view.other_end({c, (j + 1) % 4});
        if (e0.node != v || e1.node != v || n < 2) continue;
        if (e0.slot != (e1.slot + 1) % n) continue;
        int t = e1.slot;
        Editor ed(view);
        ed.set({v, t}, view.label({c, (j + 2) % 4}));
        ed.set({v, (t + 1) % n}, view.label({c, (j + 3) % 4}));
        ed.drop(c);
        return ed.finish();
    }
    throw MoveError("X" + std::to_string(m.crossing) + " is not a twist at V" + std::to_string(m.vertex));
}

Diagram dispatch(const Diagram& d, const MoveSpec& m) {
    switch (m.kind) {
        case MoveKind::R1Add: return r1_add(d, m);
        case MoveKind::R1Remove: return r1_remove(d, m);
        case MoveKind::R2Add: return r2_add(d, m);
        case MoveKind::R2Remove: return r2_remove(d, m);
        case MoveKind::R3: return r3(d, m);
        case MoveKind::R4: return r4(d, m);
        case MoveKind::R5Flip: return flip(d, m.vertex, m.variant);
        case MoveKind::R5Unflip: return unwind(d, m.vertex, m.variant, false);
        case MoveKind::R5Spin: return spin(d, m.vertex, m.variant);
        case MoveKind::R5Unspin: return unwind(d, m.vertex, m.variant, true);
        case MoveKind::R6Add: return r6_add(d, m);
        case MoveKind::R6Remove: return r6_remove(d, m);
    }
    throw MoveError("unknown move kind");
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSpec& m, EquivalenceMode mode) {
    if (!move_allowed(m.kind, mode))
        throw MoveError(to_string(m.kind) + " is not allowed in " + to_string(mode) + " mode");
    validate(d);
    const bool planar = is_planar(d);
    Diagram out = dispatch(d, m);
    try {
        validate(out);
    } catch (const InputError& e) {
        throw MoveError(std::string("move produced an invalid diagram: ") + e.what());
    }
    if (planar && !is_planar(out)) throw MoveError(m.describe() + " does not fit the planar picture");
    return out;
}

std::vector<MoveSpec> candidate_moves(const Diagram& d, EquivalenceMode mode, const std::vector<MoveKind>& kinds) {
    std::vector<MoveKind> wanted = kinds;
    if (wanted.empty())
        for (int k = 0; k <= static_cast<int>(MoveKind::R6Remove); ++k) wanted.push_back(static_cast<MoveKind>(k));
    DiagramView view(d);
    std::vector<MoveSpec> cand;
    auto all_faces = faces(d);
    for (MoveKind kind : wanted) {
        if (!move_allowed(kind, mode)) continue;
        switch (kind) {
            case MoveKind::R1Add:
                for (int k = 0; k < view.dart_count(); ++k)
                    if (view.partner(k) > k)
                        for (int var = 0; var < 4; ++var)
                            cand.push_back({.kind = kind, .a = ref(view, view.port(k)), .variant = var});
                break;
            case MoveKind::R1Remove:
            case MoveKind::R2Remove:
            case MoveKind::R6Remove:
                for (int c = view.vertex_count(); c < view.node_count(); ++c) {
                    int cid = view.node_id(c);
                    if (kind == MoveKind::R1Remove) cand.push_back({.kind = kind, .crossing = cid});
                    std::set<int> nb;
                    for (int s = 0; s < 4; ++s) nb.insert(view.other_end({c, s}).node);
                    for (int o : nb) {
                        if (kind == MoveKind::R2Remove && view.is_crossing(o) && o > c)
                            cand.push_back({.kind = kind, .crossing = cid, .crossing2 = view.node_id(o)});
                        if (kind == MoveKind::R6Remove && !view.is_crossing(o))
                            cand.push_back({.kind = kind, .vertex = view.node_id(o), .crossing = cid});
                    }
                }
                break;
            case MoveKind::R2Add:
                for (const auto& f : all_faces)
                    for (Port p1 : f)
                        for (Port p2 : f)
                            if (!(p1 == p2))
                                for (int over = 0; over < 2; ++over)
                                    cand.push_back({.kind = kind, .a = ref(view, p1), .b = ref(view, p2), .variant = over});
                break;
            case MoveKind::R3:
                for (const auto& f : all_faces)
                    if (f.size() == 3) cand.push_back({.kind = kind, .a = ref(view, f.front())});
                break;
            case MoveKind::R4:
                for (int v = 0; v < view.vertex_count(); ++v) {
                    int n = view.degree(v), id = view.node_id(v);
                    for (int t = 0; t < n; ++t) {
                        for (int cnt = 1; cnt <= n; ++cnt)
                            cand.push_back({.kind = kind, .vertex = id, .slot = t, .count = cnt});
                        Port corner{v, mod(t - 1, n)};
                        for (const auto& f : all_faces) {
                            if (std::find(f.begin(), f.end(), corner) == f.end()) continue;
                            for (Port p : f)
                                for (int over = 0; over < 2; ++over)
                                    if (p.node != v && view.other_end(p).node != v)
                                        cand.push_back({.kind = kind, .vertex = id, .a = ref(view, p), .slot = t,
                                                        .count = 0, .variant = over});
                        }
                    }
                }
                break;
            case MoveKind::R5Flip:
            case MoveKind::R5Unflip:
            case MoveKind::R5Spin:
            case MoveKind::R5Unspin:
                for (int v = 0; v < view.vertex_count(); ++v)
                    if (view.degree(v) >= 2)
                        for (int sign = 0; sign < 2; ++sign)
                            cand.push_back({.kind = kind, .vertex = view.node_id(v), .variant = sign});
                break;
            case MoveKind::R6Add:
                for (int v = 0; v < view.vertex_count(); ++v)
                    if (view.degree(v) >= 2)
                        for (int t = 0; t < view.degree(v); ++t)
                            for (int sign = 0; sign < 2; ++sign)
                                cand.push_back({.kind = kind, .vertex = view.node_id(v), .slot = t, .variant = sign});
                break;
        }
    }
    return cand;
}

std::vector<MoveSpec> legal_moves(const Diagram& d, EquivalenceMode mode, const std::vector<MoveKind>& kinds) {
    std::vector<MoveSpec> out;
    for (const MoveSpec& m : candidate_moves(d, mode, kinds)) {
        try {
            apply_move(d, m, mode);
            out.push_back(m);
        } catch (const MoveError&) {
        }
    }
    return out;
}

}  // namespace sgt
