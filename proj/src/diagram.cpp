#include "sgt/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sgt/errors.hpp"

namespace sgt {

int Diagram::max_valence() const {
    int m = 0;
    for (const Vertex& v : vertices) m = std::max(m, static_cast<int>(v.arcs.size()));
    return m;
}

int Diagram::next_vertex_id() const {
    int m = 0;
    for (const Vertex& v : vertices) m = std::max(m, v.id);
    return m + 1;
}

int Diagram::next_crossing_id() const {
    int m = 0;
    for (const Crossing& c : crossings) m = std::max(m, c.id);
    return m + 1;
}

Label Diagram::next_label() const {
    Label m = 0;
    for (const Vertex& v : vertices)
        for (Label l : v.arcs) m = std::max(m, l);
    for (const Crossing& c : crossings)
        for (Label l : c.arcs) m = std::max(m, l);
    return m + 1;
}

void Diagram::sort_by_id() {
    std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
}

DiagramView::DiagramView(const Diagram& d) : d_(&d) {
    offset_.reserve(d.vertices.size() + d.crossings.size() + 1);
    offset_.push_back(0);
    for (const Vertex& v : d.vertices) offset_.push_back(offset_.back() + static_cast<int>(v.arcs.size()));
    for (std::size_t i = 0; i < d.crossings.size(); ++i) offset_.push_back(offset_.back() + 4);
    node_of_dart_.resize(static_cast<std::size_t>(offset_.back()));
    for (int n = 0; n + 1 < static_cast<int>(offset_.size()); ++n)
        for (int k = offset_[n]; k < offset_[n + 1]; ++k) node_of_dart_[k] = n;
    partner_.assign(static_cast<std::size_t>(offset_.back()), -1);
    std::unordered_map<Label, int> first;
    first.reserve(partner_.size());
    for (int k = 0; k < offset_.back(); ++k) {
        Label l = label(port(k));
        auto [it, fresh] = first.emplace(l, k);
        if (fresh) continue;
        if (it->second < 0) throw InputError("arc label " + std::to_string(l) + " occurs more than twice");
        partner_[k] = it->second;
        partner_[it->second] = k;
        it->second = -1;
    }
    for (const auto& [l, k] : first)
        if (k >= 0) throw InputError("arc label " + std::to_string(l) + " occurs only once");
}

Port DiagramView::port(int dart) const {
    int n = node_of_dart_[dart];
    return {n, dart - offset_[n]};
}

Label DiagramView::label(Port p) const {
    if (p.node < vertex_count()) return d_->vertices[p.node].arcs[p.slot];
    return d_->crossings[p.node - vertex_count()].arcs[p.slot];
}

int DiagramView::node_of_vertex(int id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (d_->vertices[i].id == id) return i;
    return -1;
}

int DiagramView::node_of_crossing(int id) const {
    for (std::size_t i = 0; i < d_->crossings.size(); ++i)
        if (d_->crossings[i].id == id) return vertex_count() + static_cast<int>(i);
    return -1;
}

int DiagramView::node_id(int node) const {
    return is_crossing(node) ? d_->crossings[node - vertex_count()].id : d_->vertices[node].id;
}

Port DiagramView::rotate(Port p, int k) const {
    int deg = degree(p.node);
    return {p.node, ((p.slot + k) % deg + deg) % deg};
}

std::vector<std::vector<int>> DiagramView::components() const {
    int n = node_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int k = 0; k < dart_count(); ++k) parent[find(node_of_dart_[k])] = find(node_of_dart_[partner_[k]]);
    std::vector<std::vector<int>> out;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (slot[r] < 0) slot[r] = static_cast<int>(out.size()), out.emplace_back();
        out[slot[r]].push_back(v);
    }
    return out;
}

void validate(const Diagram& d) {
    std::unordered_set<int> ids;
    for (const Vertex& v : d.vertices)
        if (!ids.insert(v.id).second) throw InputError("duplicate vertex id V" + std::to_string(v.id));
    ids.clear();
    for (const Crossing& c : d.crossings)
        if (!ids.insert(c.id).second) throw InputError("duplicate crossing id X" + std::to_string(c.id));
    DiagramView view(d);  // checks label multiplicities
}

namespace {

struct Token {
    char kind;
    int id;
    std::vector<std::string> labels;
    int line;
};

bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\'';
}

bool is_integer(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.size() - i > 9) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Diagram parse_pd(std::string_view text) {
    std::vector<Token> items;
    std::size_t i = 0;
    int line = 1;
    auto fail = [&](const std::string& msg) { throw InputError("PD line " + std::to_string(line) + ": " + msg); };
    auto skip_space = [&] {
        while (i < text.size()) {
            if (text[i] == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
                if (text[i] == '\n') ++line;
                ++i;
            } else {
                break;
            }
        }
    };
    while (true) {
        skip_space();
        if (i >= text.size()) break;
        Token t{text[i], 0, {}, line};
        if (t.kind != 'V' && t.kind != 'X') fail(std::string("expected 'V' or 'X', found '") + text[i] + "'");
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || i - start > 9) fail("missing or oversized id after '" + std::string(1, t.kind) + "'");
        t.id = std::stoi(std::string(text.substr(start, i - start)));
        skip_space();
        if (i >= text.size() || text[i] != '[') fail("expected '['");
        ++i;
        skip_space();
        if (i < text.size() && text[i] == ']') {
            ++i;
        } else {
            while (true) {
                skip_space();
                start = i;
                while (i < text.size() && is_label_char(text[i])) ++i;
                if (start == i) fail("expected arc label");
                t.labels.emplace_back(text.substr(start, i - start));
                skip_space();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ']') {
                    ++i;
                    break;
                }
                fail("expected ',' or ']'");
            }
        }
        if (t.kind == 'X' && t.labels.size() != 4)
            fail("crossing X" + std::to_string(t.id) + " has " + std::to_string(t.labels.size()) + " labels, expected 4");
        items.push_back(std::move(t));
    }

    bool numeric = std::all_of(items.begin(), items.end(), [](const Token& t) {
        return std::all_of(t.labels.begin(), t.labels.end(), is_integer);
    });
    std::unordered_map<std::string, Label> names;
    auto to_label = [&](const std::string& s) -> Label {
        if (numeric) return std::stoi(s);
        auto [it, fresh] = names.emplace(s, static_cast<Label>(names.size() + 1));
        return it->second;
    };
    Diagram d;
    for (const Token& t : items) {
        if (t.kind == 'V') {
            Vertex v{t.id, {}};
            for (const auto& s : t.labels) v.arcs.push_back(to_label(s));
            d.vertices.push_back(std::move(v));
        } else {
            Crossing c{t.id, {}};
            for (int k = 0; k < 4; ++k) c.arcs[k] = to_label(t.labels[k]);
            d.crossings.push_back(c);
        }
    }
    validate(d);
    return d;
}

std::string emit_pd(const Diagram& d) {
    Diagram s = d;
    s.sort_by_id();
    std::ostringstream os;
    auto list = [&](const auto& arcs) {
        os << '[';
        for (std::size_t k = 0; k < arcs.size(); ++k) os << (k ? "," : "") << arcs[k];
        os << "]\n";
    };
    for (const Vertex& v : s.vertices) os << 'V' << v.id, list(v.arcs);
    for (const Crossing& c : s.crossings) os << 'X' << c.id, list(c.arcs);
    return os.str();
}

Diagram splice_out(const Diagram& d, int node, const std::vector<std::pair<int, int>>& pairs) {
    DiagramView view(d);
    const int deg = view.degree(node);
    std::vector<Label> lab(static_cast<std::size_t>(deg));
    std::vector<int> inner(static_cast<std::size_t>(deg), -1), join(static_cast<std::size_t>(deg), -1);
    for (int s = 0; s < deg; ++s) {
        lab[s] = view.label({node, s});
        Port o = view.other_end({node, s});
        if (o.node == node) inner[s] = o.slot;
    }
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= deg || b >= deg || a == b || join[a] >= 0 || join[b] >= 0)
            throw std::invalid_argument("splice_out: pairs must match the slots perfectly");
        join[a] = b, join[b] = a;
    }
    for (int s = 0; s < deg; ++s)
        if (join[s] < 0) throw std::invalid_argument("splice_out: unpaired slot");

    Diagram out = d;
    if (node < view.vertex_count())
        out.vertices.erase(out.vertices.begin() + node);
    else
        out.crossings.erase(out.crossings.begin() + (node - view.vertex_count()));

    std::unordered_map<Label, Label> rename;
    std::vector<bool> seen(static_cast<std::size_t>(deg), false);
    // paths: start at an outer slot, alternate join / inner-label steps
    for (int s = 0; s < deg; ++s) {
        if (seen[s] || inner[s] >= 0) continue;
        int cur = s;
        seen[cur] = true;
        while (true) {
            int nxt = join[cur];
            seen[nxt] = true;
            if (inner[nxt] < 0) {
                rename[lab[nxt]] = lab[s];
                break;
            }
            cur = inner[nxt];
            seen[cur] = true;
        }
    }
    Label fresh = d.next_label();
    int vid = d.next_vertex_id();
    for (int s = 0; s < deg; ++s) {
        if (seen[s]) continue;
        // closed wire through this node only
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            seen[join[cur]] = true;
            cur = inner[join[cur]];
        }
        out.vertices.push_back({vid++, {fresh, fresh}});
        ++fresh;
    }
    if (!rename.empty()) {
        for (Vertex& v : out.vertices)
            for (Label& l : v.arcs)
                if (auto it = rename.find(l); it != rename.end()) l = it->second;
        for (Crossing& c : out.crossings)
            for (Label& l : c.arcs)
                if (auto it = rename.find(l); it != rename.end()) l = it->second;
    }
    return out;
}

Diagram smooth_crossing(const Diagram& d, int crossing_id, Smoothing kind) {
    DiagramView view(d);
    int node = view.node_of_crossing(crossing_id);
    if (node < 0) throw std::invalid_argument("unknown crossing id " + std::to_string(crossing_id));
    if (kind == Smoothing::Zero) {
        Diagram out = d;
        const Crossing& c = d.crossings[node - view.vertex_count()];
        out.vertices.push_back({d.next_vertex_id(), {c.arcs.begin(), c.arcs.end()}});
        out.crossings.erase(out.crossings.begin() + (node - view.vertex_count()));
        return out;
    }
    if (kind == Smoothing::Plus) return splice_out(d, node, {{0, 1}, {2, 3}});
    return splice_out(d, node, {{1, 2}, {3, 0}});
}

Diagram mirror(const Diagram& d) {
    Diagram out = d;
    for (Crossing& c : out.crossings) std::rotate(c.arcs.begin(), c.arcs.begin() + 1, c.arcs.end());
    return out;
}

AbstractGraph underlying_graph(const Diagram& d) {
    if (!d.crossings.empty()) throw InputError("underlying graph requires a crossing-free diagram");
    DiagramView view(d);
    AbstractGraph g;
    for (const Vertex& v : d.vertices) g.add_vertex(v.id);
    for (int k = 0; k < view.dart_count(); ++k) {
        int o = view.partner(k);
        if (o < k) continue;
        g.add_edge(d.vertices[view.port(k).node].id, d.vertices[view.port(o).node].id);
    }
    return g;
}

}  // namespace sgt
