#include <json.hpp>
#include <map>
#include <sstream>

#include "sgt/enumerate.hpp"

namespace sgt {

using nlohmann::ordered_json;

std::string report_to_json(const ClassReport& report) {
    ordered_json doc;
    doc["mode"] = to_string(report.mode);
    if (!report.generator.empty()) doc["generator"] = report.generator;
    if (report.max_crossings >= 0) doc["max_crossings"] = report.max_crossings;
    std::size_t candidates = 0, planar = 0, shadows = 0;
    for (const KCount& k : report.per_k) {
        candidates += k.candidates;
        planar += k.planar;
        shadows += k.shadows;
    }
    std::size_t nondegenerate = 0;
    for (const YamadaClass& c : report.classes) nondegenerate += !c.degenerate;
    doc["totals"] = {{"candidates", candidates},
                     {"planar_candidates", planar},
                     {"shadows", shadows},
                     {"diagrams", report.diagrams},
                     {"classes", nondegenerate},
                     {"degenerate_diagrams", report.degenerate_members()}};
    doc["per_k"] = ordered_json::array();
    for (const KCount& k : report.per_k)
        doc["per_k"].push_back({{"k", k.k},
                                {"candidates", k.candidates},
                                {"planar_candidates", k.planar},
                                {"shadows", k.shadows},
                                {"diagrams", k.diagrams}});
    doc["classes"] = ordered_json::array();
    int id = 0;
    for (const YamadaClass& c : report.classes) {
        std::map<int, std::size_t> by_k;
        for (const ClassMember& m : c.members) ++by_k[m.crossings];
        ordered_json counts = ordered_json::object();
        for (auto [k, n] : by_k) counts[std::to_string(k)] = n;
        doc["classes"].push_back({{"id", ++id},
                                  {"degenerate", c.degenerate},
                                  {"polynomial", c.key.to_string()},
                                  {"min_crossings", c.min_crossings},
                                  {"member_count", c.members.size()},
                                  {"members_by_crossings", counts},
                                  {"representative", c.representative},
                                  {"representative_polynomial", c.representative_raw.to_string()},
                                  {"representative_pd", c.representative_pd}});
    }
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const ClassReport& report) {
    std::ostringstream out;
    out << "class_id,polynomial,min_crossings,member_count,degenerate\n";
    int id = 0;
    for (const YamadaClass& c : report.classes)
        out << ++id << ',' << c.key.to_string() << ',' << c.min_crossings << ',' << c.members.size() << ','
            << (c.degenerate ? "true" : "false") << '\n';
    return out.str();
}

std::string to_dot(const Diagram& d, const std::string& name) {
    DiagramView view(d);
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    out << "  node [shape=circle];\n";
    for (const Vertex& v : d.vertices) out << "  v" << v.id << " [label=\"" << v.id << "\"];\n";
    for (const Crossing& x : d.crossings)
        out << "  x" << x.id << " [shape=point, xlabel=\"X" << x.id << "\"];\n";
    auto name_of = [&](int node) {
        return (view.is_crossing(node) ? "x" : "v") + std::to_string(view.node_id(node));
    };
    for (int k = 0; k < view.dart_count(); ++k) {
        if (view.partner(k) < k) continue;
        Port a = view.port(k), b = view.port(view.partner(k));
        out << "  " << name_of(a.node) << " -- " << name_of(b.node) << " [label=\"" << view.label(a) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sgt
