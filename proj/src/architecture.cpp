#include "sgt/architecture.hpp"

#include <json.hpp>
#include <map>

#include "sgt/errors.hpp"

namespace sgt {

using nlohmann::json;

int SystemArchitecture::node_index(std::string_view id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].id == id) return static_cast<int>(i);
    return -1;
}

int SystemArchitecture::port_index(int node, std::string_view port) const {
    const auto& ports = nodes[node].ports;
    for (std::size_t i = 0; i < ports.size(); ++i)
        if (ports[i] == port) return static_cast<int>(i);
    return -1;
}

void validate(const SystemArchitecture& arch) {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < arch.nodes.size(); ++i) {
        const ArchNode& n = arch.nodes[i];
        std::string where = "nodes[" + std::to_string(i) + "]";
        if (n.id.empty()) throw InputError(where + ".id: empty node id");
        if (!ids.insert(n.id).second) throw InputError(where + ".id: duplicate node id '" + n.id + "'");
        std::set<std::string> ports(n.ports.begin(), n.ports.end());
        if (ports.size() != n.ports.size()) throw InputError(where + ".ports: duplicate port in node '" + n.id + "'");
        if (arch.model != EquivalenceMode::Pliable && !n.fixed_port_order)
            throw InputError(where + ".fixed_port_order: must be true in " + to_string(arch.model) + " mode");
    }
    ids.clear();
    std::map<std::pair<int, int>, std::string> used;
    for (std::size_t i = 0; i < arch.edges.size(); ++i) {
        const ArchEdge& e = arch.edges[i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (e.id.empty()) throw InputError(where + ".id: empty edge id");
        if (!ids.insert(e.id).second) throw InputError(where + ".id: duplicate edge id '" + e.id + "'");
        for (const auto* ep : {&e.from, &e.to}) {
            std::string field = where + (ep == &e.from ? ".from" : ".to");
            int n = arch.node_index(ep->node);
            if (n < 0) throw InputError(field + ": unknown node '" + ep->node + "'");
            int p = arch.port_index(n, ep->port);
            if (p < 0) throw InputError(field + ": node '" + ep->node + "' has no port '" + ep->port + "'");
            auto [it, fresh] = used.emplace(std::make_pair(n, p), e.id);
            if (!fresh)
                throw InputError(field + ": port " + ep->node + "." + ep->port + " already used by edge '" +
                                 it->second + "'");
        }
    }
    for (std::size_t n = 0; n < arch.nodes.size(); ++n)
        for (std::size_t p = 0; p < arch.nodes[n].ports.size(); ++p)
            if (!used.count({static_cast<int>(n), static_cast<int>(p)}))
                throw InputError("nodes[" + std::to_string(n) + "].ports: port '" + arch.nodes[n].ports[p] +
                                 "' is not connected");
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(where + "." + key + ": missing field");
    return obj.at(key);
}

std::string as_string(const json& v, const std::string& field) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InputError(field + ": expected a string");
}

ArchEndpoint as_endpoint(const json& v, const std::string& field) {
    if (v.is_array() && v.size() == 2) return {as_string(v[0], field + "[0]"), as_string(v[1], field + "[1]")};
    if (v.is_object()) return {as_string(require(v, "node", field), field + ".node"), as_string(require(v, "port", field), field + ".port")};
    throw InputError(field + ": expected [node, port]");
}

}  // namespace

SystemArchitecture parse_architecture(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("architecture JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("architecture JSON: top level must be an object");
    SystemArchitecture arch;
    if (doc.contains("model")) {
        const json& m = doc.at("model");
        if (!m.is_string()) throw InputError("model: expected a string");
        arch.model = parse_mode(m.get<std::string>());
    }
    const json& nodes = require(doc, "nodes", "architecture");
    if (!nodes.is_array()) throw InputError("nodes: expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::string where = "nodes[" + std::to_string(i) + "]";
        const json& n = nodes[i];
        ArchNode node;
        node.id = as_string(require(n, "id", where), where + ".id");
        const json& ports = require(n, "ports", where);
        if (!ports.is_array()) throw InputError(where + ".ports: expected an array");
        for (std::size_t p = 0; p < ports.size(); ++p)
            node.ports.push_back(as_string(ports[p], where + ".ports[" + std::to_string(p) + "]"));
        if (n.contains("fixed_port_order")) {
            if (!n.at("fixed_port_order").is_boolean()) throw InputError(where + ".fixed_port_order: expected a boolean");
            node.fixed_port_order = n.at("fixed_port_order").get<bool>();
        }
        arch.nodes.push_back(std::move(node));
    }
    const json& edges = require(doc, "edges", "architecture");
    if (!edges.is_array()) throw InputError("edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        ArchEdge edge;
        edge.id = as_string(require(e, "id", where), where + ".id");
        edge.from = as_endpoint(require(e, "from", where), where + ".from");
        edge.to = as_endpoint(require(e, "to", where), where + ".to");
        arch.edges.push_back(std::move(edge));
    }
    validate(arch);
    return arch;
}

std::string architecture_to_json(const SystemArchitecture& arch) {
    json doc;
    doc["model"] = to_string(arch.model);
    doc["nodes"] = json::array();
    for (const ArchNode& n : arch.nodes)
        doc["nodes"].push_back({{"id", n.id}, {"ports", n.ports}, {"fixed_port_order", n.fixed_port_order}});
    doc["edges"] = json::array();
    for (const ArchEdge& e : arch.edges)
        doc["edges"].push_back({{"id", e.id}, {"from", {e.from.node, e.from.port}}, {"to", {e.to.node, e.to.port}}});
    return doc.dump(2) + "\n";
}

}  // namespace sgt
