#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/yamada.hpp"

namespace sgt {

struct ArchNode {
    std::string id;
    std::vector<std::string> ports;  // cyclic order when fixed_port_order is set
    bool fixed_port_order = false;
};

struct ArchEndpoint {
    std::string node;
    std::string port;
};

struct ArchEdge {
    std::string id;
    ArchEndpoint from, to;
};

// Components with ports and port-to-port interconnects.
struct SystemArchitecture {
    EquivalenceMode model = EquivalenceMode::Pliable;
    std::vector<ArchNode> nodes;
    std::vector<ArchEdge> edges;

    int node_index(std::string_view id) const;  // -1 if absent
    int port_index(int node, std::string_view port) const;
};

// Throws InputError naming the offending field.
void validate(const SystemArchitecture& arch);
SystemArchitecture parse_architecture(std::string_view json_text);
std::string architecture_to_json(const SystemArchitecture& arch);

}  // namespace sgt
