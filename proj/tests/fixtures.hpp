#pragma once
// Hand-built diagrams for the worked examples.

#include "sgt/diagram.hpp"

namespace sgt::fixtures {

inline Diagram theta() { return parse_pd("V1[1,2,3] V2[3,2,1]"); }

// Theta with one edge pair twisted at a vertex (one R6 twist away from theta).
inline Diagram twisted_theta() { return parse_pd("V1[4,1,0] V2[4,3,2] X1[0,1,2,3]"); }

// Handcuff graph whose two loops form a Hopf link.
inline Diagram hopf_handcuff() { return parse_pd("V1[0,4,6] V2[2,6,5] X1[2,1,3,0] X2[1,5,4,3]"); }

// Theta with two of its edges clasped: three crossings.
inline Diagram clasped_theta() {
    return parse_pd("V1[8,0,2] V2[8,7,6] X1[4,1,5,0] X2[1,4,6,3] X3[2,5,3,7]");
}

// The doubled square: 4 trivalent nodes, two double edges and two single edges.
inline Diagram doubled_square() { return parse_pd("V1[1,2,3] V2[2,1,4] V3[4,5,6] V4[5,3,6]"); }

inline Diagram k4() { return parse_pd("V1[1,2,3] V2[1,4,5] V3[2,5,6] V4[3,6,4]"); }

}  // namespace sgt::fixtures
