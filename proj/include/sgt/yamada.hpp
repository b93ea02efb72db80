#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "sgt/diagram.hpp"
#include "sgt/laurent.hpp"

namespace sgt {

enum class EquivalenceMode { Pliable, Flat, Ribbon };

std::string to_string(EquivalenceMode mode);
EquivalenceMode parse_mode(std::string_view text);  // InputError on unknown names

// Skein recursion R = A R(s+) + A^-1 R(s-) + R(s0) with disjoint-union and
// wedge splitting, ending in H of the crossing-free state. Memoized per
// thread by canonical PD text.
LaurentPoly yamada(const Diagram& d);
// Same recursion without the memo; `pick(k)` selects which of the k
// remaining crossings (in storage order) to resolve next.
LaurentPoly yamada(const Diagram& d, const std::function<int(int)>& pick);

// Direct sum over all 3^k states; std::invalid_argument if k > max_crossings.
LaurentPoly yamada_statesum(const Diagram& d, int max_crossings = 12);

// Ribbon: unchanged. Flat/pliable: multiplied by (-A)^(-min_degree) so that
// the lowest term sits at A^0; zero stays zero.
LaurentPoly canonicalize(const LaurentPoly& p, EquivalenceMode mode);
bool equivalent(const LaurentPoly& p, const LaurentPoly& q, EquivalenceMode mode);

void clear_yamada_cache();

}  // namespace sgt
