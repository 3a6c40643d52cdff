#pragma once

#include "moore.hpp"

#include <utility>
#include <vector>

namespace semcheck {

using CongruenceBasis = std::vector<std::pair<DetState, DetState>>;

// Normal form of z under the rewriting rules induced by the basis.
DetState saturate(const CongruenceBasis& basis, DetState z);
bool in_congruence(const CongruenceBasis& basis, const DetState& x, const DetState& y);

struct HkcReport {
    bool equal = false;
    CongruenceBasis relation;
    std::size_t pairs_processed = 0;
    Word counterexample;
    double wall_ms = 0;
    std::size_t states_built = 0;
};

HkcReport hkc_check(const DecoratedLts& d, const DetState& x, const DetState& y, std::size_t cap = kDefaultCap);

// must: x ⊑ y iff {x,y} ~ {x}; may: x ⊑ y iff {x,y} ~ {y}.
HkcReport preorder_check(const DecoratedLts& d, StateId x, StateId y, std::size_t cap = kDefaultCap);

} // namespace semcheck
