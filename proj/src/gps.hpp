#pragma once

#include "decorate.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace semcheck {

using Rational = mpq_class;

struct Gps {
    std::size_t n_states = 0;
    std::vector<std::string> alphabet;
    // [state][label] -> sorted (target, probability) list, probabilities in (0,1]
    std::vector<std::vector<std::vector<std::pair<StateId, Rational>>>> trans;
    std::vector<std::string> names;

    Gps() = default;
    Gps(std::size_t n, std::vector<std::string> labels);

    ActionMask full_mask() const { return (ActionMask{1} << alphabet.size()) - 1; }
    std::optional<StateId> resolve_state(std::string_view token) const;
    std::string state_name(StateId x) const;
    Rational row_mass(StateId x) const;
    ActionMask initial_actions(StateId x) const;
};

Gps parse_gps(std::string_view text);
std::string to_text(const Gps& g);

// Dense vector over states; genuine distributions are non-negative with mass <= 1.
using Distribution = std::vector<Rational>;

Distribution point(const Gps& g, StateId x);
Rational mass(const Distribution& v);

// Either a scalar (g_trace, g_mtrace) or a map from action sets to values
// storing only non-zero entries.
struct GpsOutput {
    bool scalar = true;
    Rational value = 0;
    std::map<ActionMask, Rational> family;

    bool is_zero() const;
    bool operator==(const GpsOutput& o) const { return scalar == o.scalar && value == o.value && family == o.family; }
    std::string to_string(const std::vector<std::string>& alphabet) const;
};

std::vector<GpsOutput> gps_decorate(const Gps& g, Semantics sem);
Distribution gps_det_step(const Gps& g, const Distribution& v, LabelId a);
GpsOutput gps_det_output(const std::vector<GpsOutput>& decoration, const Distribution& v);

struct GpsEquivResult {
    bool equal = false;
    std::vector<LabelId> counterexample;
    std::size_t basis_size = 0;
};

GpsEquivResult gps_equiv(const Gps& g, Semantics sem, StateId x, StateId y);

Rational ready_to_trace_collapse(const GpsOutput& ready);
GpsOutput failure_from_ready(const GpsOutput& ready, ActionMask full);
GpsOutput mfailure_from_ready(const GpsOutput& ready, ActionMask full);

} // namespace semcheck
