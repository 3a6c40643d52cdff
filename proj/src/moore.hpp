#pragma once

#include "decorate.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace semcheck {

inline constexpr std::size_t kDefaultCap = 1'000'000;

using Word = std::vector<LabelId>;

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t states, const std::string& pass)
        : std::runtime_error("state cap exceeded" + (pass.empty() ? std::string() : " in " + pass) + " after " +
                             std::to_string(states) + " states"),
          states_(states), pass_(pass)
    {
    }
    std::size_t states() const { return states_; }
    const std::string& pass() const { return pass_; }

private:
    std::size_t states_;
    std::string pass_;
};

// A state of the determinised machine: a set of base states, or top (must only).
struct DetState {
    bool top = false;
    StateSet set;

    static DetState of(StateSet s) { return {false, std::move(s)}; }
    static DetState top_state(std::size_t universe) { return {true, StateSet(universe)}; }

    bool operator==(const DetState& o) const = default;
    std::size_t hash() const { return set.hash() ^ (top ? 0x7f4a7c15ULL : 0); }
};

struct DetStateHash {
    std::size_t operator()(const DetState& s) const { return s.hash(); }
};

DetState join(const DetState& a, const DetState& b);
// Order of the semilattice with top: U ⊑ top always, top ⊑ Z iff Z = top.
bool leq(const DetState& a, const DetState& b);

OutputValue det_output(const DecoratedLts& d, const DetState& x);
DetState det_step(const DecoratedLts& d, const DetState& x, LabelId a);
OutputValue behavior(const DecoratedLts& d, const DetState& x, const Word& w);

// Memoised lazy unfolding for one check.
class Determinizer {
public:
    explicit Determinizer(const DecoratedLts& d, std::size_t cap = kDefaultCap) : d_(d), cap_(cap) {}

    const OutputValue& output(const DetState& x) { return node(x).out; }
    const DetState& step(const DetState& x, LabelId a) { return node(x).row[a]; }
    std::size_t states_built() const { return memo_.size(); }
    const DecoratedLts& system() const { return d_; }

private:
    struct Node {
        OutputValue out;
        std::vector<DetState> row;
    };
    const Node& node(const DetState& x);

    const DecoratedLts& d_;
    std::size_t cap_;
    std::unordered_map<DetState, Node, DetStateHash> memo_;
};

// Dense deterministic Moore machine.
struct ExplicitMachine {
    std::vector<std::string> labels;
    std::vector<std::string> alphabet; // base alphabet, for rendering outputs
    std::vector<OutputValue> outputs;
    std::vector<std::vector<std::uint32_t>> next; // [state][label]
    std::vector<std::uint32_t> inits;
    std::vector<std::string> state_desc;

    std::size_t size() const { return outputs.size(); }
};

OutputValue behavior(const ExplicitMachine& m, std::uint32_t q, const Word& w);

// States are numbered in BFS order from the inits; the empty sink is kept.
ExplicitMachine reachable_machine(const DecoratedLts& d, const std::vector<DetState>& inits,
                                  std::size_t cap = kDefaultCap, std::vector<DetState>* states = nullptr);

std::string describe(const DetState& x, const std::vector<std::string>& names);

struct BisimResult {
    bool equal = false;
    std::vector<std::pair<DetState, DetState>> relation;
    Word counterexample;
    std::size_t states_built = 0;
};

BisimResult naive_bisim(const DecoratedLts& d, const DetState& x, const DetState& y, std::size_t cap = kDefaultCap);

// Coarsest output- and step-respecting partition; block ids by first appearance.
std::vector<std::uint32_t> moore_partition_classes(const ExplicitMachine& m);

bool coarsen_failure_to_ctrace(const ActionSetFamily& failures, ActionMask full);
ActionSetFamily coarsen_ready_to_failure(const ActionSetFamily& ready, ActionMask full);

std::string word_to_string(const Word& w, const std::vector<std::string>& labels);

} // namespace semcheck
