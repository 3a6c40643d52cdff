#pragma once

#include "moore.hpp"

#include <optional>

namespace semcheck {

// Coordinates indexed by base states (first reversal) or by states of an
// explicit machine (second reversal).
using FunctionState = std::vector<OutputValue>;

struct FunctionStateHash {
    std::size_t operator()(const FunctionState& f) const
    {
        std::size_t h = f.size();
        for (const auto& v : f) h = h * 1000003u ^ v.hash();
        return h;
    }
};

// Lazy machine over B^S: initial state o, output ⊔_{x∈I} ψ(x),
// step(ψ)(a)(x) = ⊔_{y∈t(x)(a)} ψ(y), top when t(x)(a) is the divergence marker.
class ReverseMachine {
public:
    // Coordinates of states not forward-reachable from init never reach the
    // output; they are held at bottom.
    ReverseMachine(const DecoratedLts& d, StateSet init);

    FunctionState initial() const;
    OutputValue output(const FunctionState& psi) const;
    FunctionState step(const FunctionState& psi, LabelId a) const;

private:
    const DecoratedLts& d_;
    StateSet init_;
    StateSet live_;
};

// Lazy machine over B^Q for an explicit machine m pointed at init:
// initial state = m.outputs, output φ(init), step(φ)(a)(q) = φ(m.next[q][a]).
class ReverseExplicitMachine {
public:
    ReverseExplicitMachine(const ExplicitMachine& m, std::uint32_t init) : m_(m), init_(init) {}

    FunctionState initial() const { return m_.outputs; }
    OutputValue output(const FunctionState& phi) const { return phi[init_]; }
    FunctionState step(const FunctionState& phi, LabelId a) const;

private:
    const ExplicitMachine& m_;
    std::uint32_t init_;
};

// Reachable parts of the two lazy machines, in BFS order from the initial state.
ExplicitMachine reverse_determinize(const DecoratedLts& d, const StateSet& init, std::size_t cap = kDefaultCap);
ExplicitMachine reverse_determinize_moore(const ExplicitMachine& m, std::uint32_t init, std::size_t cap = kDefaultCap);

struct BrzozowskiStats {
    std::size_t intermediate_states = 0;
    std::size_t final_states = 0;
};

ExplicitMachine brzozowski_minimize(const DecoratedLts& d, const StateSet& init, std::size_t cap = kDefaultCap,
                                    BrzozowskiStats* stats = nullptr);

// Synchronous traversal from the two initial states; requires a bijection
// preserving outputs and steps. Throws std::invalid_argument on label mismatch.
bool moore_isomorphic(const ExplicitMachine& a, std::uint32_t ia, const ExplicitMachine& b, std::uint32_t ib);

// Shortest word on which the two pointed machines produce different outputs.
std::optional<Word> distinguishing_word(const ExplicitMachine& a, std::uint32_t ia, const ExplicitMachine& b,
                                        std::uint32_t ib);

bool equiv_via_minimization(const DecoratedLts& d, StateId x, StateId y, std::size_t cap = kDefaultCap,
                            BrzozowskiStats* stats = nullptr);

} // namespace semcheck
