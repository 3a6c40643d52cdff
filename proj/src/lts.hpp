#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semcheck {

using StateId = std::uint32_t;
using LabelId = std::size_t;
// Bit i stands for the i-th label of the visible alphabet.
using ActionMask = std::uint32_t;

inline constexpr std::size_t kMaxAlphabet = 32;
inline constexpr std::string_view kTau = "tau";

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Extensional set of states over a fixed universe 0..universe-1.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static StateSet singleton(std::size_t universe, StateId x)
    {
        StateSet s(universe);
        s.insert(x);
        return s;
    }

    std::size_t universe() const { return n_; }

    void insert(StateId x) { w_[x >> 6] |= std::uint64_t{1} << (x & 63); }
    bool contains(StateId x) const { return (w_[x >> 6] >> (x & 63)) & 1u; }

    bool empty() const
    {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    std::size_t size() const
    {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    StateSet& operator|=(const StateSet& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool subset_of(const StateSet& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<StateId>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<StateId> members() const
    {
        std::vector<StateId> out;
        for_each([&](StateId x) { out.push_back(x); });
        return out;
    }

    bool operator==(const StateSet& o) const = default;

    std::size_t hash() const
    {
        std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : w_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

// Finite LTS. Label index alphabet.size() is the internal action.
struct Lts {
    std::size_t n_states = 0;
    std::vector<std::string> alphabet;
    std::vector<std::vector<StateSet>> trans; // [state][label], label == tau() for tau
    std::optional<StateSet> finals;
    std::vector<std::string> names; // empty when the system has no names line

    Lts() = default;
    Lts(std::size_t n, std::vector<std::string> labels);

    LabelId tau() const { return alphabet.size(); }
    ActionMask full_mask() const
    {
        return alphabet.size() >= 32 ? ~ActionMask{0} : ((ActionMask{1} << alphabet.size()) - 1);
    }

    void add(StateId src, LabelId label, StateId dst) { trans[src][label].insert(dst); }
    const StateSet& succ(StateId x, LabelId label) const { return trans[x][label]; }
    bool has_tau() const;

    std::optional<LabelId> label_index(std::string_view token) const;
    // Display names win over numeric indices when both could match.
    std::optional<StateId> resolve_state(std::string_view token) const;
    std::string state_name(StateId x) const;

    bool operator==(const Lts& o) const = default;
};

Lts parse_lts(std::string_view text);
std::string to_text(const Lts& lts);

bool valid_token(std::string_view token);

// Tau-aware primitives.
StateSet tau_closure(const Lts& lts, const StateSet& from);
StateSet weak_successors(const Lts& lts, StateId x, LabelId a);
std::vector<bool> divergent_states(const Lts& lts);
bool diverges(const Lts& lts, StateId x);
bool converges_on(const Lts& lts, StateId x, const std::vector<LabelId>& word);

ActionMask initial_actions(const Lts& lts, StateId x);
// Weak variant used by must testing: an action whose weak entry is the
// divergence marker counts as enabled.
ActionMask weak_initial_actions(const Lts& lts, StateId x);

std::string mask_to_string(ActionMask m, const std::vector<std::string>& alphabet);

} // namespace semcheck
