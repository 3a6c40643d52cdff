#pragma once

#include "family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semcheck {

enum class Semantics {
    language,
    trace,
    ctrace,
    ready,
    failure,
    pfutures,
    rtrace,
    ftrace,
    may,
    must,
    g_ready,
    g_failure,
    g_mfailure,
    g_trace,
    g_mtrace,
};

std::optional<Semantics> parse_semantics(std::string_view s);
const char* to_string(Semantics s);
bool is_probabilistic(Semantics s);
bool allows_tau(Semantics s);
OutputKind output_kind(Semantics s);
std::vector<Semantics> lts_semantics();

// Downset-valued semantics materialise families of up to 2^|A| members.
inline constexpr std::size_t kMaxDownsetAlphabet = 16;

class SemanticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Row {
    StateSet succ;
    bool top = false; // divergence marker, must only
};

struct DecoratedLts {
    Semantics sem = Semantics::trace;
    std::size_t n_states = 0;
    std::vector<std::string> labels;       // effective alphabet, display form
    std::vector<std::string> base_alphabet; // the visible alphabet of the source system
    std::vector<std::string> names;         // state display names, may be empty
    ActionMask full = 0;                    // full mask over base_alphabet
    std::vector<std::vector<Row>> trans;    // [state][effective label]
    std::vector<OutputValue> output;

    OutputKind kind() const { return output_kind(sem); }
    std::size_t n_labels() const { return labels.size(); }
};

struct LabelPair {
    LabelId action;
    ActionMask ready;
};

struct RelabelledLts {
    Lts lts; // alphabet holds display strings "<a,{b,c}>"
    std::vector<LabelPair> pairs;
};

// Relabel every a-transition of x with the pair <a, I(x)>. Only occurring
// pairs become labels, ordered by (action, ready mask).
RelabelledLts relabel_for_trace_decorations(const Lts& lts);

// Class ids such that class(x) == class(y) iff x and y have the same traces.
std::vector<std::uint32_t> trace_class_of(const Lts& lts, std::size_t cap);

DecoratedLts decorate(const Lts& lts, Semantics sem, std::size_t cap = 1'000'000);

} // namespace semcheck
