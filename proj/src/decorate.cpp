#include "decorate.hpp"

#include "moore.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace semcheck {

namespace {

struct SemInfo {
    Semantics sem;
    const char* name;
};

constexpr std::array<SemInfo, 15> kSemantics{{
    {Semantics::language, "language"},
    {Semantics::trace, "trace"},
    {Semantics::ctrace, "ctrace"},
    {Semantics::ready, "ready"},
    {Semantics::failure, "failure"},
    {Semantics::pfutures, "pfutures"},
    {Semantics::rtrace, "rtrace"},
    {Semantics::ftrace, "ftrace"},
    {Semantics::may, "may"},
    {Semantics::must, "must"},
    {Semantics::g_ready, "g_ready"},
    {Semantics::g_failure, "g_failure"},
    {Semantics::g_mfailure, "g_mfailure"},
    {Semantics::g_trace, "g_trace"},
    {Semantics::g_mtrace, "g_mtrace"},
}};

} // namespace

std::optional<Semantics> parse_semantics(std::string_view s)
{
    for (const auto& info : kSemantics)
        if (s == info.name) return info.sem;
    return std::nullopt;
}

const char* to_string(Semantics s)
{
    for (const auto& info : kSemantics)
        if (info.sem == s) return info.name;
    return "?";
}

bool is_probabilistic(Semantics s)
{
    return s >= Semantics::g_ready;
}

bool allows_tau(Semantics s)
{
    return s == Semantics::may || s == Semantics::must;
}

std::vector<Semantics> lts_semantics()
{
    std::vector<Semantics> out;
    for (const auto& info : kSemantics)
        if (!is_probabilistic(info.sem)) out.push_back(info.sem);
    return out;
}

OutputKind output_kind(Semantics s)
{
    switch (s) {
    case Semantics::ready:
    case Semantics::failure:
    case Semantics::rtrace:
    case Semantics::ftrace: return OutputKind::Family;
    case Semantics::must: return OutputKind::TopOrFamily;
    case Semantics::pfutures: return OutputKind::ClassSet;
    default: return OutputKind::Bit;
    }
}

RelabelledLts relabel_for_trace_decorations(const Lts& lts)
{
    std::vector<ActionMask> ready(lts.n_states);
    std::map<std::pair<LabelId, ActionMask>, LabelId> index;
    for (StateId x = 0; x < lts.n_states; ++x) {
        ready[x] = initial_actions(lts, x);
        for (LabelId a = 0; a < lts.alphabet.size(); ++a)
            if (!lts.succ(x, a).empty()) index.emplace(std::make_pair(a, ready[x]), 0);
    }

    RelabelledLts out;
    std::vector<std::string> labels;
    for (auto& [key, id] : index) {
        id = labels.size();
        out.pairs.push_back({key.first, key.second});
        labels.push_back("<" + lts.alphabet[key.first] + "," + mask_to_string(key.second, lts.alphabet) + ">");
    }
    out.lts = Lts(lts.n_states, std::move(labels));
    out.lts.names = lts.names;
    for (StateId x = 0; x < lts.n_states; ++x)
        for (LabelId a = 0; a < lts.alphabet.size(); ++a) {
            const StateSet& s = lts.succ(x, a);
            if (!s.empty()) out.lts.trans[x][index.at({a, ready[x]})] = s;
        }
    return out;
}

std::vector<std::uint32_t> trace_class_of(const Lts& lts, std::size_t cap)
{
    DecoratedLts d = decorate(lts, Semantics::trace, cap);
    std::vector<DetState> inits;
    for (StateId x = 0; x < lts.n_states; ++x) inits.push_back(DetState::of(StateSet::singleton(lts.n_states, x)));
    ExplicitMachine m = reachable_machine(d, inits, cap);
    auto blocks = moore_partition_classes(m);
    std::vector<std::uint32_t> cls(lts.n_states);
    for (StateId x = 0; x < lts.n_states; ++x) cls[x] = blocks[m.inits[x]];
    return cls;
}

namespace {

DecoratedLts skeleton(const Lts& lts, Semantics sem)
{
    DecoratedLts d;
    d.sem = sem;
    d.n_states = lts.n_states;
    d.base_alphabet = lts.alphabet;
    d.full = lts.full_mask();
    d.labels = lts.alphabet;
    d.names = lts.names;
    return d;
}

void copy_strong_rows(DecoratedLts& d, const Lts& lts)
{
    d.trans.assign(lts.n_states, std::vector<Row>(lts.alphabet.size()));
    for (StateId x = 0; x < lts.n_states; ++x)
        for (LabelId a = 0; a < lts.alphabet.size(); ++a) d.trans[x][a].succ = lts.succ(x, a);
}

DecoratedLts decorate_must(const Lts& lts)
{
    DecoratedLts d = skeleton(lts, Semantics::must);
    const std::size_t n = lts.n_states;
    auto div = divergent_states(lts);

    d.trans.assign(n, std::vector<Row>(lts.alphabet.size()));
    for (StateId x = 0; x < n; ++x)
        for (LabelId a = 0; a < lts.alphabet.size(); ++a) {
            Row& r = d.trans[x][a];
            r.succ = weak_successors(lts, x, a);
            bool converges = !div[x];
            r.succ.for_each([&](StateId y) { converges = converges && !div[y]; });
            if (!converges) {
                r.top = true;
                r.succ = StateSet(n);
            }
        }

    // Non-divergent states have an acyclic tau graph below them, so the
    // recursion through tau-successors terminates.
    std::vector<std::optional<OutputValue>> memo(n);
    std::function<OutputValue(StateId)> out = [&](StateId x) -> OutputValue {
        if (memo[x]) return *memo[x];
        OutputValue v;
        if (div[x]) {
            v = OutputValue::make_top();
        } else if (const StateSet& t = lts.succ(x, lts.tau()); !t.empty()) {
            v = OutputValue::bottom(OutputKind::TopOrFamily);
            t.for_each([&](StateId y) { join_into(v, out(y)); });
        } else {
            v = OutputValue::make_top_or_family(fail_of_initials(weak_initial_actions(lts, x), lts.full_mask()));
        }
        memo[x] = v;
        return v;
    };
    for (StateId x = 0; x < n; ++x) d.output.push_back(out(x));
    return d;
}

} // namespace

DecoratedLts decorate(const Lts& lts, Semantics sem, std::size_t cap)
{
    if (is_probabilistic(sem))
        throw SemanticsError(std::string("semantics ") + to_string(sem) + " applies to GPS inputs only");
    if (!allows_tau(sem) && lts.has_tau())
        throw SemanticsError(std::string("semantics ") + to_string(sem) + " is strong and the system has tau transitions");
    if ((sem == Semantics::failure || sem == Semantics::ftrace || sem == Semantics::must) &&
        lts.alphabet.size() > kMaxDownsetAlphabet)
        throw SemanticsError(std::string("semantics ") + to_string(sem) + " supports at most " +
                             std::to_string(kMaxDownsetAlphabet) + " visible labels");

    const std::size_t n = lts.n_states;
    switch (sem) {
    case Semantics::must: return decorate_must(lts);
    case Semantics::may: {
        DecoratedLts d = skeleton(lts, sem);
        d.trans.assign(n, std::vector<Row>(lts.alphabet.size()));
        for (StateId x = 0; x < n; ++x)
            for (LabelId a = 0; a < lts.alphabet.size(); ++a) d.trans[x][a].succ = weak_successors(lts, x, a);
        d.output.assign(n, OutputValue::make_bit(true));
        return d;
    }
    case Semantics::rtrace:
    case Semantics::ftrace: {
        RelabelledLts r = relabel_for_trace_decorations(lts);
        DecoratedLts d = skeleton(lts, sem);
        d.labels = r.lts.alphabet;
        copy_strong_rows(d, r.lts);
        for (StateId x = 0; x < n; ++x) {
            ActionMask i = initial_actions(lts, x);
            d.output.push_back(OutputValue::make_family(sem == Semantics::rtrace ? ActionSetFamily{i}
                                                                                   : fail_of_initials(i, d.full)));
        }
        return d;
    }
    default: break;
    }

    DecoratedLts d = skeleton(lts, sem);
    copy_strong_rows(d, lts);
    switch (sem) {
    case Semantics::language:
        if (!lts.finals) throw SemanticsError("language semantics requires a 'final' line");
        for (StateId x = 0; x < n; ++x) d.output.push_back(OutputValue::make_bit(lts.finals->contains(x)));
        break;
    case Semantics::trace: d.output.assign(n, OutputValue::make_bit(true)); break;
    case Semantics::ctrace:
        for (StateId x = 0; x < n; ++x) d.output.push_back(OutputValue::make_bit(initial_actions(lts, x) == 0));
        break;
    case Semantics::ready:
        for (StateId x = 0; x < n; ++x) d.output.push_back(OutputValue::make_family({initial_actions(lts, x)}));
        break;
    case Semantics::failure:
        for (StateId x = 0; x < n; ++x) d.output.push_back(OutputValue::make_family(fail_sets(lts, x)));
        break;
    case Semantics::pfutures: {
        auto cls = trace_class_of(lts, cap);
        for (StateId x = 0; x < n; ++x) d.output.push_back(OutputValue::make_classes({cls[x]}));
        break;
    }
    default: throw SemanticsError("unhandled semantics");
    }
    return d;
}

} // namespace semcheck
