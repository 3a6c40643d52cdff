#include "brzozowski.hpp"

#include <map>

namespace semcheck {

ReverseMachine::ReverseMachine(const DecoratedLts& d, StateSet init) : d_(d), init_(std::move(init)), live_(init_)
{
    std::vector<StateId> work = live_.members();
    while (!work.empty()) {
        StateId x = work.back();
        work.pop_back();
        for (const Row& row : d_.trans[x])
            row.succ.for_each([&](StateId y) {
                if (!live_.contains(y)) {
                    live_.insert(y);
                    work.push_back(y);
                }
            });
    }
}

FunctionState ReverseMachine::initial() const
{
    FunctionState out = d_.output;
    for (StateId x = 0; x < d_.n_states; ++x)
        if (!live_.contains(x)) out[x] = OutputValue::bottom(d_.kind());
    return out;
}

OutputValue ReverseMachine::output(const FunctionState& psi) const
{
    OutputValue v = OutputValue::bottom(d_.kind());
    init_.for_each([&](StateId x) { join_into(v, psi[x]); });
    return v;
}

FunctionState ReverseMachine::step(const FunctionState& psi, LabelId a) const
{
    FunctionState out;
    out.reserve(d_.n_states);
    for (StateId x = 0; x < d_.n_states; ++x) {
        const Row& row = d_.trans[x][a];
        if (!live_.contains(x)) {
            out.push_back(OutputValue::bottom(d_.kind()));
            continue;
        }
        if (row.top) {
            out.push_back(OutputValue::make_top());
            continue;
        }
        OutputValue v = OutputValue::bottom(d_.kind());
        row.succ.for_each([&](StateId y) { join_into(v, psi[y]); });
        out.push_back(std::move(v));
    }
    return out;
}

FunctionState ReverseExplicitMachine::step(const FunctionState& phi, LabelId a) const
{
    FunctionState out;
    out.reserve(m_.size());
    for (std::size_t q = 0; q < m_.size(); ++q) out.push_back(phi[m_.next[q][a]]);
    return out;
}

namespace {

template <class Machine>
ExplicitMachine unfold(const Machine& lazy, const std::vector<std::string>& labels,
                       const std::vector<std::string>& alphabet, std::size_t cap, const char* pass)
{
    ExplicitMachine m;
    m.labels = labels;
    m.alphabet = alphabet;
    std::unordered_map<FunctionState, std::uint32_t, FunctionStateHash> index;
    std::vector<FunctionState> order;
    auto intern = [&](FunctionState f) -> std::uint32_t {
        if (auto it = index.find(f); it != index.end()) return it->second;
        if (order.size() >= cap) throw CapExceeded(order.size(), pass);
        auto id = static_cast<std::uint32_t>(order.size());
        index.emplace(f, id);
        order.push_back(std::move(f));
        return id;
    };
    m.inits.push_back(intern(lazy.initial()));
    for (std::size_t q = 0; q < order.size(); ++q) {
        m.outputs.push_back(lazy.output(order[q]));
        std::vector<std::uint32_t> row;
        row.reserve(labels.size());
        for (LabelId a = 0; a < labels.size(); ++a) row.push_back(intern(lazy.step(order[q], a)));
        m.next.push_back(std::move(row));
        m.state_desc.push_back("q" + std::to_string(q));
    }
    return m;
}

} // namespace

ExplicitMachine reverse_determinize(const DecoratedLts& d, const StateSet& init, std::size_t cap)
{
    return unfold(ReverseMachine(d, init), d.labels, d.base_alphabet, cap, "first reversal");
}

ExplicitMachine reverse_determinize_moore(const ExplicitMachine& m, std::uint32_t init, std::size_t cap)
{
    return unfold(ReverseExplicitMachine(m, init), m.labels, m.alphabet, cap, "second reversal");
}

ExplicitMachine brzozowski_minimize(const DecoratedLts& d, const StateSet& init, std::size_t cap,
                                    BrzozowskiStats* stats)
{
    ExplicitMachine mid = reverse_determinize(d, init, cap);
    ExplicitMachine out = reverse_determinize_moore(mid, mid.inits[0], cap);
    if (stats) {
        stats->intermediate_states += mid.size();
        stats->final_states += out.size();
    }
    return out;
}

bool moore_isomorphic(const ExplicitMachine& a, std::uint32_t ia, const ExplicitMachine& b, std::uint32_t ib)
{
    if (a.labels != b.labels) throw std::invalid_argument("moore_isomorphic: machines have different alphabets");
    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> fwd(a.size(), kNone), bwd(b.size(), kNone);
    std::vector<std::uint32_t> work{ia};
    fwd[ia] = ib;
    bwd[ib] = ia;
    std::size_t paired = 1;
    while (!work.empty()) {
        std::uint32_t p = work.back();
        work.pop_back();
        std::uint32_t q = fwd[p];
        if (!(a.outputs[p] == b.outputs[q])) return false;
        for (LabelId l = 0; l < a.labels.size(); ++l) {
            std::uint32_t p2 = a.next[p][l], q2 = b.next[q][l];
            if (fwd[p2] == kNone && bwd[q2] == kNone) {
                fwd[p2] = q2;
                bwd[q2] = p2;
                ++paired;
                work.push_back(p2);
            } else if (fwd[p2] != q2 || bwd[q2] != p2) {
                return false;
            }
        }
    }
    // Both machines must be covered entirely for the pairing to be a bijection.
    return paired == a.size() && paired == b.size();
}

std::optional<Word> distinguishing_word(const ExplicitMachine& a, std::uint32_t ia, const ExplicitMachine& b,
                                        std::uint32_t ib)
{
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::size_t, LabelId>> parent;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order{{ia, ib}};
    parent[{ia, ib}] = {SIZE_MAX, 0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [p, q] = order[i];
        if (!(a.outputs[p] == b.outputs[q])) {
            Word w;
            for (auto k = i; parent[order[k]].first != SIZE_MAX; k = parent[order[k]].first)
                w.insert(w.begin(), parent[order[k]].second);
            return w;
        }
        for (LabelId l = 0; l < a.labels.size(); ++l) {
            std::pair<std::uint32_t, std::uint32_t> nxt{a.next[p][l], b.next[q][l]};
            if (parent.emplace(nxt, std::make_pair(i, l)).second) order.push_back(nxt);
        }
    }
    return std::nullopt;
}

bool equiv_via_minimization(const DecoratedLts& d, StateId x, StateId y, std::size_t cap, BrzozowskiStats* stats)
{
    auto mx = brzozowski_minimize(d, StateSet::singleton(d.n_states, x), cap, stats);
    auto my = brzozowski_minimize(d, StateSet::singleton(d.n_states, y), cap, stats);
    return moore_isomorphic(mx, mx.inits[0], my, my.inits[0]);
}

} // namespace semcheck
