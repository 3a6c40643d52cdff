#include "moore.hpp"

#include <deque>
#include <map>
#include <unordered_set>

namespace semcheck {

DetState join(const DetState& a, const DetState& b)
{
    if (a.top || b.top) return DetState::top_state(a.set.universe());
    DetState r = a;
    r.set |= b.set;
    return r;
}

bool leq(const DetState& a, const DetState& b)
{
    if (b.top) return true;
    if (a.top) return false;
    return a.set.subset_of(b.set);
}

OutputValue det_output(const DecoratedLts& d, const DetState& x)
{
    if (x.top) {
        if (d.kind() != OutputKind::TopOrFamily) throw VariantMismatch("top state outside must semantics");
        return OutputValue::make_top();
    }
    OutputValue v = OutputValue::bottom(d.kind());
    x.set.for_each([&](StateId s) { join_into(v, d.output[s]); });
    return v;
}

DetState det_step(const DecoratedLts& d, const DetState& x, LabelId a)
{
    if (a >= d.n_labels()) throw std::out_of_range("det_step: unknown label " + std::to_string(a));
    if (x.top) return x;
    DetState r = DetState::of(StateSet(d.n_states));
    bool top = false;
    x.set.for_each([&](StateId s) {
        const Row& row = d.trans[s][a];
        top = top || row.top;
        r.set |= row.succ;
    });
    if (top) return DetState::top_state(d.n_states);
    return r;
}

OutputValue behavior(const DecoratedLts& d, const DetState& x, const Word& w)
{
    DetState cur = x;
    for (LabelId a : w) cur = det_step(d, cur, a);
    return det_output(d, cur);
}

const Determinizer::Node& Determinizer::node(const DetState& x)
{
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    if (memo_.size() >= cap_) throw CapExceeded(memo_.size(), "determinisation");
    Node n;
    n.out = det_output(d_, x);
    n.row.reserve(d_.n_labels());
    for (LabelId a = 0; a < d_.n_labels(); ++a) n.row.push_back(det_step(d_, x, a));
    return memo_.emplace(x, std::move(n)).first->second;
}

OutputValue behavior(const ExplicitMachine& m, std::uint32_t q, const Word& w)
{
    for (LabelId a : w) q = m.next[q][a];
    return m.outputs[q];
}

std::string describe(const DetState& x, const std::vector<std::string>& names)
{
    if (x.top) return "top";
    std::string s = "{";
    bool first = true;
    x.set.for_each([&](StateId v) {
        if (!first) s += ',';
        s += names.empty() ? std::to_string(v) : names[v];
        first = false;
    });
    return s + "}";
}

ExplicitMachine reachable_machine(const DecoratedLts& d, const std::vector<DetState>& inits, std::size_t cap,
                                  std::vector<DetState>* states)
{
    ExplicitMachine m;
    m.labels = d.labels;
    m.alphabet = d.base_alphabet;
    std::unordered_map<DetState, std::uint32_t, DetStateHash> index;
    std::vector<DetState> order;

    auto intern = [&](const DetState& x) -> std::uint32_t {
        if (auto it = index.find(x); it != index.end()) return it->second;
        if (order.size() >= cap) throw CapExceeded(order.size(), "reachability");
        auto id = static_cast<std::uint32_t>(order.size());
        index.emplace(x, id);
        order.push_back(x);
        return id;
    };

    for (const auto& x : inits) m.inits.push_back(intern(x));
    for (std::size_t q = 0; q < order.size(); ++q) {
        DetState x = order[q];
        m.outputs.push_back(det_output(d, x));
        std::vector<std::uint32_t> row;
        row.reserve(d.n_labels());
        for (LabelId a = 0; a < d.n_labels(); ++a) row.push_back(intern(det_step(d, x, a)));
        m.next.push_back(std::move(row));
        m.state_desc.push_back(describe(x, d.names));
    }
    if (states) *states = std::move(order);
    return m;
}

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<DetState, DetState>& p) const
    {
        return p.first.hash() * 31 + p.second.hash();
    }
};

} // namespace

BisimResult naive_bisim(const DecoratedLts& d, const DetState& x, const DetState& y, std::size_t cap)
{
    Determinizer det(d, cap);
    BisimResult res;
    using Pair = std::pair<DetState, DetState>;
    std::unordered_map<Pair, std::size_t, PairHash> seen; // pair -> index in relation
    std::vector<std::pair<std::size_t, LabelId>> parent;  // how each pair was first reached

    seen.emplace(Pair{x, y}, 0);
    res.relation.push_back({x, y});
    parent.push_back({SIZE_MAX, 0});

    for (std::size_t i = 0; i < res.relation.size(); ++i) {
        Pair p = res.relation[i];
        if (!(det.output(p.first) == det.output(p.second))) {
            for (std::size_t k = i; parent[k].first != SIZE_MAX; k = parent[k].first)
                res.counterexample.insert(res.counterexample.begin(), parent[k].second);
            res.equal = false;
            res.states_built = det.states_built();
            return res;
        }
        for (LabelId a = 0; a < d.n_labels(); ++a) {
            Pair q{det.step(p.first, a), det.step(p.second, a)};
            if (seen.emplace(q, res.relation.size()).second) {
                res.relation.push_back(std::move(q));
                parent.push_back({i, a});
            }
        }
    }
    res.equal = true;
    res.states_built = det.states_built();
    return res;
}

std::vector<std::uint32_t> moore_partition_classes(const ExplicitMachine& m)
{
    const std::size_t n = m.size();
    std::vector<std::uint32_t> block(n);
    {
        std::unordered_map<OutputValue, std::uint32_t, OutputValueHash> ids;
        for (std::size_t q = 0; q < n; ++q)
            block[q] = ids.emplace(m.outputs[q], static_cast<std::uint32_t>(ids.size())).first->second;
    }
    std::size_t count = 0;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> refined(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<std::uint32_t> sig{block[q]};
            for (auto t : m.next[q]) sig.push_back(block[t]);
            refined[q] = ids.emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
        }
        block = std::move(refined);
        if (ids.size() == count) break;
        count = ids.size();
    }
    return block;
}

bool coarsen_failure_to_ctrace(const ActionSetFamily& failures, ActionMask full)
{
    return failures.contains(full);
}

ActionSetFamily coarsen_ready_to_failure(const ActionSetFamily& ready, ActionMask full)
{
    ActionSetFamily out;
    for (ActionMask i : ready.members()) out |= fail_of_initials(i, full);
    return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& labels)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += labels[w[i]];
    }
    return s;
}

} // namespace semcheck
