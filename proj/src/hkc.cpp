#include "hkc.hpp"

#include <chrono>
#include <deque>

namespace semcheck {

namespace {

DetState saturate_with(const CongruenceBasis& a, const CongruenceBasis* b, DetState z)
{
    bool changed = true;
    auto apply = [&](const CongruenceBasis& basis) {
        for (const auto& [u, v] : basis) {
            if (z.top) return;
            if (leq(u, z) && !leq(v, z)) {
                z = join(z, v);
                changed = true;
            }
            if (leq(v, z) && !leq(u, z)) {
                z = join(z, u);
                changed = true;
            }
        }
    };
    while (changed && !z.top) {
        changed = false;
        apply(a);
        if (b) apply(*b);
    }
    return z;
}

} // namespace

DetState saturate(const CongruenceBasis& basis, DetState z)
{
    return saturate_with(basis, nullptr, std::move(z));
}

bool in_congruence(const CongruenceBasis& basis, const DetState& x, const DetState& y)
{
    return x == y || saturate(basis, x) == saturate(basis, y);
}

HkcReport hkc_check(const DecoratedLts& d, const DetState& x, const DetState& y, std::size_t cap)
{
    auto start = std::chrono::steady_clock::now();
    Determinizer det(d, cap);
    HkcReport rep;

    struct Item {
        DetState first, second;
        Word word;
    };
    std::deque<Item> todo;
    todo.push_back({x, y, {}});
    // Pending pairs take part in the congruence check alongside the relation.
    CongruenceBasis pending{{x, y}};

    auto finish = [&](bool equal) {
        rep.equal = equal;
        rep.states_built = det.states_built();
        rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rep;
    };

    while (!todo.empty()) {
        Item it = std::move(todo.front());
        todo.pop_front();
        pending.erase(pending.begin());
        ++rep.pairs_processed;

        if (it.first == it.second ||
            saturate_with(rep.relation, &pending, it.first) == saturate_with(rep.relation, &pending, it.second))
            continue;
        if (!(det.output(it.first) == det.output(it.second))) {
            rep.counterexample = std::move(it.word);
            return finish(false);
        }
        for (LabelId a = 0; a < d.n_labels(); ++a) {
            Item next{det.step(it.first, a), det.step(it.second, a), it.word};
            next.word.push_back(a);
            pending.push_back({next.first, next.second});
            todo.push_back(std::move(next));
        }
        rep.relation.push_back({std::move(it.first), std::move(it.second)});
    }
    return finish(true);
}

HkcReport preorder_check(const DecoratedLts& d, StateId x, StateId y, std::size_t cap)
{
    if (d.sem != Semantics::must && d.sem != Semantics::may)
        throw SemanticsError("preorder checks are defined for must and may only");
    DetState sx = DetState::of(StateSet::singleton(d.n_states, x));
    DetState sy = DetState::of(StateSet::singleton(d.n_states, y));
    DetState both = join(sx, sy);
    return hkc_check(d, both, d.sem == Semantics::must ? sx : sy, cap);
}

} // namespace semcheck
