#include "family.hpp"

#include <algorithm>
#include <iterator>

namespace semcheck {

ActionSetFamily::ActionSetFamily(std::initializer_list<ActionMask> ms) : m_(ms)
{
    std::sort(m_.begin(), m_.end());
    m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
}

ActionSetFamily ActionSetFamily::from(std::vector<ActionMask> ms)
{
    ActionSetFamily f;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    f.m_ = std::move(ms);
    return f;
}

ActionSetFamily ActionSetFamily::subsets_of(ActionMask top)
{
    std::vector<ActionMask> out;
    for (ActionMask s = top;; s = (s - 1) & top) {
        out.push_back(s);
        if (s == 0) break;
    }
    return from(std::move(out));
}

void ActionSetFamily::insert(ActionMask m)
{
    auto it = std::lower_bound(m_.begin(), m_.end(), m);
    if (it == m_.end() || *it != m) m_.insert(it, m);
}

bool ActionSetFamily::contains(ActionMask m) const
{
    return std::binary_search(m_.begin(), m_.end(), m);
}

ActionSetFamily& ActionSetFamily::operator|=(const ActionSetFamily& o)
{
    if (o.m_.empty()) return *this;
    if (m_.empty()) {
        m_ = o.m_;
        return *this;
    }
    std::vector<ActionMask> out;
    out.reserve(m_.size() + o.m_.size());
    std::set_union(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(out));
    m_ = std::move(out);
    return *this;
}

bool ActionSetFamily::is_downward_closed() const
{
    // Closed under removing one element at a time suffices.
    for (ActionMask m : m_)
        for (ActionMask rest = m; rest; rest &= rest - 1) {
            ActionMask bit = rest & (~rest + 1);
            if (!contains(m & ~bit)) return false;
        }
    return true;
}

bool ActionSetFamily::is_antichain() const
{
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if (i != j && (m_[i] & ~m_[j]) == 0) return false;
    return true;
}

std::size_t ActionSetFamily::hash() const
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (ActionMask m : m_) h = (h ^ m) * 0x100000001b3ULL;
    return h;
}

std::string ActionSetFamily::to_string(const std::vector<std::string>& alphabet) const
{
    std::string s = "{";
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i) s += ',';
        s += mask_to_string(m_[i], alphabet);
    }
    return s + "}";
}

ActionSetFamily downward_closure(const ActionSetFamily& f)
{
    std::vector<ActionMask> out;
    for (ActionMask top : f.members())
        for (ActionMask s = top;; s = (s - 1) & top) {
            out.push_back(s);
            if (s == 0) break;
        }
    return ActionSetFamily::from(std::move(out));
}

ActionSetFamily fail_of_initials(ActionMask initials, ActionMask full)
{
    return ActionSetFamily::subsets_of(full & ~initials);
}

ActionSetFamily fail_sets(const Lts& lts, StateId x)
{
    return fail_of_initials(initial_actions(lts, x), lts.full_mask());
}

ActionSetFamily antichain_min(const ActionSetFamily& f)
{
    std::vector<ActionMask> out;
    const auto& ms = f.members();
    for (ActionMask m : ms) {
        bool minimal = std::none_of(ms.begin(), ms.end(), [&](ActionMask o) { return o != m && (o & ~m) == 0; });
        if (minimal) out.push_back(m);
    }
    return ActionSetFamily::from(std::move(out));
}

ActionSetFamily downset_to_antichain(const ActionSetFamily& f, ActionMask full)
{
    if (!f.is_downward_closed()) throw std::invalid_argument("downset_to_antichain: family is not downward closed");
    std::vector<ActionMask> comp;
    comp.reserve(f.size());
    for (ActionMask m : f.members()) comp.push_back(full & ~m);
    return antichain_min(ActionSetFamily::from(std::move(comp)));
}

ActionSetFamily antichain_to_downset(const ActionSetFamily& g, ActionMask full)
{
    if (!g.is_antichain()) throw std::invalid_argument("antichain_to_downset: family is not an antichain");
    std::vector<ActionMask> comp;
    for (ActionMask m : g.members()) comp.push_back(full & ~m);
    return downward_closure(ActionSetFamily::from(std::move(comp)));
}

const char* to_string(OutputKind k)
{
    switch (k) {
    case OutputKind::Bit: return "bit";
    case OutputKind::Family: return "family";
    case OutputKind::TopOrFamily: return "top-or-family";
    case OutputKind::ClassSet: return "class-set";
    }
    return "?";
}

std::size_t OutputValue::hash() const
{
    return elems.hash() ^ (static_cast<std::size_t>(kind) << 1) ^ (bit ? 0x51ULL : 0) ^ (top ? 0xa3ULL : 0);
}

OutputValue& join_into(OutputValue& acc, const OutputValue& b)
{
    if (acc.kind != b.kind)
        throw VariantMismatch(std::string("join of ") + to_string(acc.kind) + " and " + to_string(b.kind));
    switch (acc.kind) {
    case OutputKind::Bit: acc.bit = acc.bit || b.bit; break;
    case OutputKind::TopOrFamily:
        if (acc.top || b.top) {
            acc.top = true;
            acc.elems = {};
            break;
        }
        acc.elems |= b.elems;
        break;
    case OutputKind::Family:
    case OutputKind::ClassSet: acc.elems |= b.elems; break;
    }
    return acc;
}

OutputValue join(const OutputValue& a, const OutputValue& b)
{
    OutputValue r = a;
    return join_into(r, b);
}

OutputValue compact_output(const OutputValue& v, ActionMask full)
{
    if (v.kind == OutputKind::Family) return OutputValue::make_family(downset_to_antichain(v.elems, full));
    if (v.kind == OutputKind::TopOrFamily && !v.top)
        return OutputValue::make_top_or_family(downset_to_antichain(v.elems, full));
    return v;
}

std::string to_string(const OutputValue& v, const std::vector<std::string>& alphabet)
{
    switch (v.kind) {
    case OutputKind::Bit: return v.bit ? "1" : "0";
    case OutputKind::TopOrFamily:
        if (v.top) return "top";
        [[fallthrough]];
    case OutputKind::Family: return v.elems.to_string(alphabet);
    case OutputKind::ClassSet: {
        std::string s = "{";
        for (std::size_t i = 0; i < v.elems.size(); ++i) {
            if (i) s += ',';
            s += '#' + std::to_string(v.elems.members()[i]);
        }
        return s + "}";
    }
    }
    return "?";
}

} // namespace semcheck
