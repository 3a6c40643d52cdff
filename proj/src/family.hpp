#pragma once

#include "lts.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace semcheck {

// Canonical set of action sets, kept sorted and duplicate-free.
class ActionSetFamily {
public:
    ActionSetFamily() = default;
    ActionSetFamily(std::initializer_list<ActionMask> ms);
    static ActionSetFamily from(std::vector<ActionMask> ms);
    // Downward closure of a single set: every subset of `top`.
    static ActionSetFamily subsets_of(ActionMask top);

    void insert(ActionMask m);
    bool contains(ActionMask m) const;
    bool empty() const { return m_.empty(); }
    std::size_t size() const { return m_.size(); }
    const std::vector<ActionMask>& members() const { return m_; }

    ActionSetFamily& operator|=(const ActionSetFamily& o);
    bool operator==(const ActionSetFamily& o) const = default;

    bool is_downward_closed() const;
    bool is_antichain() const;
    std::size_t hash() const;

    std::string to_string(const std::vector<std::string>& alphabet) const;

private:
    std::vector<ActionMask> m_;
};

ActionSetFamily downward_closure(const ActionSetFamily& f);

// Fail(x) = { Z | Z ∩ I(x) = ∅ } over the strong transitions.
ActionSetFamily fail_sets(const Lts& lts, StateId x);
ActionSetFamily fail_of_initials(ActionMask initials, ActionMask full);

ActionSetFamily antichain_min(const ActionSetFamily& f);
// i(F) = min { A - F_k }. Throws std::invalid_argument if f is not a downset.
ActionSetFamily downset_to_antichain(const ActionSetFamily& f, ActionMask full);
// j(I) = downward closure of { A - I_k }. Throws if g is not an antichain.
ActionSetFamily antichain_to_downset(const ActionSetFamily& g, ActionMask full);

enum class OutputKind { Bit, Family, TopOrFamily, ClassSet };

const char* to_string(OutputKind k);

class VariantMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Observation attached to a state. ClassSet reuses the family container to
// hold sorted class ids.
struct OutputValue {
    OutputKind kind = OutputKind::Bit;
    bool bit = false;
    bool top = false;
    ActionSetFamily elems;

    static OutputValue make_bit(bool b) { return {OutputKind::Bit, b, false, {}}; }
    static OutputValue make_family(ActionSetFamily f) { return {OutputKind::Family, false, false, std::move(f)}; }
    static OutputValue make_top() { return {OutputKind::TopOrFamily, false, true, {}}; }
    static OutputValue make_top_or_family(ActionSetFamily f) { return {OutputKind::TopOrFamily, false, false, std::move(f)}; }
    static OutputValue make_classes(ActionSetFamily ids) { return {OutputKind::ClassSet, false, false, std::move(ids)}; }
    static OutputValue bottom(OutputKind k) { return {k, false, false, {}}; }

    bool is_bottom() const { return !bit && !top && elems.empty(); }
    bool operator==(const OutputValue& o) const = default;
    std::size_t hash() const;
};

struct OutputValueHash {
    std::size_t operator()(const OutputValue& v) const { return v.hash(); }
};

OutputValue join(const OutputValue& a, const OutputValue& b);
OutputValue& join_into(OutputValue& acc, const OutputValue& b);

// i on Family, 1+i on TopOrFamily; other variants unchanged.
OutputValue compact_output(const OutputValue& v, ActionMask full);

std::string to_string(const OutputValue& v, const std::vector<std::string>& alphabet);

} // namespace semcheck
