#include "lts.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace semcheck {

Lts::Lts(std::size_t n, std::vector<std::string> labels)
    : n_states(n), alphabet(std::move(labels))
{
    trans.assign(n, std::vector<StateSet>(alphabet.size() + 1, StateSet(n)));
}

bool Lts::has_tau() const
{
    for (const auto& row : trans)
        if (!row[tau()].empty()) return true;
    return false;
}

std::optional<LabelId> Lts::label_index(std::string_view token) const
{
    if (token == kTau) return tau();
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == token) return i;
    return std::nullopt;
}

std::optional<StateId> Lts::resolve_state(std::string_view token) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == token) return static_cast<StateId>(i);
    StateId v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc() && p == token.data() + token.size() && v < n_states) return v;
    return std::nullopt;
}

std::string Lts::state_name(StateId x) const
{
    return names.empty() ? std::to_string(x) : names[x];
}

bool valid_token(std::string_view token)
{
    if (token.empty()) return false;
    return std::all_of(token.begin(), token.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(pos, end - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string w; in >> w;) line.words.push_back(w);
        if (!line.words.empty()) out.push_back(std::move(line));
        pos = end + 1;
    }
    return out;
}

std::size_t parse_count(const Line& line, const std::string& word)
{
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || p != word.data() + word.size())
        throw ParseError(line.number, "expected a state count, got '" + word + "'");
    return v;
}

} // namespace

Lts parse_lts(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    const Line& head = lines[0];
    if (head.words.size() != 2 || head.words[0] != "lts")
        throw ParseError(head.number, "expected 'lts <n_states>'");
    std::size_t n = parse_count(head, head.words[1]);

    if (lines.size() < 2 || lines[1].words[0] != "alphabet")
        throw ParseError(lines.size() < 2 ? head.number + 1 : lines[1].number, "expected 'alphabet' line");
    std::vector<std::string> labels(lines[1].words.begin() + 1, lines[1].words.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == kTau) throw ParseError(lines[1].number, "'tau' is reserved and cannot be declared");
        if (!valid_token(labels[i])) throw ParseError(lines[1].number, "invalid label '" + labels[i] + "'");
        if (std::find(labels.begin(), labels.begin() + static_cast<long>(i), labels[i]) != labels.begin() + static_cast<long>(i))
            throw ParseError(lines[1].number, "duplicate label '" + labels[i] + "'");
    }
    if (labels.size() > kMaxAlphabet)
        throw ParseError(lines[1].number, "alphabet larger than " + std::to_string(kMaxAlphabet) + " labels");

    Lts lts(n, std::move(labels));

    // names are needed before any state reference, wherever the line sits
    const Line* finals_line = nullptr;
    std::vector<const Line*> edges;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.words[0] == "names") {
            if (!lts.names.empty()) throw ParseError(l.number, "duplicate 'names' line");
            if (l.words.size() - 1 != n)
                throw ParseError(l.number, "'names' lists " + std::to_string(l.words.size() - 1) + " names for " +
                                               std::to_string(n) + " states");
            for (std::size_t k = 1; k < l.words.size(); ++k) {
                if (!valid_token(l.words[k])) throw ParseError(l.number, "invalid state name '" + l.words[k] + "'");
                for (const auto& prev : lts.names)
                    if (prev == l.words[k]) throw ParseError(l.number, "duplicate state name '" + l.words[k] + "'");
                lts.names.push_back(l.words[k]);
            }
        } else if (l.words[0] == "final") {
            if (finals_line) throw ParseError(l.number, "duplicate 'final' line");
            finals_line = &l;
        } else if (l.words[0] == "alphabet" || l.words[0] == "lts") {
            throw ParseError(l.number, "unexpected '" + l.words[0] + "' line");
        } else {
            edges.push_back(&l);
        }
    }

    auto state = [&](const Line& l, const std::string& tok) {
        auto s = lts.resolve_state(tok);
        if (!s) throw ParseError(l.number, "undeclared state '" + tok + "'");
        return *s;
    };

    if (finals_line) {
        StateSet f(n);
        for (std::size_t k = 1; k < finals_line->words.size(); ++k) f.insert(state(*finals_line, finals_line->words[k]));
        lts.finals = f;
    }
    for (const Line* l : edges) {
        if (l->words.size() != 3) throw ParseError(l->number, "expected '<src> <label> <dst>'");
        StateId src = state(*l, l->words[0]);
        auto label = lts.label_index(l->words[1]);
        if (!label) throw ParseError(l->number, "undeclared label '" + l->words[1] + "'");
        StateId dst = state(*l, l->words[2]);
        lts.add(src, *label, dst);
    }
    return lts;
}

std::string to_text(const Lts& lts)
{
    std::ostringstream out;
    out << "lts " << lts.n_states << "\nalphabet";
    for (const auto& a : lts.alphabet) out << ' ' << a;
    out << '\n';
    if (!lts.names.empty()) {
        out << "names";
        for (const auto& nm : lts.names) out << ' ' << nm;
        out << '\n';
    }
    if (lts.finals) {
        out << "final";
        lts.finals->for_each([&](StateId x) { out << ' ' << x; });
        out << '\n';
    }
    for (StateId x = 0; x < lts.n_states; ++x)
        for (LabelId a = 0; a <= lts.tau(); ++a)
            lts.succ(x, a).for_each([&](StateId y) {
                out << x << ' ' << (a == lts.tau() ? std::string(kTau) : lts.alphabet[a]) << ' ' << y << '\n';
            });
    return out.str();
}

StateSet tau_closure(const Lts& lts, const StateSet& from)
{
    StateSet seen = from;
    std::vector<StateId> stack = from.members();
    while (!stack.empty()) {
        StateId x = stack.back();
        stack.pop_back();
        lts.succ(x, lts.tau()).for_each([&](StateId y) {
            if (!seen.contains(y)) {
                seen.insert(y);
                stack.push_back(y);
            }
        });
    }
    return seen;
}

StateSet weak_successors(const Lts& lts, StateId x, LabelId a)
{
    StateSet before = tau_closure(lts, StateSet::singleton(lts.n_states, x));
    StateSet step(lts.n_states);
    before.for_each([&](StateId y) { step |= lts.succ(y, a); });
    return tau_closure(lts, step);
}

std::vector<bool> divergent_states(const Lts& lts)
{
    const std::size_t n = lts.n_states;
    const LabelId t = lts.tau();
    // Kosaraju on the tau graph.
    std::vector<std::vector<StateId>> fwd(n), rev(n);
    for (StateId x = 0; x < n; ++x)
        lts.succ(x, t).for_each([&](StateId y) {
            fwd[x].push_back(y);
            rev[y].push_back(x);
        });

    std::vector<StateId> order;
    std::vector<char> seen(n, 0);
    for (StateId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<StateId, std::size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [x, i] = stack.back();
            if (i < fwd[x].size()) {
                StateId y = fwd[x][i++];
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back({y, 0});
                }
            } else {
                order.push_back(x);
                stack.pop_back();
            }
        }
    }

    std::vector<long> comp(n, -1);
    std::vector<std::size_t> comp_size;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] >= 0) continue;
        long c = static_cast<long>(comp_size.size());
        comp_size.push_back(0);
        std::vector<StateId> stack{*it};
        comp[*it] = c;
        while (!stack.empty()) {
            StateId x = stack.back();
            stack.pop_back();
            ++comp_size[static_cast<std::size_t>(c)];
            for (StateId y : rev[x])
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
        }
    }

    // A state lies on a tau-cycle iff its component is non-trivial or it has a tau self-loop.
    std::vector<bool> div(n, false);
    std::vector<StateId> work;
    for (StateId x = 0; x < n; ++x)
        if (comp_size[static_cast<std::size_t>(comp[x])] > 1 || lts.succ(x, t).contains(x)) {
            div[x] = true;
            work.push_back(x);
        }
    while (!work.empty()) {
        StateId y = work.back();
        work.pop_back();
        for (StateId x : rev[y])
            if (!div[x]) {
                div[x] = true;
                work.push_back(x);
            }
    }
    return div;
}

bool diverges(const Lts& lts, StateId x)
{
    return divergent_states(lts)[x];
}

bool converges_on(const Lts& lts, StateId x, const std::vector<LabelId>& word)
{
    auto div = divergent_states(lts);
    StateSet current = StateSet::singleton(lts.n_states, x);
    for (std::size_t k = 0;; ++k) {
        bool ok = true;
        current.for_each([&](StateId y) { ok = ok && !div[y]; });
        if (!ok) return false;
        if (k == word.size()) return true;
        StateSet next(lts.n_states);
        current.for_each([&](StateId y) { next |= weak_successors(lts, y, word[k]); });
        current = std::move(next);
    }
}

ActionMask initial_actions(const Lts& lts, StateId x)
{
    ActionMask m = 0;
    for (LabelId a = 0; a < lts.alphabet.size(); ++a)
        if (!lts.succ(x, a).empty()) m |= ActionMask{1} << a;
    return m;
}

ActionMask weak_initial_actions(const Lts& lts, StateId x)
{
    // A non-empty weak row, or a divergence marker (which implies reachable
    // divergent successors), both count as enabled.
    ActionMask m = 0;
    for (LabelId a = 0; a < lts.alphabet.size(); ++a)
        if (!weak_successors(lts, x, a).empty()) m |= ActionMask{1} << a;
    return m;
}

std::string mask_to_string(ActionMask m, const std::vector<std::string>& alphabet)
{
    std::string s = "{";
    bool first = true;
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        if ((m >> a) & 1u) {
            if (!first) s += ',';
            s += alphabet[a];
            first = false;
        }
    return s + "}";
}

} // namespace semcheck
