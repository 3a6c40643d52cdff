#include "gps.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace semcheck {

Gps::Gps(std::size_t n, std::vector<std::string> labels) : n_states(n), alphabet(std::move(labels))
{
    trans.assign(n, std::vector<std::vector<std::pair<StateId, Rational>>>(alphabet.size()));
}

std::optional<StateId> Gps::resolve_state(std::string_view token) const
{
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == token) return static_cast<StateId>(i);
    StateId v = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc() && p == token.data() + token.size() && v < n_states) return v;
    return std::nullopt;
}

std::string Gps::state_name(StateId x) const
{
    return names.empty() ? std::to_string(x) : names[x];
}

Rational Gps::row_mass(StateId x) const
{
    Rational m = 0;
    for (const auto& row : trans[x])
        for (const auto& [y, p] : row) m += p;
    return m;
}

ActionMask Gps::initial_actions(StateId x) const
{
    ActionMask m = 0;
    for (LabelId a = 0; a < alphabet.size(); ++a)
        if (!trans[x][a].empty()) m |= ActionMask{1} << a;
    return m;
}

namespace {

std::vector<std::pair<std::size_t, std::vector<std::string>>> gps_lines(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++number;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ws(raw);
        std::vector<std::string> words;
        for (std::string w; ws >> w;) words.push_back(w);
        if (!words.empty()) out.emplace_back(number, std::move(words));
    }
    return out;
}

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

Gps parse_gps(std::string_view text)
{
    auto lines = gps_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    auto& [hn, head] = lines[0];
    if (head.size() != 2 || head[0] != "gps" || !all_digits(head[1])) throw ParseError(hn, "expected 'gps <n_states>'");
    std::size_t n = std::stoul(head[1]);
    if (lines.size() < 2 || lines[1].second[0] != "alphabet") throw ParseError(hn + 1, "expected 'alphabet' line");
    std::vector<std::string> labels(lines[1].second.begin() + 1, lines[1].second.end());
    for (const auto& l : labels) {
        if (l == kTau) throw ParseError(lines[1].first, "GPS inputs have no internal action");
        if (!valid_token(l)) throw ParseError(lines[1].first, "invalid label '" + l + "'");
        if (std::count(labels.begin(), labels.end(), l) > 1)
            throw ParseError(lines[1].first, "duplicate label '" + l + "'");
    }
    if (labels.size() >= kMaxAlphabet) throw ParseError(lines[1].first, "alphabet too large");
    Gps g(n, std::move(labels));

    for (std::size_t i = 2; i < lines.size(); ++i)
        if (lines[i].second[0] == "names") {
            const auto& w = lines[i].second;
            if (!g.names.empty()) throw ParseError(lines[i].first, "duplicate 'names' line");
            if (w.size() - 1 != n) throw ParseError(lines[i].first, "'names' count does not match state count");
            for (std::size_t k = 1; k < w.size(); ++k) {
                if (!valid_token(w[k]) || std::count(w.begin() + 1, w.end(), w[k]) > 1)
                    throw ParseError(lines[i].first, "invalid or duplicate state name '" + w[k] + "'");
                g.names.push_back(w[k]);
            }
        }

    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& [ln, w] = lines[i];
        if (w[0] == "names") continue;
        if (w.size() != 4) throw ParseError(ln, "expected '<src> <label> <p>/<q> <dst>'");
        auto src = g.resolve_state(w[0]);
        if (!src) throw ParseError(ln, "undeclared state '" + w[0] + "'");
        auto dst = g.resolve_state(w[3]);
        if (!dst) throw ParseError(ln, "undeclared state '" + w[3] + "'");
        if (w[1] == kTau) throw ParseError(ln, "GPS inputs have no internal action");
        auto it = std::find(g.alphabet.begin(), g.alphabet.end(), w[1]);
        if (it == g.alphabet.end()) throw ParseError(ln, "undeclared label '" + w[1] + "'");
        LabelId a = static_cast<LabelId>(it - g.alphabet.begin());
        auto slash = w[2].find('/');
        if (slash == std::string::npos || !all_digits(w[2].substr(0, slash)) || !all_digits(w[2].substr(slash + 1)))
            throw ParseError(ln, "probability must be written p/q");
        mpz_class num(w[2].substr(0, slash)), den(w[2].substr(slash + 1));
        if (den == 0) throw ParseError(ln, "zero denominator");
        Rational p(num, den);
        p.canonicalize();
        if (p <= 0 || p > 1) throw ParseError(ln, "probability outside (0,1]");
        auto& row = g.trans[*src][a];
        auto pos = std::lower_bound(row.begin(), row.end(), *dst, [](const auto& e, StateId t) { return e.first < t; });
        if (pos != row.end() && pos->first == *dst) throw ParseError(ln, "duplicate transition");
        row.insert(pos, {*dst, p});
    }
    for (StateId x = 0; x < n; ++x)
        if (g.row_mass(x) > 1) throw ParseError(lines[0].first, "outgoing probability of state " + g.state_name(x) + " exceeds 1");
    return g;
}

std::string to_text(const Gps& g)
{
    std::ostringstream out;
    out << "gps " << g.n_states << "\nalphabet";
    for (const auto& a : g.alphabet) out << ' ' << a;
    out << '\n';
    if (!g.names.empty()) {
        out << "names";
        for (const auto& nm : g.names) out << ' ' << nm;
        out << '\n';
    }
    for (StateId x = 0; x < g.n_states; ++x)
        for (LabelId a = 0; a < g.alphabet.size(); ++a)
            for (const auto& [y, p] : g.trans[x][a])
                out << x << ' ' << g.alphabet[a] << ' ' << p.get_num() << '/' << p.get_den() << ' ' << y << '\n';
    return out.str();
}

Distribution point(const Gps& g, StateId x)
{
    Distribution v(g.n_states, 0);
    v[x] = 1;
    return v;
}

Rational mass(const Distribution& v)
{
    Rational m = 0;
    for (const auto& e : v) m += e;
    return m;
}

bool GpsOutput::is_zero() const
{
    return scalar ? value == 0 : family.empty();
}

std::string GpsOutput::to_string(const std::vector<std::string>& alphabet) const
{
    if (scalar) return value.get_str();
    std::string s = "{";
    bool first = true;
    for (const auto& [m, p] : family) {
        if (!first) s += ',';
        s += mask_to_string(m, alphabet) + ":" + p.get_str();
        first = false;
    }
    return s + "}";
}

std::vector<GpsOutput> gps_decorate(const Gps& g, Semantics sem)
{
    if (!is_probabilistic(sem)) throw SemanticsError(std::string("semantics ") + to_string(sem) + " is not a GPS semantics");
    if (sem == Semantics::g_failure && g.alphabet.size() > kMaxDownsetAlphabet)
        throw SemanticsError("g_failure supports at most " + std::to_string(kMaxDownsetAlphabet) + " labels");
    const ActionMask full = g.full_mask();
    std::vector<GpsOutput> out(g.n_states);
    for (StateId x = 0; x < g.n_states; ++x) {
        GpsOutput& o = out[x];
        ActionMask i = g.initial_actions(x);
        switch (sem) {
        case Semantics::g_ready:
            o.scalar = false;
            o.family[i] = 1;
            break;
        case Semantics::g_failure:
            o.scalar = false;
        {
            const ActionSetFamily fails = fail_of_initials(i, full);
            for (ActionMask z : fails.members()) o.family[z] = 1;
        }
            break;
        case Semantics::g_mfailure:
            o.scalar = false;
            o.family[full & ~i] = 1;
            break;
        case Semantics::g_trace: o.value = 1; break;
        case Semantics::g_mtrace: o.value = 1 - g.row_mass(x); break;
        default: break;
        }
    }
    return out;
}

Distribution gps_det_step(const Gps& g, const Distribution& v, LabelId a)
{
    Distribution out(g.n_states, 0);
    for (StateId x = 0; x < g.n_states; ++x) {
        if (v[x] == 0) continue;
        for (const auto& [y, p] : g.trans[x][a]) out[y] += p * v[x];
    }
    return out;
}

GpsOutput gps_det_output(const std::vector<GpsOutput>& decoration, const Distribution& v)
{
    GpsOutput out;
    if (!decoration.empty()) out.scalar = decoration[0].scalar;
    for (std::size_t x = 0; x < v.size(); ++x) {
        if (v[x] == 0) continue;
        const GpsOutput& o = decoration[x];
        if (o.scalar) {
            out.value += v[x] * o.value;
        } else {
            for (const auto& [m, p] : o.family) {
                Rational& slot = out.family[m];
                slot += v[x] * p;
                if (slot == 0) out.family.erase(m);
            }
        }
    }
    return out;
}

namespace {

// Rows kept with a unit pivot and zeros at every earlier row's pivot.
struct Span {
    std::vector<Distribution> rows;
    std::vector<std::size_t> pivots;

    // Returns true and records the reduced vector when v is independent.
    bool insert(Distribution v)
    {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            Rational c = v[pivots[k]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (rows[k][i] != 0) v[i] -= c * rows[k][i];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& r) { return r != 0; });
        if (nz == v.end()) return false;
        std::size_t p = static_cast<std::size_t>(nz - v.begin());
        Rational c = v[p];
        for (auto& e : v) e /= c;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

} // namespace

GpsEquivResult gps_equiv(const Gps& g, Semantics sem, StateId x, StateId y)
{
    auto dec = gps_decorate(g, sem);
    Distribution v0 = point(g, x);
    v0[y] -= 1;

    GpsEquivResult res;
    Span span;
    std::deque<std::pair<Distribution, std::vector<LabelId>>> queue;
    queue.emplace_back(std::move(v0), std::vector<LabelId>{});
    while (!queue.empty()) {
        auto [v, w] = std::move(queue.front());
        queue.pop_front();
        if (!gps_det_output(dec, v).is_zero()) {
            res.counterexample = std::move(w);
            res.basis_size = span.rows.size();
            return res;
        }
        if (!span.insert(v)) continue;
        for (LabelId a = 0; a < g.alphabet.size(); ++a) {
            auto w2 = w;
            w2.push_back(a);
            queue.emplace_back(gps_det_step(g, v, a), std::move(w2));
        }
    }
    res.equal = true;
    res.basis_size = span.rows.size();
    return res;
}

Rational ready_to_trace_collapse(const GpsOutput& ready)
{
    Rational s = 0;
    for (const auto& [m, p] : ready.family) s += p;
    return s;
}

GpsOutput failure_from_ready(const GpsOutput& ready, ActionMask full)
{
    GpsOutput out;
    out.scalar = false;
    const ActionSetFamily all = ActionSetFamily::subsets_of(full);
    for (ActionMask z : all.members()) {
        Rational s = 0;
        for (const auto& [i, p] : ready.family)
            if ((i & z) == 0) s += p;
        if (s != 0) out.family[z] = s;
    }
    return out;
}

GpsOutput mfailure_from_ready(const GpsOutput& ready, ActionMask full)
{
    GpsOutput out;
    out.scalar = false;
    for (const auto& [i, p] : ready.family)
        if (p != 0) out.family[full & ~i] = p;
    return out;
}

} // namespace semcheck
