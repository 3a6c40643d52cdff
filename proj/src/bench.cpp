#include "bench.hpp"

#include <json.hpp>

#include <chrono>
#include <set>
#include <sstream>

namespace semcheck {

namespace {

Lts named(std::size_t n, std::vector<std::string> names, std::vector<std::string> labels)
{
    Lts l(n, std::move(labels));
    l.names = std::move(names);
    return l;
}

} // namespace

Lts gen_interleave(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("interleave requires n >= 1");
    // x, x1..xn, u, y, y1..yn, v, z
    std::vector<std::string> names{"x"};
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("u");
    names.push_back("y");
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("v");
    names.push_back("z");
    Lts l = named(2 * n + 5, names, {"a", "b"});
    const auto x = [](std::size_t i) { return static_cast<StateId>(i); };
    const StateId u = static_cast<StateId>(n + 1);
    const auto y = [n](std::size_t i) { return static_cast<StateId>(n + 2 + i); };
    const StateId v = static_cast<StateId>(2 * n + 3);
    const StateId z = static_cast<StateId>(2 * n + 4);
    const LabelId a = 0, b = 1, t = l.tau();

    l.add(x(0), a, x(0));
    l.add(x(0), b, x(0));
    l.add(x(0), b, x(1));
    for (std::size_t i = 1; i < n; ++i) {
        l.add(x(i), a, x(i + 1));
        l.add(x(i), b, x(i + 1));
    }
    l.add(x(n), b, u);
    l.add(u, t, u);

    l.add(y(0), a, y(0));
    l.add(y(0), b, y(0));
    l.add(y(0), b, y(1));
    l.add(y(0), a, z);
    l.add(y(0), b, z);
    for (std::size_t i = 1; i < n; ++i) {
        l.add(y(i), a, y(i + 1));
        l.add(y(i), b, y(i + 1));
    }
    l.add(y(n), b, v);
    l.add(v, t, v);
    l.add(z, a, y(0));
    l.add(z, b, y(1));
    return l;
}

Lts gen_chain(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("chain requires n >= 1");
    std::vector<std::string> names{"x"};
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    Lts l = named(n + 1, names, {"a", "b"});
    for (std::size_t i = n; i >= 2; --i) {
        l.add(static_cast<StateId>(i), 0, static_cast<StateId>(i - 1));
        l.add(static_cast<StateId>(i), 1, static_cast<StateId>(i - 1));
    }
    l.add(1, 1, 0);
    l.add(0, 0, 0);
    l.add(0, 1, 0);
    return l;
}

Lts gen_cycles(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("cycles requires n >= 1");
    std::vector<std::string> names;
    for (std::size_t len = 1; len <= n; ++len)
        for (std::size_t k = 0; k < len; ++k) names.push_back("c" + std::to_string(len) + "_" + std::to_string(k));
    Lts l = named(n * (n + 1) / 2, names, {"a"});
    for (std::size_t len = 1; len <= n; ++len) {
        std::size_t base = len * (len - 1) / 2;
        for (std::size_t k = 0; k < len; ++k)
            l.add(static_cast<StateId>(base + k), 0, static_cast<StateId>(base + (k + 1) % len));
    }
    return l;
}

OracleResult oracle_equal(const DecoratedLts& d, const DetState& x, const DetState& y, std::size_t cap)
{
    // In a Moore machine with N states, two states that agree on every word
    // of length < N agree on all words (each further letter can only refine
    // the N-state partition, which stabilises within N-1 rounds). So the
    // exhaustive check below is complete for the joint machine of x and y.
    ExplicitMachine joint = reachable_machine(d, {x, y}, cap);
    OracleResult res;
    res.joint_states = joint.size();

    // Words of the same length are grouped by the pair of states they reach;
    // one representative word per pair is enough to read off every behaviour.
    std::map<std::pair<std::uint32_t, std::uint32_t>, Word> layer{{{joint.inits[0], joint.inits[1]}, {}}};
    for (std::size_t len = 0; len < joint.size(); ++len) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, Word> next;
        for (const auto& [pq, w] : layer) {
            if (!(joint.outputs[pq.first] == joint.outputs[pq.second])) {
                res.counterexample = w;
                return res;
            }
            for (LabelId a = 0; a < joint.labels.size(); ++a) {
                auto key = std::make_pair(joint.next[pq.first][a], joint.next[pq.second][a]);
                if (!next.count(key)) {
                    Word w2 = w;
                    w2.push_back(a);
                    next.emplace(key, std::move(w2));
                }
            }
        }
        layer = std::move(next);
    }
    res.equal = true;
    return res;
}

std::optional<Algorithm> parse_algorithm(std::string_view s)
{
    if (s == "hkc") return Algorithm::hkc;
    if (s == "naive") return Algorithm::naive;
    if (s == "brzozowski") return Algorithm::brzozowski;
    if (s == "oracle") return Algorithm::oracle;
    return std::nullopt;
}

const char* to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::hkc: return "hkc";
    case Algorithm::naive: return "naive";
    case Algorithm::brzozowski: return "brzozowski";
    case Algorithm::oracle: return "oracle";
    }
    return "?";
}

CheckResult run_check(const DecoratedLts& d, Algorithm algo, StateId x, StateId y, std::size_t cap)
{
    auto start = std::chrono::steady_clock::now();
    DetState sx = DetState::of(StateSet::singleton(d.n_states, x));
    DetState sy = DetState::of(StateSet::singleton(d.n_states, y));
    CheckResult r;
    switch (algo) {
    case Algorithm::hkc: {
        HkcReport h = hkc_check(d, sx, sy, cap);
        r.equal = h.equal;
        r.counterexample = std::move(h.counterexample);
        r.states = h.states_built;
        r.pairs = h.relation.size();
        r.witness = std::move(h.relation);
        break;
    }
    case Algorithm::naive: {
        BisimResult b = naive_bisim(d, sx, sy, cap);
        r.equal = b.equal;
        r.counterexample = std::move(b.counterexample);
        r.states = b.states_built;
        r.pairs = b.relation.size();
        if (b.equal) r.witness = std::move(b.relation);
        break;
    }
    case Algorithm::brzozowski: {
        BrzozowskiStats st;
        auto mx = brzozowski_minimize(d, sx.set, cap, &st);
        auto my = brzozowski_minimize(d, sy.set, cap, &st);
        r.equal = moore_isomorphic(mx, mx.inits[0], my, my.inits[0]);
        if (!r.equal) r.counterexample = distinguishing_word(mx, mx.inits[0], my, my.inits[0]).value_or(Word{});
        r.states = st.intermediate_states + st.final_states;
        break;
    }
    case Algorithm::oracle: {
        OracleResult o = oracle_equal(d, sx, sy, cap);
        r.equal = o.equal;
        r.counterexample = std::move(o.counterexample);
        r.states = o.joint_states;
        break;
    }
    }
    r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Lts random_lts(std::mt19937_64& rng, const RandomParams& p, bool with_tau, bool with_finals)
{
    std::uniform_int_distribution<std::size_t> states(p.min_states, p.max_states);
    std::uniform_int_distribution<std::size_t> labels(1, p.max_labels);
    std::bernoulli_distribution edge(p.density), tau_edge(p.tau_density), fin(0.5);
    std::size_t n = states(rng);
    std::vector<std::string> alpha;
    for (std::size_t i = 0, k = labels(rng); i < k; ++i) alpha.push_back(std::string(1, static_cast<char>('a' + i)));
    Lts l(n, alpha);
    for (StateId x = 0; x < n; ++x)
        for (StateId y = 0; y < n; ++y) {
            for (LabelId a = 0; a < alpha.size(); ++a)
                if (edge(rng)) l.add(x, a, y);
            if (with_tau && tau_edge(rng)) l.add(x, l.tau(), y);
        }
    if (with_finals) {
        StateSet f(n);
        for (StateId x = 0; x < n; ++x)
            if (fin(rng)) f.insert(x);
        l.finals = f;
    }
    return l;
}

Gps random_acyclic_gps(std::mt19937_64& rng, std::size_t max_states, std::size_t labels)
{
    std::uniform_int_distribution<std::size_t> states(2, max_states);
    std::uniform_int_distribution<int> weight(0, 3);
    std::size_t n = states(rng);
    std::vector<std::string> alpha;
    for (std::size_t i = 0; i < labels; ++i) alpha.push_back(std::string(1, static_cast<char>('a' + i)));
    Gps g(n, alpha);
    // Edges only go forward; each row gets integer weights normalised by
    // their sum plus a termination weight.
    for (StateId x = 0; x < n; ++x) {
        std::vector<std::tuple<LabelId, StateId, int>> edges;
        int total = weight(rng);
        for (StateId y = x + 1; y < n; ++y)
            for (LabelId a = 0; a < labels; ++a)
                if (int w = weight(rng) - 1; w > 0) {
                    edges.emplace_back(a, y, w);
                    total += w;
                }
        for (auto [a, y, w] : edges) {
            Rational p(w, total);
            p.canonicalize();
            g.trans[x][a].push_back({y, p});
        }
    }
    return g;
}

Fixture load_fixture(const std::string& name, std::string_view text)
{
    Fixture f;
    f.name = name;
    std::istringstream in{std::string(text)};
    std::string first;
    for (std::string line; std::getline(in, line);) {
        std::istringstream ws(line);
        std::string w;
        if (!(ws >> w)) continue;
        if (w == "#") {
            std::string tag;
            if (!(ws >> tag) || tag != "check:") continue;
            std::string sem, x, y, expect;
            ws >> sem >> x >> y >> expect;
            auto s = parse_semantics(sem);
            if (!s || y.empty()) throw std::invalid_argument(name + ": malformed check line '" + line + "'");
            FixtureCheck c{*s, x, y, std::nullopt};
            if (expect == "holds") c.expect = true;
            else if (expect == "fails") c.expect = false;
            f.checks.push_back(c);
        } else if (w[0] != '#' && first.empty()) {
            first = w;
        }
    }
    if (first == "gps") f.gps = parse_gps(text);
    else f.lts = parse_lts(text);
    return f;
}

std::vector<Fixture> builtin_fixtures()
{
    std::vector<Fixture> out;
    for (const auto& [name, text] : embedded_fixture_texts()) out.push_back(load_fixture(name, text));
    return out;
}

namespace {

std::optional<StateId> resolve(const Fixture& f, const std::string& tok)
{
    return f.lts ? f.lts->resolve_state(tok) : f.gps->resolve_state(tok);
}

} // namespace

BenchReport run_matrix(const std::vector<Fixture>& fixtures, const std::vector<Semantics>& sems,
                       const std::vector<Algorithm>& algos, std::size_t cap)
{
    BenchReport rep;
    for (const auto& f : fixtures) {
        std::vector<FixtureCheck> checks;
        if (sems.empty()) {
            checks = f.checks;
        } else {
            std::set<std::pair<std::string, std::string>> pairs;
            for (const auto& c : f.checks) pairs.insert({c.x, c.y});
            if (pairs.empty()) pairs.insert({"0", "0"});
            for (Semantics s : sems) {
                if (is_probabilistic(s) != bool(f.gps)) continue;
                for (const auto& [x, y] : pairs) {
                    std::optional<bool> expect;
                    for (const auto& c : f.checks)
                        if (c.sem == s && c.x == x && c.y == y) expect = c.expect;
                    checks.push_back({s, x, y, expect});
                }
            }
        }

        for (const auto& c : checks) {
            BenchRecord base;
            base.fixture = f.name;
            base.semantics = to_string(c.sem);
            base.x = c.x;
            base.y = c.y;
            base.expected = c.expect;
            std::vector<BenchRecord> cell;
            auto sx = resolve(f, c.x), sy = resolve(f, c.y);

            if (!sx || !sy) {
                base.algorithm = "-";
                base.error = "unknown state in check";
                cell.push_back(base);
            } else if (f.gps) {
                BenchRecord r = base;
                r.algorithm = "span";
                auto start = std::chrono::steady_clock::now();
                try {
                    auto g = gps_equiv(*f.gps, c.sem, *sx, *sy);
                    r.result = g.equal;
                    r.relation = g.basis_size;
                } catch (const std::exception& e) {
                    r.error = e.what();
                }
                r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                cell.push_back(r);
            } else {
                std::optional<DecoratedLts> d;
                std::string derr;
                try {
                    d = decorate(*f.lts, c.sem, cap);
                } catch (const std::exception& e) {
                    derr = e.what();
                }
                for (Algorithm a : algos) {
                    BenchRecord r = base;
                    r.algorithm = to_string(a);
                    if (!d) {
                        r.error = derr;
                    } else {
                        try {
                            CheckResult cr = run_check(*d, a, *sx, *sy, cap);
                            r.result = cr.equal;
                            r.states = cr.states;
                            r.relation = cr.pairs;
                            r.time_ms = cr.time_ms;
                        } catch (const std::exception& e) {
                            r.error = e.what();
                        }
                    }
                    cell.push_back(r);
                }
            }

            std::set<bool> seen;
            for (const auto& r : cell)
                if (r.result) seen.insert(*r.result);
            std::string where = f.name + " " + base.semantics + " " + c.x + " " + c.y;
            if (seen.size() > 1) rep.disagreements.push_back(where + ": algorithms disagree");
            if (c.expect && seen.size() == 1 && *seen.begin() != *c.expect)
                rep.disagreements.push_back(where + ": result differs from the expected value");
            for (auto& r : cell) rep.records.push_back(std::move(r));
        }
    }
    return rep;
}

std::string report_csv(const BenchReport& r)
{
    std::ostringstream out;
    out << "fixture,semantics,algorithm,x,y,result,expected,states,relation,time_ms,error\n";
    auto opt = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
    for (const auto& rec : r.records) {
        std::string err = rec.error;
        for (auto& ch : err)
            if (ch == ',' || ch == '\n') ch = ';';
        out << rec.fixture << ',' << rec.semantics << ',' << rec.algorithm << ',' << rec.x << ',' << rec.y << ','
            << opt(rec.result) << ',' << opt(rec.expected) << ',' << rec.states << ',' << rec.relation << ','
            << rec.time_ms << ',' << err << '\n';
    }
    return out.str();
}

std::string report_json(const BenchReport& r)
{
    nlohmann::json j;
    j["schema"] = 1;
    j["records"] = nlohmann::json::array();
    for (const auto& rec : r.records) {
        nlohmann::json e{{"fixture", rec.fixture},   {"semantics", rec.semantics}, {"algorithm", rec.algorithm},
                         {"x", rec.x},               {"y", rec.y},                 {"states", rec.states},
                         {"relation", rec.relation}, {"time_ms", rec.time_ms}};
        e["result"] = rec.result ? nlohmann::json(*rec.result) : nlohmann::json(nullptr);
        if (rec.expected) e["expected"] = *rec.expected;
        if (!rec.error.empty()) e["error"] = rec.error;
        j["records"].push_back(std::move(e));
    }
    j["disagreements"] = r.disagreements;
    return j.dump(2);
}

} // namespace semcheck
