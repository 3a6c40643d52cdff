#include "semcheck/semcheck.h"

#include "bench.hpp"

#include <json.hpp>

#include <chrono>
#include <cstring>
#include <sstream>

using nlohmann::json;
using namespace semcheck;

struct sc_system {
    std::optional<Lts> lts;
    std::optional<Gps> gps;
};

struct sc_bench {
    std::vector<Fixture> fixtures;
};

namespace {

thread_local std::string g_last_error;

struct ApiError {
    sc_status status;
    std::string message;
};

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
sc_status guarded(F&& f)
{
    try {
        f();
        g_last_error.clear();
        return SC_OK;
    } catch (const ApiError& e) {
        g_last_error = e.message;
        return e.status;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return SC_ERR_PARSE;
    } catch (const CapExceeded& e) {
        g_last_error = e.what();
        return SC_ERR_CAP;
    } catch (const SemanticsError& e) {
        g_last_error = e.what();
        return SC_ERR_SEMANTICS;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SC_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SC_ERR_INTERNAL;
    }
}

void require(bool ok, sc_status st, const std::string& msg)
{
    if (!ok) throw ApiError{st, msg};
}

std::size_t cap_of(uint64_t cap)
{
    return cap == SC_DEFAULT_CAP ? kDefaultCap : static_cast<std::size_t>(cap);
}

Semantics semantics_arg(const char* s)
{
    auto sem = parse_semantics(s ? s : "");
    require(sem.has_value(), SC_ERR_ARGUMENT, std::string("unknown semantics '") + (s ? s : "") + "'");
    return *sem;
}

const Lts& lts_of(const sc_system* sys)
{
    require(sys != nullptr, SC_ERR_ARGUMENT, "null system");
    require(sys->lts.has_value(), SC_ERR_SEMANTICS, "this operation needs an LTS input");
    return *sys->lts;
}

StateId state_arg(const Lts& l, const char* tok)
{
    auto s = l.resolve_state(tok ? tok : "");
    require(s.has_value(), SC_ERR_ARGUMENT, std::string("unknown state '") + (tok ? tok : "") + "'");
    return *s;
}

json witness_json(const std::vector<std::pair<DetState, DetState>>& rel, const DecoratedLts& d)
{
    json w = json::array();
    for (const auto& [a, b] : rel) w.push_back({describe(a, d.names), describe(b, d.names)});
    return w;
}

json machine_json(const ExplicitMachine& m, const DecoratedLts& d)
{
    json states = json::array();
    for (std::size_t q = 0; q < m.size(); ++q) {
        json s{{"id", q}, {"output", to_string(m.outputs[q], m.alphabet)}};
        if (d.sem == Semantics::failure || d.sem == Semantics::ftrace || d.sem == Semantics::must)
            s["antichain"] = to_string(compact_output(m.outputs[q], d.full), m.alphabet);
        states.push_back(std::move(s));
    }
    return json{{"labels", m.labels}, {"init", m.inits.at(0)}, {"states", states}, {"step", m.next}};
}

} // namespace

extern "C" {

const char* sc_version(void)
{
    return "1.0.0";
}

const char* sc_last_error(void)
{
    return g_last_error.c_str();
}

void sc_string_free(char* s)
{
    std::free(s);
}

sc_status sc_system_parse(const char* text, size_t len, sc_system** out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, SC_ERR_ARGUMENT, "null argument");
        std::string_view t(text, len);
        std::istringstream in{std::string(t)};
        std::string first;
        for (std::string line; std::getline(in, line);) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ws(line);
            if (ws >> first) break;
        }
        auto sys = std::make_unique<sc_system>();
        if (first == "gps") sys->gps = parse_gps(t);
        else sys->lts = parse_lts(t);
        *out = sys.release();
    });
}

void sc_system_free(sc_system* sys)
{
    delete sys;
}

int sc_system_is_gps(const sc_system* sys)
{
    return sys && sys->gps ? 1 : 0;
}

size_t sc_system_states(const sc_system* sys)
{
    if (!sys) return 0;
    return sys->gps ? sys->gps->n_states : sys->lts->n_states;
}

sc_status sc_equiv(const sc_system* sys, const char* semantics, const char* algorithm, const char* s1,
                   const char* s2, uint64_t cap, int* holds, char** report)
{
    return guarded([&] {
        const Lts& l = lts_of(sys);
        Semantics sem = semantics_arg(semantics);
        auto algo = parse_algorithm(algorithm ? algorithm : "");
        require(algo.has_value(), SC_ERR_ARGUMENT, std::string("unknown algorithm '") + (algorithm ? algorithm : "") + "'");
        StateId x = state_arg(l, s1), y = state_arg(l, s2);
        DecoratedLts d = decorate(l, sem, cap_of(cap));
        CheckResult r = run_check(d, *algo, x, y, cap_of(cap));

        json j{{"schema", 1},
               {"command", "equiv"},
               {"semantics", to_string(sem)},
               {"algorithm", to_string(*algo)},
               {"x", l.state_name(x)},
               {"y", l.state_name(y)},
               {"result", r.equal},
               {"stats", {{"states", r.states}, {"pairs", r.pairs}, {"time_ms", r.time_ms}}}};
        if (!r.equal) j["counterexample"] = word_to_string(r.counterexample, d.labels);
        if (r.equal && !r.witness.empty()) j["witness"] = witness_json(r.witness, d);
        if (holds) *holds = r.equal ? 1 : 0;
        if (report) *report = dup(j.dump(2));
    });
}

sc_status sc_preorder(const sc_system* sys, const char* semantics, const char* s1, const char* s2, uint64_t cap,
                      int* holds, char** report)
{
    return guarded([&] {
        const Lts& l = lts_of(sys);
        Semantics sem = semantics_arg(semantics);
        require(sem == Semantics::must || sem == Semantics::may, SC_ERR_ARGUMENT,
                "preorder supports the must and may semantics only");
        StateId x = state_arg(l, s1), y = state_arg(l, s2);
        DecoratedLts d = decorate(l, sem, cap_of(cap));
        HkcReport r = preorder_check(d, x, y, cap_of(cap));
        json j{{"schema", 1},
               {"command", "preorder"},
               {"semantics", to_string(sem)},
               {"algorithm", "hkc"},
               {"x", l.state_name(x)},
               {"y", l.state_name(y)},
               {"result", r.equal},
               {"stats", {{"states", r.states_built}, {"pairs", r.relation.size()}, {"time_ms", r.wall_ms}}}};
        if (!r.equal) j["counterexample"] = word_to_string(r.counterexample, d.labels);
        else j["witness"] = witness_json(r.relation, d);
        if (holds) *holds = r.equal ? 1 : 0;
        if (report) *report = dup(j.dump(2));
    });
}

sc_status sc_minimize(const sc_system* sys, const char* semantics, const char* inits, uint64_t cap, char** report)
{
    return guarded([&] {
        const Lts& l = lts_of(sys);
        Semantics sem = semantics_arg(semantics);
        StateSet init(l.n_states);
        std::string list = inits ? inits : "";
        std::istringstream in(list);
        std::vector<std::string> names;
        for (std::string tok; std::getline(in, tok, ',');) {
            if (tok.empty()) continue;
            StateId x = state_arg(l, tok.c_str());
            init.insert(x);
            names.push_back(l.state_name(x));
        }
        require(!init.empty(), SC_ERR_ARGUMENT, "minimize needs at least one initial state");
        auto start = std::chrono::steady_clock::now();
        DecoratedLts d = decorate(l, sem, cap_of(cap));
        BrzozowskiStats st;
        ExplicitMachine m = brzozowski_minimize(d, init, cap_of(cap), &st);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        json j{{"schema", 1},
               {"command", "minimize"},
               {"semantics", to_string(sem)},
               {"algorithm", "brzozowski"},
               {"init", names},
               {"result", machine_json(m, d)},
               {"stats", {{"states", m.size()}, {"intermediate_states", st.intermediate_states}, {"time_ms", ms}}}};
        if (report) *report = dup(j.dump(2));
    });
}

sc_status sc_gps_equiv(const sc_system* sys, const char* semantics, int with_trace, const char* s1, const char* s2,
                       int* holds, char** report)
{
    return guarded([&] {
        require(sys != nullptr, SC_ERR_ARGUMENT, "null system");
        require(sys->gps.has_value(), SC_ERR_SEMANTICS, "gps-equiv needs a GPS input");
        const Gps& g = *sys->gps;
        Semantics sem = semantics_arg(semantics);
        require(is_probabilistic(sem), SC_ERR_SEMANTICS, std::string("semantics ") + to_string(sem) + " is not a GPS semantics");
        auto x = g.resolve_state(s1 ? s1 : ""), y = g.resolve_state(s2 ? s2 : "");
        require(x && y, SC_ERR_ARGUMENT, "unknown state");
        auto start = std::chrono::steady_clock::now();
        GpsEquivResult r = gps_equiv(g, sem, *x, *y);
        std::size_t basis = r.basis_size;
        if (r.equal && with_trace && sem != Semantics::g_trace) {
            GpsEquivResult t = gps_equiv(g, Semantics::g_trace, *x, *y);
            basis += t.basis_size;
            if (!t.equal) r = t;
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        json j{{"schema", 1},
               {"command", "gps-equiv"},
               {"semantics", to_string(sem)},
               {"algorithm", "span"},
               {"with_trace", with_trace != 0},
               {"x", g.state_name(*x)},
               {"y", g.state_name(*y)},
               {"result", r.equal},
               {"stats", {{"states", 0}, {"pairs", basis}, {"time_ms", ms}}}};
        if (!r.equal) j["counterexample"] = word_to_string(r.counterexample, g.alphabet);
        if (holds) *holds = r.equal ? 1 : 0;
        if (report) *report = dup(j.dump(2));
    });
}

sc_status sc_generate(const char* family, unsigned n, char** text)
{
    return guarded([&] {
        std::string f = family ? family : "";
        require(n >= 1, SC_ERR_ARGUMENT, "n must be at least 1");
        Lts l;
        if (f == "interleave") l = gen_interleave(n);
        else if (f == "chain") l = gen_chain(n);
        else if (f == "cycles") l = gen_cycles(n);
        else throw ApiError{SC_ERR_ARGUMENT, "unknown family '" + f + "'"};
        if (text) *text = dup(to_text(l));
    });
}

sc_bench* sc_bench_new(void)
{
    return new sc_bench;
}

void sc_bench_free(sc_bench* b)
{
    delete b;
}

sc_status sc_bench_add_fixture(sc_bench* b, const char* name, const char* text)
{
    return guarded([&] {
        require(b && name && text, SC_ERR_ARGUMENT, "null argument");
        b->fixtures.push_back(load_fixture(name, text));
    });
}

sc_status sc_bench_add_builtin_fixtures(sc_bench* b)
{
    return guarded([&] {
        require(b != nullptr, SC_ERR_ARGUMENT, "null bench");
        for (auto& f : builtin_fixtures()) b->fixtures.push_back(std::move(f));
    });
}

sc_status sc_bench_add_family(sc_bench* b, const char* family, unsigned n)
{
    return guarded([&] {
        require(b != nullptr, SC_ERR_ARGUMENT, "null bench");
        std::string f = family ? family : "";
        require(n >= 1, SC_ERR_ARGUMENT, "n must be at least 1");
        Fixture fx;
        fx.name = f + "-" + std::to_string(n);
        if (f == "interleave") {
            fx.lts = gen_interleave(n);
            fx.checks.push_back({Semantics::must, "x", "y", true});
        } else if (f == "chain") {
            fx.lts = gen_chain(n);
            fx.checks.push_back({Semantics::must, "x" + std::to_string(n), "x" + std::to_string(n), true});
        } else if (f == "cycles") {
            fx.lts = gen_cycles(n);
            fx.checks.push_back({Semantics::trace, "c1_0", "c" + std::to_string(n) + "_0", true});
        } else {
            throw ApiError{SC_ERR_ARGUMENT, "unknown family '" + f + "'"};
        }
        b->fixtures.push_back(std::move(fx));
    });
}

sc_status sc_bench_run(sc_bench* b, const char* semantics, const char* algorithms, const char* format, uint64_t cap,
                       int* agree, char** report)
{
    return guarded([&] {
        require(b != nullptr, SC_ERR_ARGUMENT, "null bench");
        std::vector<Semantics> sems;
        std::vector<Algorithm> algos;
        std::istringstream ss(semantics ? semantics : "");
        for (std::string tok; std::getline(ss, tok, ',');)
            if (!tok.empty()) sems.push_back(semantics_arg(tok.c_str()));
        std::istringstream as(algorithms && *algorithms ? algorithms : "hkc,naive,brzozowski,oracle");
        for (std::string tok; std::getline(as, tok, ',');) {
            if (tok.empty()) continue;
            auto a = parse_algorithm(tok);
            require(a.has_value(), SC_ERR_ARGUMENT, "unknown algorithm '" + tok + "'");
            algos.push_back(*a);
        }
        std::string fmt = format && *format ? format : "json";
        require(fmt == "json" || fmt == "csv", SC_ERR_ARGUMENT, "format must be json or csv");
        BenchReport r = run_matrix(b->fixtures, sems, algos, cap_of(cap));
        if (agree) *agree = r.disagreements.empty() ? 1 : 0;
        if (report) *report = dup(fmt == "json" ? report_json(r) : report_csv(r));
    });
}

} // extern "C"
