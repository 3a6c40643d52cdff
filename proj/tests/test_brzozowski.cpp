#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace semcheck;
using namespace semcheck::testing;

namespace {

std::vector<std::string> output_strings(const ExplicitMachine& m)
{
    std::vector<std::string> out;
    for (const auto& v : m.outputs) out.push_back(to_string(v, m.alphabet));
    std::sort(out.begin(), out.end());
    return out;
}

bool discrete(const ExplicitMachine& m)
{
    auto cls = moore_partition_classes(m);
    return *std::max_element(cls.begin(), cls.end()) + 1 == m.size();
}

} // namespace

TEST_CASE("eq-automata intermediate and minimal machines")
{
    Lts l = fixture("eq-automata.lts");
    DecoratedLts d = decorate(l, Semantics::language);
    ExplicitMachine mid = reverse_determinize(d, set_of(l, {"x"}));
    CHECK(mid.size() == 4);
    ReverseMachine rev(d, set_of(l, {"x"}));
    FunctionState init = rev.initial();
    for (StateId s = 0; s < l.n_states; ++s) CHECK(init[s].bit == (s == st(l, "y")));

    ExplicitMachine mx = brzozowski_minimize(d, set_of(l, {"x"}));
    ExplicitMachine mu = brzozowski_minimize(d, set_of(l, {"u"}));
    CHECK(mx.size() == 4);
    CHECK(moore_isomorphic(mx, mx.inits[0], mu, mu.inits[0]));
    CHECK(discrete(mx));
}

TEST_CASE("failure minimisation of brz-p")
{
    Lts l = fixture("brz-p.lts");
    DecoratedLts d = decorate(l, Semantics::failure);
    ExplicitMachine mid = reverse_determinize(d, set_of(l, {"p"}));
    CHECK(mid.size() == 4);
    const std::string all = "{{},{a},{b},{a,b},{c},{a,c},{b,c},{a,b,c}}";
    std::vector<std::string> expect_mid{"{{}}", "{{}}", all, "{}"};
    std::sort(expect_mid.begin(), expect_mid.end());
    CHECK(output_strings(mid) == expect_mid);

    BrzozowskiStats stats;
    ExplicitMachine m = brzozowski_minimize(d, set_of(l, {"p"}), kDefaultCap, &stats);
    CHECK(m.size() == 3);
    CHECK(stats.intermediate_states == 4);
    CHECK(stats.final_states == 3);
    CHECK(to_string(m.outputs[m.inits[0]], m.alphabet) == "{{}}");
    std::vector<std::string> expect{"{{}}", all, "{}"};
    std::sort(expect.begin(), expect.end());
    CHECK(output_strings(m) == expect);
    CHECK(discrete(m));
}

TEST_CASE("must minimisation of brz-must")
{
    Lts l = fixture("brz-must.lts");
    DecoratedLts d = decorate(l, Semantics::must);
    ExplicitMachine m = brzozowski_minimize(d, set_of(l, {"x1"}));
    REQUIRE(m.size() == 5);
    std::vector<std::string> expect{"{{},{b}}", "{{},{a},{b}}", "{}", "{{}}", "top"};
    std::sort(expect.begin(), expect.end());
    CHECK(output_strings(m) == expect);
    CHECK(discrete(m));
    CHECK(to_string(m.outputs[m.inits[0]], m.alphabet) == "{{},{b}}");
}

TEST_CASE("trivial machines")
{
    Lts loop = parse_lts("lts 1\nalphabet a\n0 a 0\n");
    DecoratedLts d = decorate(loop, Semantics::trace);
    CHECK(reverse_determinize(d, StateSet::singleton(1, 0)).size() == 1);

    ExplicitMachine m;
    m.labels = {"a"};
    m.outputs = {OutputValue::make_bit(true), OutputValue::make_bit(true)};
    m.next = {{1}, {1}};
    m.inits = {0};
    CHECK(reverse_determinize_moore(m, 0).size() == 1);
    CHECK(moore_isomorphic(m, 0, m, 0));

    ExplicitMachine other = m;
    other.outputs[0] = OutputValue::make_bit(false);
    CHECK_FALSE(moore_isomorphic(m, 0, other, 0));
    REQUIRE(distinguishing_word(m, 0, other, 0));
    CHECK(distinguishing_word(m, 0, other, 0)->empty());

    ExplicitMachine relabelled = m;
    relabelled.labels = {"b"};
    CHECK_THROWS_AS(moore_isomorphic(m, 0, relabelled, 0), std::invalid_argument);
}

TEST_CASE("cycles intermediate machine collapses")
{
    Lts l = gen_cycles(5);
    DecoratedLts d = decorate(l, Semantics::trace);
    StateSet init(l.n_states);
    for (StateId s : {0u, 1u, 3u, 6u, 10u}) init.insert(s);
    CHECK(reverse_determinize(d, init).size() == 1);
}

TEST_CASE("equivalence by minimisation")
{
    Lts f = fixture("fail-pq.lts");
    CHECK(equiv_via_minimization(decorate(f, Semantics::failure), st(f, "p0"), st(f, "q0")));
    Lts r = fixture("rtrace-pq.lts");
    CHECK_FALSE(equiv_via_minimization(decorate(r, Semantics::rtrace), st(r, "p0"), st(r, "q0")));
    CHECK(equiv_via_minimization(decorate(r, Semantics::rtrace), st(r, "p0"), st(r, "p0")));
}

TEST_CASE("per-pass caps name the pass")
{
    Lts l = gen_chain(8);
    DecoratedLts d = decorate(l, Semantics::must);
    try {
        brzozowski_minimize(d, set_of(l, {"x8"}), 4);
        FAIL("expected the cap to trip");
    } catch (const CapExceeded& e) {
        CHECK(e.pass() == "first reversal");
    }
}

TEST_CASE("minimal machine realises the forward behaviour")
{
    Lts l = fixture("brz-must.lts");
    DecoratedLts d = decorate(l, Semantics::must);
    ExplicitMachine m = brzozowski_minimize(d, set_of(l, {"x1"}));
    std::vector<Word> layer{{}};
    for (int len = 0; len <= 5; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            CHECK(behavior(m, m.inits[0], w) == behavior(d, det(l, {"x1"}), w));
            for (LabelId a = 0; a < d.n_labels(); ++a) {
                Word v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        }
        layer = std::move(next);
    }
}
