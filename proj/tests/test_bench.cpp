#include "helpers.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace semcheck;
using namespace semcheck::testing;

TEST_CASE("generator sizes")
{
    CHECK(gen_interleave(1).n_states == 7);
    CHECK(gen_interleave(8).n_states == 21);
    CHECK(gen_chain(1).n_states == 2);
    CHECK(gen_cycles(5).n_states == 15);
    Lts c = gen_cycles(3);
    LabelId a = 0;
    CHECK(c.succ(0, a).contains(0));
    CHECK(c.succ(1, a).contains(2));
    CHECK(c.succ(2, a).contains(1));
    CHECK(c.succ(5, a).contains(3));
}

TEST_CASE("interleave shape")
{
    Lts l = gen_interleave(2);
    LabelId a = *l.label_index("a"), b = *l.label_index("b");
    CHECK(l.succ(st(l, "x"), b) == set_of(l, {"x", "x1"}));
    CHECK(l.succ(st(l, "x2"), b) == set_of(l, {"u"}));
    CHECK(l.succ(st(l, "u"), l.tau()) == set_of(l, {"u"}));
    CHECK(l.succ(st(l, "y"), a) == set_of(l, {"y", "z"}));
    CHECK(l.succ(st(l, "z"), b) == set_of(l, {"y1"}));
}

TEST_CASE("generators round-trip through text")
{
    for (std::size_t n = 1; n <= 6; ++n)
        for (const Lts& l : {gen_interleave(n), gen_chain(n), gen_cycles(n)}) CHECK(parse_lts(to_text(l)) == l);
}

TEST_CASE("oracle")
{
    Lts e = fixture("eq-automata.lts");
    DecoratedLts de = decorate(e, Semantics::language);
    CHECK(oracle_equal(de, det(e, {"x"}), det(e, {"u"})).equal);
    CHECK(oracle_equal(de, det(e, {"x"}), det(e, {"x"})).equal);
    Lts w = fixture("ct-w.lts");
    DecoratedLts dw = decorate(w, Semantics::ctrace);
    OracleResult r = oracle_equal(dw, det(w, {"w0"}), det(w, {"w0p"}));
    CHECK_FALSE(r.equal);
    CHECK(word_to_string(r.counterexample, dw.labels) == "a");
}

TEST_CASE("fixture loading")
{
    Fixture f = load_fixture("t", "# check: must 0 1 holds\n# check: may 0 1\nlts 2\nalphabet a\n0 a 1\n");
    REQUIRE(f.lts);
    REQUIRE(f.checks.size() == 2);
    CHECK(f.checks[0].sem == Semantics::must);
    CHECK(f.checks[0].expect == true);
    CHECK_FALSE(f.checks[1].expect);
    CHECK_THROWS(load_fixture("t", "# check: nonsense 0 1\nlts 1\nalphabet a\n"));
    CHECK(builtin_fixtures().size() == embedded_fixture_texts().size());
}

TEST_CASE("builtin fixture matrix has no disagreements")
{
    BenchReport r = run_matrix(builtin_fixtures(), {}, {Algorithm::hkc, Algorithm::naive, Algorithm::brzozowski,
                                                      Algorithm::oracle});
    CHECK(r.disagreements.empty());
    for (const auto& rec : r.records) {
        CHECK(rec.error.empty());
        if (rec.expected) CHECK(rec.result == rec.expected);
    }
    auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["schema"] == 1);
    CHECK(j["records"].size() == r.records.size());
    CHECK(report_csv(r).find("fixture,") == 0);
}

TEST_CASE("empty matrix")
{
    BenchReport r = run_matrix({}, {}, {Algorithm::hkc});
    CHECK(r.records.empty());
    CHECK(r.disagreements.empty());
}

TEST_CASE("interleave n=6 under hkc and brzozowski")
{
    Fixture f;
    f.name = "interleave-6";
    f.lts = gen_interleave(6);
    f.checks.push_back({Semantics::must, "x", "y", true});
    BenchReport r = run_matrix({f}, {}, {Algorithm::hkc, Algorithm::brzozowski});
    REQUIRE(r.records.size() == 2);
    CHECK(r.disagreements.empty());
    CHECK(r.records[0].relation == 8);
    CHECK(r.records[1].states > r.records[0].states);
}

TEST_CASE("cap errors are recorded per cell")
{
    Fixture f;
    f.name = "interleave-8";
    f.lts = gen_interleave(8);
    f.checks.push_back({Semantics::must, "x", "y", true});
    BenchReport r = run_matrix({f}, {}, {Algorithm::hkc, Algorithm::naive}, 64);
    REQUIRE(r.records.size() == 2);
    CHECK(r.records[0].result == true);
    CHECK_FALSE(r.records[1].result);
    CHECK_FALSE(r.records[1].error.empty());
}
