#pragma once

#include "brzozowski.hpp"
#include "gps.hpp"
#include "hkc.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace semcheck {

Lts gen_interleave(std::size_t n);
Lts gen_chain(std::size_t n);
Lts gen_cycles(std::size_t n);

struct OracleResult {
    bool equal = false;
    Word counterexample;
    std::size_t joint_states = 0;
};

// Compares the behaviours of x and y on every word shorter than the number of
// states of their joint reachable machine.
OracleResult oracle_equal(const DecoratedLts& d, const DetState& x, const DetState& y, std::size_t cap = kDefaultCap);

enum class Algorithm { hkc, naive, brzozowski, oracle };
std::optional<Algorithm> parse_algorithm(std::string_view s);
const char* to_string(Algorithm a);

struct CheckResult {
    bool equal = false;
    Word counterexample;
    std::size_t states = 0;
    std::size_t pairs = 0;
    double time_ms = 0;
    std::vector<std::pair<DetState, DetState>> witness;
};

CheckResult run_check(const DecoratedLts& d, Algorithm algo, StateId x, StateId y, std::size_t cap = kDefaultCap);

struct RandomParams {
    std::size_t min_states = 2;
    std::size_t max_states = 6;
    std::size_t max_labels = 2;
    double density = 0.35;
    double tau_density = 0.2;
};

Lts random_lts(std::mt19937_64& rng, const RandomParams& p, bool with_tau, bool with_finals = false);
Gps random_acyclic_gps(std::mt19937_64& rng, std::size_t max_states = 5, std::size_t labels = 2);

struct FixtureCheck {
    Semantics sem;
    std::string x, y;
    std::optional<bool> expect;
};

struct Fixture {
    std::string name;
    std::optional<Lts> lts;
    std::optional<Gps> gps;
    std::vector<FixtureCheck> checks;
};

// Reads `# check: <sem> <x> <y> [holds|fails]` comment lines next to the system.
Fixture load_fixture(const std::string& name, std::string_view text);
std::vector<Fixture> builtin_fixtures();
const std::vector<std::pair<std::string, std::string>>& embedded_fixture_texts();

struct BenchRecord {
    std::string fixture;
    std::string semantics;
    std::string algorithm;
    std::string x, y;
    std::optional<bool> result;
    std::optional<bool> expected;
    std::size_t states = 0;
    std::size_t relation = 0;
    double time_ms = 0;
    std::string error;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<std::string> disagreements;
};

// With an empty semantics list every fixture runs its own checks; otherwise
// every listed semantics is run on the fixture's check pairs.
BenchReport run_matrix(const std::vector<Fixture>& fixtures, const std::vector<Semantics>& sems,
                       const std::vector<Algorithm>& algos, std::size_t cap = kDefaultCap);

std::string report_csv(const BenchReport& r);
std::string report_json(const BenchReport& r);

} // namespace semcheck
