// Command-line front end over the semcheck C API.
//
// Exit codes: 0 the relation holds (or the command succeeded), 1 it fails,
// 2 operational error.

#include "semcheck/semcheck.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

bool read_input(const std::string& path, std::string& out)
{
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

std::string basename_of(const std::string& path)
{
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.rfind('.');
    return dot == std::string::npos ? base : base.substr(0, dot);
}

int fail_with(const std::string& what)
{
    std::cerr << "semcheck: " << what << '\n';
    return kError;
}

// Owns a parsed system for the duration of one command.
class System {
public:
    ~System() { sc_system_free(sys_); }
    bool load(const std::string& path)
    {
        std::string text;
        if (!read_input(path, text)) {
            error_ = "cannot read '" + path + "'";
            return false;
        }
        if (sc_system_parse(text.data(), text.size(), &sys_) != SC_OK) {
            error_ = path + ": " + sc_last_error();
            return false;
        }
        return true;
    }
    const sc_system* get() const { return sys_; }
    const std::string& error() const { return error_; }

private:
    sc_system* sys_ = nullptr;
    std::string error_;
};

int emit(sc_status st, char* report, int holds, bool decision)
{
    if (st != SC_OK) return fail_with(sc_last_error());
    std::cout << report << '\n';
    sc_string_free(report);
    if (!decision) return kHolds;
    std::cerr << (holds ? "holds" : "does not hold") << '\n';
    return holds ? kHolds : kFails;
}

int run_bench(const std::vector<std::string>& fixtures, const std::vector<std::string>& families,
              const std::string& sem, const std::string& algos, const std::string& format, std::uint64_t cap)
{
    sc_bench* b = sc_bench_new();
    auto done = [&](int code) {
        sc_bench_free(b);
        return code;
    };
    for (const auto& path : fixtures) {
        std::string text;
        if (!read_input(path, text)) return done(fail_with("cannot read '" + path + "'"));
        if (sc_bench_add_fixture(b, basename_of(path).c_str(), text.c_str()) != SC_OK)
            return done(fail_with(path + ": " + sc_last_error()));
    }
    for (const auto& spec : families) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) return done(fail_with("--family expects name:n, got '" + spec + "'"));
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(spec.substr(colon + 1)));
        } catch (const std::exception&) {
            return done(fail_with("bad size in '" + spec + "'"));
        }
        if (sc_bench_add_family(b, spec.substr(0, colon).c_str(), k) != SC_OK) return done(fail_with(sc_last_error()));
    }
    if (fixtures.empty() && families.empty() && sc_bench_add_builtin_fixtures(b) != SC_OK)
        return done(fail_with(sc_last_error()));

    char* report = nullptr;
    int agree = 0;
    if (sc_bench_run(b, sem.c_str(), algos.c_str(), format.c_str(), cap, &agree, &report) != SC_OK)
        return done(fail_with(sc_last_error()));
    std::cout << report;
    if (format == "json") std::cout << '\n';
    sc_string_free(report);
    std::cerr << (agree ? "all cells agree" : "disagreements found") << '\n';
    return done(agree ? kHolds : kFails);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decide decorated trace and testing equivalences on finite transition systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sc_version());

    std::string file, s1, s2, sem, algo = "hkc", inits, family, format = "json", algos;
    std::uint64_t cap = SC_DEFAULT_CAP;
    unsigned n = 0;
    bool with_trace = false;
    std::vector<std::string> fixtures;
    std::vector<std::string> families;

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two states");
    equiv->add_option("--sem", sem, "Semantics")->required();
    equiv->add_option("--algo", algo, "hkc, naive, brzozowski or oracle")
        ->check(CLI::IsMember({"hkc", "naive", "brzozowski", "oracle"}));
    equiv->add_option("--cap", cap, "Determinised state cap");
    equiv->add_option("file", file, "LTS file, - for stdin")->required();
    equiv->add_option("s1", s1)->required();
    equiv->add_option("s2", s2)->required();

    auto* preorder = app.add_subcommand("preorder", "Decide the must or may preorder s1 below s2");
    preorder->add_option("--sem", sem, "must or may")->required();
    preorder->add_option("--cap", cap, "Determinised state cap");
    preorder->add_option("file", file)->required();
    preorder->add_option("s1", s1)->required();
    preorder->add_option("s2", s2)->required();

    auto* minimize = app.add_subcommand("minimize", "Emit the minimal Moore machine of a set of states");
    minimize->add_option("--sem", sem, "Semantics")->required();
    minimize->add_option("--init", inits, "Comma-separated initial states")->required();
    minimize->add_option("--cap", cap, "State cap per reversal");
    minimize->add_option("file", file)->required();

    auto* gps = app.add_subcommand("gps-equiv", "Decide equivalence of two GPS states");
    gps->add_option("--sem", sem, "g_ready, g_failure, g_mfailure, g_trace or g_mtrace")->required();
    gps->add_flag("--with-trace", with_trace, "Also require g_trace equality");
    gps->add_option("file", file)->required();
    gps->add_option("s1", s1)->required();
    gps->add_option("s2", s2)->required();

    auto* gen = app.add_subcommand("gen", "Write a benchmark family member in LTS format");
    gen->add_option("--family", family)->required()->check(CLI::IsMember({"interleave", "chain", "cycles"}));
    gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "Run the algorithm comparison matrix");
    bench->add_option("--sem", sem, "Comma-separated semantics; default: each fixture's own checks");
    bench->add_option("--algo", algos, "Comma-separated algorithms");
    bench->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    bench->add_option("--family", families, "name:n, repeatable");
    bench->add_option("--cap", cap, "Determinised state cap");
    bench->add_option("fixtures", fixtures, "Fixture files; default: the embedded fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    if (*gen) {
        char* text = nullptr;
        if (sc_generate(family.c_str(), n, &text) != SC_OK) return fail_with(sc_last_error());
        std::cout << text;
        sc_string_free(text);
        return kHolds;
    }
    if (*bench) return run_bench(fixtures, families, sem, algos, format, cap);

    System sys;
    if (!sys.load(file)) return fail_with(sys.error());
    char* report = nullptr;
    int holds = 0;
    sc_status st = SC_ERR_ARGUMENT;
    bool decision = true;
    if (*equiv) {
        st = sc_equiv(sys.get(), sem.c_str(), algo.c_str(), s1.c_str(), s2.c_str(), cap, &holds, &report);
    } else if (*preorder) {
        st = sc_preorder(sys.get(), sem.c_str(), s1.c_str(), s2.c_str(), cap, &holds, &report);
    } else if (*minimize) {
        st = sc_minimize(sys.get(), sem.c_str(), inits.c_str(), cap, &report);
        decision = false;
    } else if (*gps) {
        st = sc_gps_equiv(sys.get(), sem.c_str(), with_trace ? 1 : 0, s1.c_str(), s2.c_str(), &holds, &report);
    } else {
        return kError;
    }
    return emit(st, report, holds, decision);
}
