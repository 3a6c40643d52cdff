#pragma once

#include "bench.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace semcheck::testing {

inline std::string fixture_text(const std::string& name)
{
    std::ifstream in(std::string(SEMCHECK_FIXTURE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Lts fixture(const std::string& name)
{
    return parse_lts(fixture_text(name));
}

inline StateId st(const Lts& l, const std::string& name)
{
    auto s = l.resolve_state(name);
    if (!s) throw std::runtime_error("no state " + name);
    return *s;
}

inline StateSet set_of(const Lts& l, std::initializer_list<const char*> names)
{
    StateSet s(l.n_states);
    for (const char* n : names) s.insert(st(l, n));
    return s;
}

inline DetState det(const Lts& l, std::initializer_list<const char*> names)
{
    return DetState::of(set_of(l, names));
}

inline Word word(const DecoratedLts& d, std::initializer_list<const char*> labels)
{
    Word w;
    for (const char* s : labels)
        for (LabelId i = 0; i < d.labels.size(); ++i)
            if (d.labels[i] == s) w.push_back(i);
    return w;
}

} // namespace semcheck::testing
