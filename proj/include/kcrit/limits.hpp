#pragma once

/**
 * Desk-scale limits shared by the exhaustive algorithms.
 *
 * Defaults may be raised through the KCRIT_LIMITS environment variable, a
 * comma separated list of key=value pairs, e.g.
 *
 *     KCRIT_LIMITS=canonical=20,potential=28
 *
 * Raising them is at your own risk: every algorithm behind these limits is
 * exponential.
 */

#include "kcrit/error.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

namespace kcrit {

struct Limits
{
    int canonical_max_n = 16;
    int potential_max_n = 24;
    int coloring_max_n_small_c = 32; // c <= 6
    int coloring_max_n_large_c = 24; // c >= 7
    int oracle_max_n = 13;
    int search_max_n = 12;
    int minimizer_cap = 32;

    auto coloring_max_n(int colours) const -> int
    {
        return colours <= 6 ? coloring_max_n_small_c : coloring_max_n_large_c;
    }

    /// Parse "key=value,key=value". Unknown keys are an error.
    static auto parse(const std::string & spec, Limits base) -> Limits
    {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw InputError("KCRIT_LIMITS: expected key=value, got '" + item + "'");
            auto key = item.substr(0, eq);
            int value = 0;
            try {
                value = std::stoi(item.substr(eq + 1));
            }
            catch (const std::exception &) {
                throw InputError("KCRIT_LIMITS: bad value in '" + item + "'");
            }
            if (key == "canonical")
                base.canonical_max_n = value;
            else if (key == "potential")
                base.potential_max_n = value;
            else if (key == "coloring")
                base.coloring_max_n_small_c = value;
            else if (key == "coloring_large")
                base.coloring_max_n_large_c = value;
            else if (key == "oracle")
                base.oracle_max_n = value;
            else if (key == "search")
                base.search_max_n = value;
            else if (key == "minimizers")
                base.minimizer_cap = value;
            else
                throw InputError("KCRIT_LIMITS: unknown key '" + key + "'");
        }
        return base;
    }

    static auto parse(const std::string & spec) -> Limits
    {
        return parse(spec, Limits{});
    }

    static auto from_environment() -> Limits
    {
        const char * env = std::getenv("KCRIT_LIMITS");
        return env ? parse(env) : Limits{};
    }
};

/// Process-wide limits, read once from the environment.
inline auto default_limits() -> const Limits &
{
    static const Limits limits = Limits::from_environment();
    return limits;
}

}
