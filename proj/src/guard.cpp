#include "staruniv/guard.hpp"

#include <cstdlib>
#include <string>

#include "staruniv/error.hpp"

namespace staruniv {

long long guard_limit(long long default_limit) {
    const char* env = std::getenv("STARUNIV_GUARD");
    if (!env)
        return default_limit;
    std::string s(env);
    if (s == "off" || s == "0")
        return -1; // disabled
    long long factor = std::strtoll(s.c_str(), nullptr, 10);
    if (factor <= 0)
        return default_limit;
    return default_limit * factor;
}

void check_guard(const std::string& what, long long value, long long default_limit) {
    long long limit = guard_limit(default_limit);
    if (limit >= 0 && value > limit)
        throw resource_error(what + " exceeds resource guard (" + std::to_string(value) +
                             " > " + std::to_string(limit) +
                             "); set STARUNIV_GUARD to override");
}

} // namespace staruniv
