#pragma once

#include <string>

namespace staruniv {

// Resource guards protect the exponential searches from oversized inputs.
// STARUNIV_GUARD=off disables them, STARUNIV_GUARD=<positive int> multiplies
// every default limit by that factor.
long long guard_limit(long long default_limit);

// Throws resource_error when value exceeds the (possibly scaled) limit.
void check_guard(const std::string& what, long long value, long long default_limit);

} // namespace staruniv
