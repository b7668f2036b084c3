#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace staruniv {

using json = nlohmann::ordered_json;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input bytes. byte_offset points at the first offending byte.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t byte_offset)
        : error(msg), byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

// A stated precondition does not hold. Carries a certificate of the
// violation when one exists (e.g. a star witness for a T-freeness check).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg, json certificate = nullptr)
        : error(msg), certificate(std::move(certificate)) {}
    json certificate;
};

// An operation hit a structurally impossible case (bare cycle under
// suppression, parallel-edge creation, ...). Names the offending vertices.
class structural_error : public error {
public:
    structural_error(const std::string& msg, std::vector<int> vertices = {})
        : error(msg), vertices(std::move(vertices)) {}
    std::vector<int> vertices;
};

// A size or budget guard tripped. Guards can be scaled with STARUNIV_GUARD.
class resource_error : public error {
public:
    using error::error;
};

} // namespace staruniv
