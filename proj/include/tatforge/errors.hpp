#pragma once

#include <stdexcept>
#include <string>

namespace tatforge {

// Bad argument to a generator, scheme, or composition (n below minimum,
// m out of range, non-super chain block, ...).
class invalid_parameter_error : public std::invalid_argument {
public:
    explicit invalid_parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Lookup of a vertex or edge that is not part of the graph.
class not_found_error : public std::out_of_range {
public:
    explicit not_found_error(const std::string& msg) : std::out_of_range(msg) {}
};

// Weight computation over a labeling with unset labels.
class incomplete_labeling_error : public std::runtime_error {
public:
    explicit incomplete_labeling_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structured input (labeling file, edge list, manifest) that does not parse.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, std::string field, const std::string& msg)
        : std::runtime_error(build(line, field, msg)), line_(line), field_(std::move(field)) {}

    int line() const noexcept { return line_; }                 // 0 = unknown
    const std::string& field() const noexcept { return field_; } // empty = none

private:
    static std::string build(int line, const std::string& field, const std::string& msg) {
        std::string s = "parse error";
        if (line > 0) s += " at line " + std::to_string(line);
        if (!field.empty()) s += " (field '" + field + "')";
        s += ": " + msg;
        return s;
    }
    int line_;
    std::string field_;
};

} // namespace tatforge
