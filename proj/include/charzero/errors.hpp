#pragma once

#include <stdexcept>
#include <string>

namespace charzero {

/// Malformed input text (e.g. JSON that does not parse).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input parsed but does not match the table schema. `field()` names the offending key.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string field, const std::string& what)
        : std::runtime_error("schema error at '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact solver was asked for an instance beyond its supported size.
class UnsupportedSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some nonlinear character has no zero, so no cover exists.
class NoCoverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two equivalent characterisations disagreed on a table that passed validation.
class DataIntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace charzero
