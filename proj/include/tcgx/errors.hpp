#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcgx {

/// A value lies outside the legal domain of a field (bad argument, not bad bytes).
class DomainError : public std::invalid_argument
{
public:
    DomainError(std::string field, const std::string& message)
        : std::invalid_argument(field.empty() ? message : field + ": " + message), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Malformed binary input. Offsets are absolute within the buffer being decoded.
class DecodeError : public std::runtime_error
{
public:
    DecodeError(std::size_t offset, std::string message)
        : std::runtime_error(format(offset, std::nullopt, message)), offset_(offset), detail_(std::move(message))
    {
    }

    DecodeError(std::size_t offset, std::size_t element, std::string message)
        : std::runtime_error(format(offset, element, message)),
          offset_(offset),
          element_(element),
          detail_(std::move(message))
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    std::optional<std::size_t> element() const noexcept { return element_; }
    const std::string& detail() const noexcept { return detail_; }

    /// Same error, shifted by `base` bytes and tagged with an element index.
    DecodeError relocated(std::size_t base, std::optional<std::size_t> element) const
    {
        if (element)
            return DecodeError(offset_ + base, *element, detail_);
        return DecodeError(offset_ + base, detail_);
    }

private:
    static std::string format(std::size_t offset, std::optional<std::size_t> element, const std::string& message)
    {
        std::string s = "decode error at byte " + std::to_string(offset);
        if (element)
            s += " (element " + std::to_string(*element) + ")";
        return s + ": " + message;
    }

    std::size_t offset_;
    std::optional<std::size_t> element_;
    std::string detail_;
};

/// Malformed or inconsistent standards configuration.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A standards-conformance finding. Violations are data, not errors.
struct Violation
{
    static constexpr std::size_t no_element = std::numeric_limits<std::size_t>::max();

    std::string field;
    std::string message;
    std::size_t element = no_element;

    std::string to_string() const
    {
        std::string s;
        if (element != no_element)
            s += "element " + std::to_string(element) + ": ";
        return s + field + ": " + message;
    }
};

using Violations = std::vector<Violation>;

} // namespace tcgx
