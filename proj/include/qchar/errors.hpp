#pragma once

#include <stdexcept>
#include <string>

namespace qchar {

/// Input outside an operation's domain (wrong parity, non-dominant, ...).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed weight text.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A division that should be exact left a remainder. Always a bug upstream.
class NonExactDivision : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Weight is neither totally connected nor totally disconnected.
class MixedWeight : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

namespace detail {
inline void require(bool cond, const std::string &what) {
    if (!cond)
        throw DomainError(what);
}
} // namespace detail

} // namespace qchar
