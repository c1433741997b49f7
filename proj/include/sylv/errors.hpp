#pragma once

#include <stdexcept>
#include <string>

namespace sylv {

// Error taxonomy, mirrored by the CLI exit codes:
//   argument_error      -> usage / parse problems (exit 2)
//   domain_error        -> valid syntax, invalid mathematical input (exit 3)
//   invariant_violation -> an internal identity failed, i.e. a bug (exit 4)
class argument_error : public std::invalid_argument {
  public:
    explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class dimension_error : public argument_error {
  public:
    explicit dimension_error(const std::string& msg) : argument_error(msg) {}
};

class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Requested exact division has a nonzero remainder.
class divisibility_error : public std::runtime_error {
  public:
    explicit divisibility_error(const std::string& msg) : std::runtime_error(msg) {}
};

class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

class invariant_violation : public std::logic_error {
  public:
    explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace sylv
