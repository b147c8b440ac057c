#pragma once

#include <stdexcept>
#include <string>

namespace gvkit {

// Two failure families. Precondition failures mean the input is malformed or
// outside an operation's domain; check failures mean a well-formed input did
// not satisfy an identity (residual or integrality). The CLI maps these to
// exit codes 1 and 2.
enum class ErrorKind { precondition, check_failed };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string module, std::string operation,
        std::string reason, std::string location = {})
      : std::runtime_error(module + "::" + operation + ": " + reason +
                           (location.empty() ? "" : " at " + location)),
        kind_(kind), module_(std::move(module)),
        operation_(std::move(operation)), reason_(std::move(reason)),
        location_(std::move(location)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string &module() const noexcept { return module_; }
  const std::string &operation() const noexcept { return operation_; }
  const std::string &reason() const noexcept { return reason_; }
  const std::string &location() const noexcept { return location_; }

private:
  ErrorKind kind_;
  std::string module_;
  std::string operation_;
  std::string reason_;
  std::string location_;
};

struct PreconditionError : Error {
  PreconditionError(std::string module, std::string operation,
                    std::string reason, std::string location = {})
      : Error(ErrorKind::precondition, std::move(module), std::move(operation),
              std::move(reason), std::move(location)) {}
};

/// Raised when a coefficient outside the known window is required.
struct WindowError : Error {
  WindowError(std::string module, std::string operation, std::string reason,
              std::string location = {})
      : Error(ErrorKind::precondition, std::move(module), std::move(operation),
              std::move(reason), std::move(location)) {}
};

/// A class image left the effective cone.
struct ConeError : Error {
  ConeError(std::string module, std::string operation, std::string reason,
            std::string location = {})
      : Error(ErrorKind::precondition, std::move(module), std::move(operation),
              std::move(reason), std::move(location)) {}
};

struct IntegralityError : Error {
  IntegralityError(std::string module, std::string operation,
                   std::string reason, std::string location = {})
      : Error(ErrorKind::check_failed, std::move(module), std::move(operation),
              std::move(reason), std::move(location)) {}
};

struct ResidualError : Error {
  ResidualError(std::string module, std::string operation, std::string reason,
                std::string location = {})
      : Error(ErrorKind::check_failed, std::move(module), std::move(operation),
              std::move(reason), std::move(location)) {}
};

namespace detail {
template <class E> [[noreturn]] void relocate(const E &e, const std::string &where) {
  throw E(e.module(), e.operation(), e.reason(),
          e.location().empty() ? where : where + " " + e.location());
}
} // namespace detail

/// Runs `step`; any error it raises is rethrown with the same type and
/// `where` prefixed to its location.
template <class F> auto located(const std::string &where, F &&step) -> decltype(step()) {
  try {
    return step();
  } catch (const WindowError &e) {
    detail::relocate(e, where);
  } catch (const ConeError &e) {
    detail::relocate(e, where);
  } catch (const IntegralityError &e) {
    detail::relocate(e, where);
  } catch (const ResidualError &e) {
    detail::relocate(e, where);
  } catch (const PreconditionError &e) {
    detail::relocate(e, where);
  }
}

} // namespace gvkit
