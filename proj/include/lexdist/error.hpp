#ifndef LEXDIST_ERROR_HPP
#define LEXDIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lexdist {

enum class ErrorKind {
  InvalidInput,
  NoSuchIdeal,
  NotLex,
  NotAdmissible,
  InvalidFamily,
  BudgetExceeded,
  InternalError,
};

const char* errorKindName(ErrorKind kind);

/// Base exception for every failure surfaced by the library. The kind
/// drives CLI exit codes; `degree()` is set when a specific degree is at
/// fault (negative otherwise).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what, int degree = -1)
    : std::runtime_error(what), mKind(kind), mDegree(degree) {}

  ErrorKind kind() const { return mKind; }
  int degree() const { return mDegree; }

private:
  ErrorKind mKind;
  int mDegree;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what, int degree = -1) {
  throw Error(kind, what, degree);
}

} // namespace lexdist

#endif
