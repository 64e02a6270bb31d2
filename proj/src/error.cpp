#include "lexdist/error.hpp"

namespace lexdist {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "invalid-input";
  case ErrorKind::NoSuchIdeal: return "no-such-ideal";
  case ErrorKind::NotLex: return "not-lex";
  case ErrorKind::NotAdmissible: return "not-admissible";
  case ErrorKind::InvalidFamily: return "invalid-family";
  case ErrorKind::BudgetExceeded: return "budget-exceeded";
  case ErrorKind::InternalError: return "internal-error";
  }
  return "unknown";
}

} // namespace lexdist
