#include "relfrac/error.hpp"

namespace relfrac {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameter: return "invalid-parameter";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kSizeLimit: return "size-limit";
    case ErrorKind::kTimeout: return "timeout";
    case ErrorKind::kParseError: return "parse-error";
    case ErrorKind::kScriptError: return "script-error";
    case ErrorKind::kNotVertexTransitive: return "not-vertex-transitive";
    case ErrorKind::kInternalInconsistency: return "internal-inconsistency";
    case ErrorKind::kNonconvergence: return "nonconvergence";
    case ErrorKind::kUndecided: return "undecided";
  }
  return "unknown";
}

}  // namespace relfrac
