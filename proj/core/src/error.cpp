#include "pdc/error.hpp"

namespace pdc {

std::string_view error_code_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
      return "E_USAGE";
    case ErrorCode::kDomain:
      return "E_DOMAIN";
    case ErrorCode::kSolver:
      return "E_SOLVER";
    case ErrorCode::kIo:
      return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace pdc
