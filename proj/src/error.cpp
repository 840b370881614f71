#include "bipnet/error.hpp"

namespace bipnet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::empty_graph: return "empty_graph";
    case ErrorKind::scale_limit: return "scale_limit";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::ambiguous: return "ambiguous";
    case ErrorKind::domain: return "domain";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace bipnet
