#include "strongcolor/error.hpp"

namespace strongcolor {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::BadEdgeId: return "BadEdgeId";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotTwoThree: return "NotTwoThree";
    case ErrorKind::ListTooSmall: return "ListTooSmall";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

} // namespace strongcolor
