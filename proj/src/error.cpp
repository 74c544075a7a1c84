#include "tiler/error.hpp"

namespace tiler {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotTileable: return "NotTileable";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RadiusExceeded: return "RadiusExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tiler
