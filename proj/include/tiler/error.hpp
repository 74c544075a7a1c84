#pragma once

#include <stdexcept>
#include <string>

namespace tiler {

enum class ErrorCode {
  Parse,
  NotClosed,
  SelfIntersecting,
  EmptyInterior,
  NotAdjacent,
  NotTileable,
  OutsideRegion,
  CapExceeded,
  RadiusExceeded,
  InvalidArgument,
  InternalInconsistency,
  Io,
};

const char* to_string(ErrorCode code);

class TilerError : public std::runtime_error {
 public:
  TilerError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tiler
