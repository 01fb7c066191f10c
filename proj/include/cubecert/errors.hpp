#pragma once

#include <stdexcept>
#include <string>

namespace cubecert {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundedError : Error {
  UnboundedError() : Error("polytope is unbounded") {}
};

struct OriginNotInteriorError : Error {
  explicit OriginNotInteriorError(const std::string& what) : Error(what) {}
};

struct EmptyInteriorError : Error {
  EmptyInteriorError() : Error("polytope has empty interior") {}
};

struct RankDeficientError : Error {
  explicit RankDeficientError(const std::string& what) : Error(what) {}
};

struct DegenerateInputError : Error {
  explicit DegenerateInputError(const std::string& what) : Error(what) {}
};

struct DegenerateSimplexError : Error {
  explicit DegenerateSimplexError(const std::string& what) : Error(what) {}
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

struct UnsupportedDimensionError : Error {
  explicit UnsupportedDimensionError(const std::string& what) : Error(what) {}
};

struct HypothesisFailedError : Error {
  explicit HypothesisFailedError(const std::string& what) : Error(what) {}
};

struct NotUnitVectorsError : Error {
  explicit NotUnitVectorsError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace cubecert
