// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <stdexcept>
#include <string>

namespace bdisc {

enum class Errc {
  ZeroPolynomial,
  DegreeZero,
  ArityMismatch,
  NotExact,
  Parse,
  InvalidClass,
  DiscriminantParameter,
  NonGenericConfiguration,
  SeedNotSmallEnough,
  InvalidSignature,
  CatalogMissing,
  DiscriminantEndpoint,
  TypeMismatch,
  NotFound,
  EmptyViewport,
  BadAxes,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bdisc
