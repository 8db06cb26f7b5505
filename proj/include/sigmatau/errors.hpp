#pragma once

#include <stdexcept>
#include <string>

namespace sigmatau {

enum class Errc {
  NonCommutative,
  NonAssociative,
  BadUnit,
  DimensionMismatch,
  NotAnIdeal,
  NotSquarefree,
  DisallowedD,
  TooLargeToFactor,
  SigmaEqualsTau,
  InexactDivision,
  BothZero,
  TauNotInvertible,
  SigmaNotInvertible,
  LeibnizViolated,
  DiagramBroken,
  KernelNotContained,
  InvertibleEndo,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace sigmatau
