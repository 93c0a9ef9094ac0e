#pragma once

#include <stdexcept>
#include <string>

namespace mumode {

/// Shape or dimension mismatch between operands.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Invalid argument value (bad mode index, malformed permutation, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure: singular pivot, eigensolver non-convergence, CG breakdown.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-supplied operator violated its declared contract.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// The error types are shared by every module namespace.
namespace core {
using mumode::ArgumentError;
using mumode::ContractError;
using mumode::NumericalError;
using mumode::SizeError;
}  // namespace core

}  // namespace mumode
