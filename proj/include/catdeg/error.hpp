#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catdeg {

enum class Errc {
  EmptyGenerators,
  NonPositiveGenerator,
  DuplicateGenerator,
  NotCoprime,
  NotMinimal,
  Overflow,
  NotAnElement,
  NegativeElement,
  EmptySet,
  DimensionMismatch,
  FactorizationNotInSet,
  NotEmbeddingDimension3,
  NotCoprimePair,
  UniqueFactorization,
  BadParameters,
  NotDistinctPrimes,
  TooFew,
  OrderTooSmall,
  OrderTooLarge,
  GroupMismatch,
  NotZeroSum,
};

std::string_view errc_name(Errc code) noexcept;

/// Validation failure raised by every public operation in the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised when a proposed generator is a nonnegative combination of the others.
/// `witness[j]` is the multiplicity of `others[j]` in that combination.
class NotMinimalError : public Error {
 public:
  NotMinimalError(std::int64_t generator, std::vector<std::int64_t> others,
                  std::vector<std::int64_t> witness);

  std::int64_t generator() const noexcept { return generator_; }
  const std::vector<std::int64_t>& others() const noexcept { return others_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  std::int64_t generator_;
  std::vector<std::int64_t> others_;
  std::vector<std::int64_t> witness_;
};

}  // namespace catdeg
