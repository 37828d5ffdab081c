#include "catdeg/error.hpp"

#include <sstream>

namespace catdeg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::NonPositiveGenerator: return "NonPositiveGenerator";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::Overflow: return "Overflow";
    case Errc::NotAnElement: return "NotAnElement";
    case Errc::NegativeElement: return "NegativeElement";
    case Errc::EmptySet: return "EmptySet";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FactorizationNotInSet: return "FactorizationNotInSet";
    case Errc::NotEmbeddingDimension3: return "NotEmbeddingDimension3";
    case Errc::NotCoprimePair: return "NotCoprimePair";
    case Errc::UniqueFactorization: return "UniqueFactorization";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotDistinctPrimes: return "NotDistinctPrimes";
    case Errc::TooFew: return "TooFew";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotZeroSum: return "NotZeroSum";
  }
  return "Unknown";
}

namespace {

std::string describe_witness(std::int64_t generator,
                             const std::vector<std::int64_t>& others,
                             const std::vector<std::int64_t>& witness) {
  std::ostringstream out;
  out << generator << " =";
  bool first = true;
  for (std::size_t j = 0; j < others.size(); ++j) {
    if (witness[j] == 0) continue;
    out << (first ? " " : " + ") << witness[j] << "*" << others[j];
    first = false;
  }
  return out.str();
}

}  // namespace

NotMinimalError::NotMinimalError(std::int64_t generator,
                                 std::vector<std::int64_t> others,
                                 std::vector<std::int64_t> witness)
    : Error(Errc::NotMinimal, describe_witness(generator, others, witness)),
      generator_(generator),
      others_(std::move(others)),
      witness_(std::move(witness)) {}

}  // namespace catdeg
