#ifndef EDENSE_ERROR_HPP_
#define EDENSE_ERROR_HPP_

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edense {

  enum class ErrorCode {
    MalformedTable,
    OutOfRangeEntry,
    NonAssociative,
    BadIdentityHint,
    ParseError,
    NotSemilattice,
    SubsetTooLarge,
    CompositionViolation,
    NotCancellative,
    NotReflexive,
    WellDefinednessViolation,
    NotIdempotent,
    CarrierTooLarge,
    BadSubsemigroup,
    NotSelfConjugate,
    InternalInconsistency,
    NotAssociative,
    MissingIdentity,
    BadComposability,
    ActionAxiomViolation,
    PreconditionFailed,
    NotGroup,
    UnsupportedBand,
    OrderTooLarge,
    UnknownFixture,
    NotPrime,
    NoDecryptKey,
    NotAssociativeAction,
    NoMinimumIdempotent,
  };

  constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::MalformedTable: return "MalformedTable";
      case ErrorCode::OutOfRangeEntry: return "OutOfRangeEntry";
      case ErrorCode::NonAssociative: return "NonAssociative";
      case ErrorCode::BadIdentityHint: return "BadIdentityHint";
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::NotSemilattice: return "NotSemilattice";
      case ErrorCode::SubsetTooLarge: return "SubsetTooLarge";
      case ErrorCode::CompositionViolation: return "CompositionViolation";
      case ErrorCode::NotCancellative: return "NotCancellative";
      case ErrorCode::NotReflexive: return "NotReflexive";
      case ErrorCode::WellDefinednessViolation: return "WellDefinednessViolation";
      case ErrorCode::NotIdempotent: return "NotIdempotent";
      case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
      case ErrorCode::BadSubsemigroup: return "BadSubsemigroup";
      case ErrorCode::NotSelfConjugate: return "NotSelfConjugate";
      case ErrorCode::InternalInconsistency: return "InternalInconsistency";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::MissingIdentity: return "MissingIdentity";
      case ErrorCode::BadComposability: return "BadComposability";
      case ErrorCode::ActionAxiomViolation: return "ActionAxiomViolation";
      case ErrorCode::PreconditionFailed: return "PreconditionFailed";
      case ErrorCode::NotGroup: return "NotGroup";
      case ErrorCode::UnsupportedBand: return "UnsupportedBand";
      case ErrorCode::OrderTooLarge: return "OrderTooLarge";
      case ErrorCode::UnknownFixture: return "UnknownFixture";
      case ErrorCode::NotPrime: return "NotPrime";
      case ErrorCode::NoDecryptKey: return "NoDecryptKey";
      case ErrorCode::NotAssociativeAction: return "NotAssociativeAction";
      case ErrorCode::NoMinimumIdempotent: return "NoMinimumIdempotent";
    }
    return "Unknown";
  }

  /// Every failure in the library is reported through this exception.  The
  /// witness holds the ids that demonstrate the failure (for example the
  /// triple (i, j, k) for NonAssociative), in the order documented at the
  /// throw site.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail,
          std::vector<std::size_t> witness = {})
        : std::runtime_error(format(code, detail, witness)),
          _code(code),
          _witness(std::move(witness)) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    static std::string format(ErrorCode                       code,
                              std::string const&              detail,
                              std::vector<std::size_t> const& witness) {
      std::ostringstream os;
      os << to_string(code);
      if (!detail.empty()) {
        os << ": " << detail;
      }
      if (!witness.empty()) {
        os << " [witness";
        for (auto w : witness) {
          os << ' ' << w;
        }
        os << ']';
      }
      return os.str();
    }

    ErrorCode                _code;
    std::vector<std::size_t> _witness;
  };

}  // namespace edense

#endif  // EDENSE_ERROR_HPP_
