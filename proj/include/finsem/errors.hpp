#pragma once

#include <stdexcept>
#include <string>

namespace finsem {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// order-core
struct AntisymmetryViolation : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };
struct DuplicateElement : Error { using Error::Error; };
struct SizeCapExceeded : Error { using Error::Error; };

// upset-algebra
struct BaseMismatch : Error { using Error::Error; };
struct LatticeLawViolation : Error { using Error::Error; };
struct NotPrimeAlgebraic : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };

// modal-order
struct BimoduleLawViolation : Error { using Error::Error; };
struct NotJoinPreserving : Error { using Error::Error; };
struct NotABimoduleMorphism : Error { using Error::Error; };

// logic-front
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};
struct UnknownWorld : Error { using Error::Error; };
struct UnknownVariable : Error { using Error::Error; };
struct NoAccessibilityRelation : Error { using Error::Error; };
struct EquivalenceFailure : Error { using Error::Error; };

// fincat-core
struct MissingComposite : Error { using Error::Error; };
struct CompositionConflict : Error { using Error::Error; };
struct AssociativityViolation : Error { using Error::Error; };
struct IdentityViolation : Error { using Error::Error; };
struct UnknownObject : Error { using Error::Error; };
struct UnknownArrow : Error { using Error::Error; };

// presheaf-engine / profunctor-modal
struct FunctorLawViolation : Error { using Error::Error; };
struct NaturalityViolation : Error { using Error::Error; };
struct BaseNotCauchyComplete : Error { using Error::Error; };

// cli-harness
struct SchemaError : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Raised when two independently computed routes of a lemma disagree.
// This is never a result: it means the implementation is broken.
struct LemmaCheckFailure : Error { using Error::Error; };

}  // namespace finsem
