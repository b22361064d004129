#pragma once

#include <stdexcept>
#include <string>

namespace comdec {

/** Base class for all toolkit errors. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// field layer
class NonPrimeModulus final : public Error { public: using Error::Error; };
class DivisionByZero final : public Error { public: using Error::Error; };
class FieldMismatch final : public Error { public: using Error::Error; };
class ParseError final : public Error { public: using Error::Error; };

// linear algebra
class DimensionMismatch final : public Error { public: using Error::Error; };
class NotSquare final : public Error { public: using Error::Error; };
class AmbientMismatch final : public Error { public: using Error::Error; };
class NotInvertible final : public Error { public: using Error::Error; };

// algebra core
class AlgebraMismatch final : public Error { public: using Error::Error; };
class NotValidated final : public Error { public: using Error::Error; };
class NotInSum final : public Error { public: using Error::Error; };
class UnsupportedCharacteristic final : public Error { public: using Error::Error; };

// commutator construction
class NotTraceless final : public Error { public: using Error::Error; };
class InsufficientFieldElements final : public Error { public: using Error::Error; };
class ScalarObstruction final : public Error { public: using Error::Error; };
class CharDividesN final : public Error { public: using Error::Error; };

// quaternion
class InvalidParams final : public Error { public: using Error::Error; };
class InvalidPrime final : public Error { public: using Error::Error; };
class ZeroArgument final : public Error { public: using Error::Error; };
class UnsupportedField final : public Error { public: using Error::Error; };

// free polynomials
class MissingArgument final : public Error { public: using Error::Error; };
class SizeLimit final : public Error { public: using Error::Error; };

// subfields
class NotDivisionAlgebra final : public Error { public: using Error::Error; };
class NotAField final : public Error { public: using Error::Error; };
class ZeroGamma final : public Error { public: using Error::Error; };

// serialization
class SchemaError final : public Error { public: using Error::Error; };

}  // namespace comdec
