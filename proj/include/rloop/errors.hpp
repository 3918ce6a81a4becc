#pragma once

// Exception hierarchy. The three bases map onto the CLI exit codes:
// ValidationError -> 1, AlgorithmError -> 2, ParseError -> 3.

#include <stdexcept>
#include <string>

namespace rloop {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlgorithmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ")"
                                    : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

#define RLOOP_ERROR(Name, Base)          \
  class Name : public Base {             \
   public:                               \
    using Base::Base;                    \
  };

// exactnum
RLOOP_ERROR(NonSplittingDenominator, ValidationError)
RLOOP_ERROR(EvalAtPole, ValidationError)
RLOOP_ERROR(DivisionByZero, ValidationError)

// formsla
RLOOP_ERROR(DimensionMismatch, ValidationError)
RLOOP_ERROR(SingularGram, AlgorithmError)
RLOOP_ERROR(NotIsotropic, ValidationError)
RLOOP_ERROR(RealExtensionImpossible, ValidationError)
RLOOP_ERROR(NoFixedLine, ValidationError)
RLOOP_ERROR(SingularMatrix, ValidationError)

// octonion
RLOOP_ERROR(DegeneratePlane, ValidationError)
RLOOP_ERROR(RankSurprise, AlgorithmError)

// loops
RLOOP_ERROR(SingularLoop, ValidationError)
RLOOP_ERROR(InvalidRealPole, ValidationError)

// simplefactor
RLOOP_ERROR(InvalidSpec, ValidationError)
RLOOP_ERROR(AlphaOnAxis, ValidationError)

// factorize
RLOOP_ERROR(NotAMember, ValidationError)
RLOOP_ERROR(NotTwisted, ValidationError)
RLOOP_ERROR(NonTermination, AlgorithmError)
RLOOP_ERROR(NoSplittingLine, AlgorithmError)
RLOOP_ERROR(NonIdentityResidual, AlgorithmError)

// dressperm
RLOOP_ERROR(HolomorphyPrecondition, ValidationError)
RLOOP_ERROR(SingularAtAlpha, ValidationError)
RLOOP_ERROR(PoleClash, ValidationError)
RLOOP_ERROR(IdentityFailure, AlgorithmError)

// affineg2
RLOOP_ERROR(ClosureViolation, ValidationError)
RLOOP_ERROR(NotInPhat, ValidationError)

#undef RLOOP_ERROR

}  // namespace rloop
