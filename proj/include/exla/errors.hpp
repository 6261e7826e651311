#pragma once

#include <stdexcept>
#include <string>

namespace exla {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct NonSquare : Error {
  NonSquare() : Error("matrix is not square") {}
};
struct Inconsistent : Error {
  Inconsistent() : Error("linear system is inconsistent") {}
};
struct InternalMismatch : Error {
  explicit InternalMismatch(const std::string& w) : Error("internal mismatch: " + w) {}
};
struct NotOrthogonal : Error {
  NotOrthogonal() : Error("matrix is not orthogonal (A tA != E)") {}
};
struct NotSkew : Error {
  NotSkew() : Error("matrix is not skew-symmetric") {}
};
struct NotTraceless : Error {
  NotTraceless() : Error("trace is nonzero") {}
};
struct NotInE6 : Error {
  NotInE6() : Error("operator is not in the e6 span") {}
};
struct NotInE7 : Error {
  NotInE7() : Error("operator is not in the e7 span") {}
};
struct NotSp3 : Error {
  NotSp3() : Error("matrix is not in sp(3,H^C) (D + D* != 0)") {}
};
struct NotSU3CC : Error {
  NotSU3CC() : Error("matrix is not in su(3,C^C)") {}
};
struct NotNilpotent : Error {
  NotNilpotent() : Error("operator is not nilpotent") {}
};
struct NonGenericCartanElement : Error {
  explicit NonGenericCartanElement(const std::string& w)
      : Error("generic Cartan element invalid: " + w) {}
};
struct NonSplitSpectrum : Error {
  NonSplitSpectrum() : Error("spectrum does not split over Q(i)") {}
};
struct DegenerateCartanForm : Error {
  DegenerateCartanForm() : Error("Killing form degenerate on the Cartan subalgebra") {}
};
struct UnpairedRoot : Error {
  UnpairedRoot() : Error("root without matching negative") {}
};
struct NotCrystallographic : Error {
  NotCrystallographic() : Error("Cartan matrix entry is not an integer") {}
};
struct UnknownType : Error {
  UnknownType() : Error("Cartan matrix matches no standard type of rank <= 8") {}
};

}  // namespace exla
