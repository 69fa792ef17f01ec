// errors.hpp -- exception types shared across the library.
#ifndef COXETER_ERRORS_HPP
#define COXETER_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxeter {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name(name) {}
  std::string name;
};

struct InvalidMatrix : Error {
  using Error::Error;
};

// Raised when a breadth-first closure would exceed its element cap. Callers
// distinguish "the subset is not spherical" from "the cap is too small" by
// classifying the subset.
struct CapExceeded : Error {
  explicit CapExceeded(std::uint64_t cap, const std::string& what = "enumeration cap exceeded")
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap(cap) {}
  std::uint64_t cap;
};

struct MixedMatrices : Error {
  MixedMatrices() : Error("elements belong to different Coxeter matrices") {}
};

struct NotRightAngled : Error {
  NotRightAngled(const std::string& s, const std::string& t, const std::string& label)
      : Error("generator '" + s + "' is not right-angled: m(" + s + "," + t + ") = " + label),
        offending(t) {}
  std::string offending;
};

struct SystemNotRightAngled : Error {
  explicit SystemNotRightAngled(const std::string& s)
      : Error("generator '" + s + "' of the system is not right-angled") {}
};

struct OddClassNotSingleton : Error {
  explicit OddClassNotSingleton(const std::string& s)
      : Error("the odd class of '" + s + "' is not the singleton {" + s + "}") {}
};

struct NotInvolution : Error {
  NotInvolution() : Error("element is not an involution") {}
};

struct NotAReflection : Error {
  NotAReflection() : Error("element is not a reflection") {}
};

struct NotIrreducible : Error {
  NotIrreducible() : Error("subset is not a single irreducible component") {}
};

struct ComponentNotMinusOneType : Error {
  ComponentNotMinusOneType() : Error("component is not of (-1)-type") {}
};

struct CandidateNotProper : Error {
  CandidateNotProper()
      : Error("blow-down candidate is not proper; apply a diagram twist first") {}
};

struct CandidateInvalid : Error {
  explicit CandidateInvalid(const std::string& why) : Error("invalid candidate: " + why) {}
};

struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& which) : Error("hypothesis violated: " + which) {}
};

}  // namespace coxeter

#endif
