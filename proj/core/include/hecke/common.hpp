// Shared basic types for the hecke library: exact integer and rational
// scalars, integer coweight vectors, and the library-wide error type.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A coweight is a point of the coweight lattice Y = Z^rank, written in the
// fixed coordinate basis of the root datum it belongs to.
using Coweight = std::vector<long long>;

enum class Errc {
  // root datum validation
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  PairingMismatch,
  HeightNotOne,
  ConfigInvalid,
  // coefficient ring
  MixedN,
  NotAUnit,
  NonIntegralExponent,
  // Weyl group and Tits cone
  NotDominant,
  NotInTitsCone,
  TitsConeUnknown,
  LengthCapExceeded,
  // algebra elements
  ZeroElement,
  NotComparable,
  // input handling
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void check(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

// Componentwise vector arithmetic on coweights.
Coweight cw_add(const Coweight& a, const Coweight& b);
Coweight cw_sub(const Coweight& a, const Coweight& b);
Coweight cw_neg(const Coweight& a);
Coweight cw_scaled(const Coweight& a, long long k);

std::string cw_str(const Coweight& a);

}  // namespace hecke
