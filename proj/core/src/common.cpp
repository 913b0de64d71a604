#include "hecke/common.hpp"

#include <sstream>

namespace hecke {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::AsymmetricZero: return "AsymmetricZero";
    case Errc::PairingMismatch: return "PairingMismatch";
    case Errc::HeightNotOne: return "HeightNotOne";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::MixedN: return "MixedN";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NonIntegralExponent: return "NonIntegralExponent";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotInTitsCone: return "NotInTitsCone";
    case Errc::TitsConeUnknown: return "TitsConeUnknown";
    case Errc::LengthCapExceeded: return "LengthCapExceeded";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotComparable: return "NotComparable";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Coweight cw_add(const Coweight& a, const Coweight& b) {
  Coweight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Coweight cw_sub(const Coweight& a, const Coweight& b) {
  Coweight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Coweight cw_neg(const Coweight& a) {
  Coweight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Coweight cw_scaled(const Coweight& a, long long k) {
  Coweight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

std::string cw_str(const Coweight& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

}  // namespace hecke
