#include "bihom/scalar.hpp"

#include <cctype>
#include <ostream>

#include "bihom/error.hpp"

namespace bihom {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::SingularMap: return "SingularMap";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::MapsDoNotCommute: return "MapsDoNotCommute";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::SymmetryConditionFails: return "SymmetryConditionFails";
    case ErrorKind::OddAssociativeFactor: return "OddAssociativeFactor";
    case ErrorKind::NotFixedPoint: return "NotFixedPoint";
    case ErrorKind::IntertwiningFails: return "IntertwiningFails";
    case ErrorKind::FailedPrecondition: return "FailedPrecondition";
    case ErrorKind::CocycleFails: return "CocycleFails";
    case ErrorKind::NoDualBasis: return "NoDualBasis";
    case ErrorKind::ParityObstruction: return "ParityObstruction";
    case ErrorKind::ReportedMismatch: return "ReportedMismatch";
    case ErrorKind::OddMap: return "OddMap";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false)))
    throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");

  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Scalar r;
  r.q_.get_num() = mpz_class(n, 10);
  if (slash != std::string_view::npos) {
    r.q_.get_den() = mpz_class(std::string(den), 10);
    if (sgn(r.q_.get_den()) == 0)
      throw Error(ErrorKind::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
  }
  r.q_.canonicalize();
  return r;
}

std::string Scalar::str() const { return q_.get_str(10); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  mpq_class t = a.q_ * b.q_;
  q_ += t;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = *this;
  if (exponent < 0) {
    base = Scalar(1) / base;
    exponent = -exponent;
  }
  Scalar r(1);
  while (exponent > 0) {
    if (exponent & 1) r *= base;
    base *= base;
    exponent >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace bihom
