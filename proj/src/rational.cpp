#include "tfmmp/rational.hpp"

#include <cctype>

#include "tfmmp/errors.hpp"

namespace tfmmp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotInSupport: return "NotInSupport";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::AlreadyRay: return "AlreadyRay";
    case ErrorCode::BoundaryWall: return "BoundaryWall";
    case ErrorCode::NoCompactCurves: return "NoCompactCurves";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::UnboundedWithBoundary: return "UnboundedWithBoundary";
    case ErrorCode::InconsistentRay: return "InconsistentRay";
    case ErrorCode::NonSimplicialResult: return "NonSimplicialResult";
    case ErrorCode::UnsupportedCircuit: return "UnsupportedCircuit";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::StepCapExceeded: return "StepCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw TfError(ErrorCode::Internal, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw TfError(ErrorCode::ParseError, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rat(Int(text), Int(1));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw TfError(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw TfError(ErrorCode::ParseError, "bad rational literal '" + text + "'");
  }
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int floor_rat(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Int common_denominator(const std::vector<Rat>& values) {
  Int l = 1;
  for (const auto& v : values) {
    Int d = v.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

}  // namespace tfmmp
