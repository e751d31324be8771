#include "hfl/rational.h"

#include <cctype>

#include "hfl/error.h"

namespace hfl {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidVertex: return "invalid-vertex";
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kEndpointOutOfRange: return "endpoint-out-of-range";
    case ErrorCode::kDegreeBoundViolated: return "degree-bound-violated";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kNoVertices: return "no-vertices";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadRational(std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument,
              "not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadRational(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) BadRational(text);
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) BadRational(text);
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      BadRational(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = Rational(mpz_class(digits, 10), scale);
    result.canonicalize();
  } else {
    if (!AllDigits(body)) BadRational(text);
    result = Rational(mpz_class(std::string(body), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string FormatRational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational MakeRational(int64_t num, int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  Rational r(mpz_class(std::to_string(num), 10),
             mpz_class(std::to_string(den), 10));
  r.canonicalize();
  return r;
}

bool FitsInt64(const Rational& value) {
  static const mpz_class kMax("9223372036854775807", 10);
  return abs(value.get_num()) <= kMax && value.get_den() <= kMax;
}

}  // namespace hfl
