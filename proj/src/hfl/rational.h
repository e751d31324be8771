#ifndef HFL_RATIONAL_H_
#define HFL_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hfl {

// Exact rational. GMP keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Accepts "p/q", "p" and plain decimals such as "0.25".
Rational ParseRational(std::string_view text);

// Always "p/q" in lowest terms, including integers ("0/1", "3/1").
std::string FormatRational(const Rational& value);

Rational MakeRational(int64_t num, int64_t den = 1);

// True iff value fits as num/den with both parts in int64.
bool FitsInt64(const Rational& value);

}  // namespace hfl

#endif  // HFL_RATIONAL_H_
