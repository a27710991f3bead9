#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tfmmp {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws TfError(ParseError).
Rat parse_rat(const std::string& text);

// Reduced form, "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& value);

Int floor_rat(const Rat& value);
Int ceil_rat(const Rat& value);

// lcm of denominators; 1 for an empty range.
Int common_denominator(const std::vector<Rat>& values);

}  // namespace tfmmp
