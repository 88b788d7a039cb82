#pragma once

#include <gmpxx.h>

#include <string>

namespace deckwork {

// Exact arithmetic for every count and coefficient in the library.
using BigInt = mpz_class;
using BigCount = mpz_class;     // nonnegative by contract
using ExactRational = mpq_class;  // canonicalised, denominator > 0

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const ExactRational& v) { return v.get_str(); }

}  // namespace deckwork
