#pragma once

#include <gmpxx.h>

#include <string>

namespace nabla {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace nabla
