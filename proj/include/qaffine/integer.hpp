#pragma once

#include <gmpxx.h>

#include <string>

namespace qaffine {

// Exact unbounded integer used for every series coefficient and counter.
using Int = mpz_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int from_decimal(const std::string& s) { return Int(s); }

}  // namespace qaffine
