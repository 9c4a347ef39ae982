#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>

#include "semimagic/errors.hpp"

namespace semimagic {

// Exact integer for everything that can outgrow a machine word:
// binomial products, series coefficients, closed-form counts.
using Int = boost::multiprecision::cpp_int;

// Narrowing that refuses to wrap.
inline long long to_longlong(const Int& v) {
    if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
        throw OverflowError("value " + v.str() + " does not fit in 64 bits");
    }
    return static_cast<long long>(v);
}

}  // namespace semimagic
