#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tanglekit {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace tanglekit
