#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ndl {

using BigInt = boost::multiprecision::cpp_int;

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

inline BigInt to_big(u128 x) {
  BigInt out = static_cast<std::uint64_t>(x >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(x);
  return out;
}

}  // namespace ndl
