#include "ndl/size_caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ndl {

SizeCaps SizeCaps::lowered_to(int cap) const {
  SizeCaps out = *this;
  for (int* field : {&out.permanent, &out.two_factor_enumeration, &out.hamilton, &out.matching,
                     &out.phi, &out.near_hamilton, &out.monte_carlo}) {
    *field = std::min(*field, cap);
  }
  return out;
}

const SizeCaps& SizeCaps::from_environment() {
  static const SizeCaps caps = [] {
    SizeCaps base;
    if (const char* env = std::getenv("NDL_SIZE_CAP")) {
      try {
        return base.lowered_to(std::stoi(env));
      } catch (const std::exception&) {
        // Unparseable values leave the defaults in place.
      }
    }
    return base;
  }();
  return caps;
}

}  // namespace ndl
