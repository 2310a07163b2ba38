#pragma once

namespace ndl {

// Vertex-count ceilings for the exponential-time exact operations.
// NDL_SIZE_CAP in the environment lowers every cap (never raises one).
struct SizeCaps {
  int permanent = 28;
  int two_factor_enumeration = 16;
  int hamilton = 24;
  int matching = 30;
  int phi = 14;
  int near_hamilton = 12;
  int monte_carlo = 14;

  // Component-wise min with `cap`; values above the defaults are ignored.
  SizeCaps lowered_to(int cap) const;

  static const SizeCaps& from_environment();
};

}  // namespace ndl
