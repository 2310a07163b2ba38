#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

enum class Family { Paley, RandomRegular, Complete, Cycle, Petersen, Circulant };

std::string_view to_string(Family f);
// Accepts the tags paley | random-regular | complete | cycle | petersen | circulant.
Family parse_family(std::string_view tag);

struct GraphFamilySpec {
  Family family = Family::Complete;
  int q = 0;                     // paley
  int n = 0;                     // random-regular, complete, cycle, circulant
  int d = 0;                     // random-regular
  std::vector<int> connection;   // circulant
  std::uint64_t seed = 0;        // random-regular

  static GraphFamilySpec paley(int q);
  static GraphFamilySpec random_regular(int n, int d, std::uint64_t seed);
  static GraphFamilySpec complete(int n);
  static GraphFamilySpec cycle(int n);
  static GraphFamilySpec petersen();
  static GraphFamilySpec circulant(int n, std::vector<int> connection);

  std::string describe() const;
};

inline constexpr int kConfigurationModelRetries = 10'000;

// Deterministic given the spec (including its seed).
// Throws Error(InvalidParameters) or Error(GenerationTimeout).
Graph generate(const GraphFamilySpec& spec);

bool is_prime(int q);

}  // namespace ndl
