#pragma once

#include <cstdint>

#include "awb/extension.hpp"

namespace awb {
namespace catalog {

/// Registered algebra names: zero, ab(1)..ab(4), idem1, heis, heis_x_ab1,
/// heis_x_ab2, taut_u2, dbr_u2.
std::vector<std::string> list();
Awb get(const std::string& name, const Field& f);  // throws UnknownNameError

/// Precomputed invariant dimensions; -1 marks values left to computation.
struct ExpectedDims {
  long center = -1;
  long derived = -1;
  long h0 = -1;
  long h1 = -1;
};
ExpectedDims expected(const std::string& name);

/// Registered central extensions: e_heis, e_heis_x_ab1, e_heis_x_ab2,
/// triv_heis, triv_taut_u2, split_ab3, cover_ab1_a, cover_ab1_b.
std::vector<std::string> extension_list();
CentralExtension get_extension(const std::string& name, const Field& f);

/// Valid-by-construction random algebra: either a zero product with a random
/// bracket, or a block-diagonal associative product with a random-D bracket.
/// Deterministic in (field, n, seed). n <= 6.
Awb random_awb(const Field& f, std::size_t n, std::uint64_t seed);

}  // namespace catalog
}  // namespace awb
