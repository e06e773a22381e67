#pragma once

// Exponent vectors of monomials in n <= kMaxRank variables.

#include <array>
#include <cstdint>
#include <vector>

#include "twistlab/monomial_group.hpp"

namespace twistlab {

using Exps = std::array<std::uint8_t, kMaxRank>;

int degree(const Exps& a);
Exps unit_exps(int i);
Exps add_exps(const Exps& a, const Exps& b);
/// All exponent vectors of total degree d in n variables, lexicographically
/// decreasing (x_1^d first).
std::vector<Exps> monomials_of_degree(int n, int d);

}  // namespace twistlab
