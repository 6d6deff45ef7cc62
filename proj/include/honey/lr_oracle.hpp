#pragma once

#include "honey/core.hpp"

namespace honey {

// Littlewood-Richardson coefficient c^lambda_{mu,nu}, computed directly as
// the number of LR skew tableaux of shape lambda/mu and content nu
// (semistandard filling whose reverse reading word is a lattice word).
// Completely independent of the honeycomb machinery; this is the reference
// implementation the enumeration code is checked against.
Int lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace honey
