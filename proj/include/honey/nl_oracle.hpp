#pragma once

#include "honey/core.hpp"

namespace honey {

// Newell-Littlewood number
//   N_{lambda,mu,nu} = sum_{alpha,beta,gamma}
//       c^lambda_{beta,gamma} c^mu_{gamma,alpha} c^nu_{alpha,beta}
// computed by direct summation over the (finitely many) triples with the
// right weights. Reference implementation, independent of the honeycomb
// enumeration.
Int nl_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace honey
