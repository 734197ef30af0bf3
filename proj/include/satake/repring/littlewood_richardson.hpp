#pragma once

#include "satake/core/numeric.hpp"

#include <map>

namespace satake {

// Littlewood-Richardson coefficients c^nu_{alpha,beta} for GL(n), n = alpha.size(),
// by direct enumeration of LR tableaux of shape nu/alpha with content beta.
// Result keys are partitions padded to n parts.
std::map<IVec, BigInt> lr_type_a(const IVec& alpha, const IVec& beta);

bool is_partition(const IVec& p);
// Dynkin labels of A_{n-1} <-> partitions with last part 0.
IVec partition_to_labels(const IVec& p);
IVec labels_to_partition(const IVec& labels);

}  // namespace satake
