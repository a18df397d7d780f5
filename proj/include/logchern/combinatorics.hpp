#pragma once

#include <vector>

#include "logchern/partition.hpp"
#include "logchern/rational.hpp"

namespace logchern {

// All partitions of `size` with at most `max_parts` nonzero parts, in reverse
// lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int size, int max_parts);

// Stirling number of the second kind; 0 when k > n.
Integer stirling2(int n, int k);

// Dimension of the Schur module S^alpha(C^r) from the Weyl product formula.
Integer weyl_dim(const Partition& alpha, int r);

// Number of semistandard Young tableaux of shape alpha with entries in 1..r,
// counted by direct enumeration.
Integer ssyt_count(const Partition& alpha, int r);

}  // namespace logchern
