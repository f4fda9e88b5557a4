#pragma once

#include <string>
#include <vector>

namespace slicekit {

/// Weakly decreasing positive parts. Also used for compositions (any order)
/// where noted.
using Partition = std::vector<int>;
using Composition = std::vector<int>;

int size_of(const std::vector<int>& parts);
bool is_partition(const Partition& p);
/// Sorted decreasingly, zeros dropped.
Partition normalized(std::vector<int> parts);
Partition transpose(const Partition& p);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);
/// All compositions of n (ordered, positive parts).
std::vector<Composition> compositions_of(int n);
/// Number of partitions of n.
long partition_count(int n);

/// Partial-sum comparison with zero padding; throws std::invalid_argument
/// when the totals differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// dim of the GL_m-centralizer of x_lambda: sum (2i-1) lambda_i = sum (lambda'_i)^2.
int centralizer_dimension(const Partition& lambda);
/// m^2 - centralizer_dimension; throws std::invalid_argument if |lambda| != m.
int orbit_dimension(const Partition& lambda, int m);

std::string to_string(const std::vector<int>& parts);

}  // namespace slicekit
