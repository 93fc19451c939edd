#pragma once

#include <vector>

namespace nahilb {

using LatticePoint = std::vector<int>;

// Compares coordinates from the last to the first.
bool reverse_lex_less(const LatticePoint& a, const LatticePoint& b);

// Finite order ideal of N^n, points sorted lexicographically.
struct Partition {
  int n = 0;
  std::vector<LatticePoint> points;

  int size() const { return static_cast<int>(points.size()); }
  bool contains(const LatticePoint& u) const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.points <=> b.points; }
};

// layers[i] is lambda_{i+1} and has d_0 + ... + d_i points.
struct NestedPartition {
  int n = 0;
  std::vector<int> dims;
  std::vector<Partition> layers;

  int total() const;
  const Partition& top() const { return layers.back(); }
  friend bool operator==(const NestedPartition&, const NestedPartition&) = default;
};

// order[k] = u_k; level[k] = w(k), the index of the first layer containing u_k.
// Every prefix is an order ideal and the first |lambda_i| points form lambda_i.
struct Enumeration {
  int n = 0;
  std::vector<int> dims;
  std::vector<LatticePoint> order;
  std::vector<int> level;

  int size() const { return static_cast<int>(order.size()); }
  int levels() const { return static_cast<int>(dims.size()); }
  friend bool operator==(const Enumeration&, const Enumeration&) = default;
};

// images[j-1] = sigma(j) for j = 1..k, 1-based, increasing inside each block.
struct CosetRep {
  std::vector<int> images;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

struct Limits {
  int max_points = 12;
  int max_enumeration_points = 8;
};

Partition make_partition(int n, std::vector<LatticePoint> points);
NestedPartition make_nested(int n, std::vector<int> dims, std::vector<Partition> layers);
// Validates that the order lists the layers of lambda as prefixes.
Enumeration make_enumeration(const NestedPartition& lambda, std::vector<LatticePoint> order);
NestedPartition layers_of(const Enumeration& e);

std::vector<Partition> enumerate_partitions(int n, int size, const Limits& limits = {});
std::vector<NestedPartition> enumerate_nested(int n, const std::vector<int>& dims, const Limits& limits = {});
Enumeration canonical_enumeration(const NestedPartition& lambda);
std::vector<Enumeration> all_enumerations(const NestedPartition& lambda, const Limits& limits = {});

bool is_admissible(const NestedPartition& lambda);
bool is_nilfil(const NestedPartition& lambda);
bool is_full_flag(const std::vector<int>& dims);

// Block index of k in the dims layout.
int level_of(const std::vector<int>& dims, int k);
// Flag levels w(1..n) for block sizes hat_dims; indices past the blocks get r+1.
std::vector<int> flag_levels(int n, const std::vector<int>& hat_dims);
std::vector<int> flag_dims(const std::vector<int>& dims);
std::vector<CosetRep> enumerate_cosets(int n, const std::vector<int>& hat_dims);
// sigma extended to 1..n by the unused indices in increasing order.
std::vector<int> extend_coset(const CosetRep& sigma, int n);

bool in_flag_fiber(const NestedPartition& lambda, const CosetRep& sigma);
// lambda_i = {0, e_1, ..., e_{|lambda_i|-1}}.
NestedPartition porteous(int n, const std::vector<int>& dims);

LatticePoint unit_vector(int n, int i);  // i is 1-based

}  // namespace nahilb
