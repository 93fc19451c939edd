#include "nahilb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

using PointSet = std::set<LatticePoint>;

void require(bool ok, ErrorKind kind, const std::string& message) {
  if (!ok) throw Error(kind, message);
}

bool is_order_ideal(const PointSet& points) {
  for (const auto& u : points) {
    LatticePoint v = u;
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a] == 0) continue;
      --v[a];
      if (!points.count(v)) return false;
      ++v[a];
    }
  }
  return true;
}

// v can join the ideal when all its lower neighbours are present.
bool is_addable(const PointSet& points, const LatticePoint& v) {
  if (points.count(v)) return false;
  LatticePoint w = v;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (w[a] == 0) continue;
    --w[a];
    bool present = points.count(w) > 0;
    ++w[a];
    if (!present) return false;
  }
  return true;
}

std::vector<LatticePoint> addable_corners(const PointSet& points, int n) {
  if (points.empty()) return {LatticePoint(static_cast<std::size_t>(n), 0)};
  std::set<LatticePoint> out;
  for (const auto& u : points) {
    for (int i = 0; i < n; ++i) {
      LatticePoint v = u;
      ++v[static_cast<std::size_t>(i)];
      if (is_addable(points, v)) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

// All order ideals containing base with |base| + extra points.
std::set<PointSet> extensions(const PointSet& base, int n, int extra) {
  std::set<PointSet> frontier{base};
  for (int step = 0; step < extra; ++step) {
    std::set<PointSet> next;
    for (const auto& p : frontier)
      for (const auto& v : addable_corners(p, n)) {
        PointSet q = p;
        q.insert(v);
        next.insert(std::move(q));
      }
    frontier = std::move(next);
  }
  return frontier;
}

Partition to_partition(int n, const PointSet& points) { return Partition{n, {points.begin(), points.end()}}; }

void check_dims(int n, const std::vector<int>& dims, const Limits& limits) {
  require(n >= 1, ErrorKind::InvalidInput, "n must be positive");
  require(!dims.empty(), ErrorKind::InvalidInput, "dims must be nonempty");
  for (int d : dims) require(d >= 0, ErrorKind::InvalidInput, "dims entries must be nonnegative");
  int total = std::accumulate(dims.begin(), dims.end(), 0);
  require(total >= 1, ErrorKind::InvalidInput, "total size must be positive");
  require(total <= limits.max_points, ErrorKind::SizeGuard,
          "total size " + std::to_string(total) + " exceeds the guard " + std::to_string(limits.max_points));
}

}  // namespace

bool reverse_lex_less(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool Partition::contains(const LatticePoint& u) const { return std::binary_search(points.begin(), points.end(), u); }

int NestedPartition::total() const { return layers.empty() ? 0 : layers.back().size(); }

LatticePoint unit_vector(int n, int i) {
  LatticePoint e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return e;
}

Partition make_partition(int n, std::vector<LatticePoint> points) {
  require(n >= 1, ErrorKind::InvalidInput, "n must be positive");
  PointSet set;
  for (auto& u : points) {
    require(static_cast<int>(u.size()) == n, ErrorKind::DimensionMismatch, "point of wrong dimension");
    for (int c : u) require(c >= 0, ErrorKind::InvalidInput, "negative coordinate");
    require(set.insert(u).second, ErrorKind::InvalidInput, "repeated point");
  }
  require(is_order_ideal(set), ErrorKind::InvalidInput, "points do not form an order ideal");
  return to_partition(n, set);
}

NestedPartition make_nested(int n, std::vector<int> dims, std::vector<Partition> layers) {
  require(dims.size() == layers.size(), ErrorKind::DimensionMismatch, "one layer per dims entry");
  int expected = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    layers[i] = make_partition(n, layers[i].points);
    expected += dims[i];
    require(dims[i] >= 0, ErrorKind::InvalidInput, "dims entries must be nonnegative");
    require(layers[i].size() == expected, ErrorKind::DimensionMismatch, "layer sizes do not match dims");
    if (i > 0)
      for (const auto& u : layers[i - 1].points) require(layers[i].contains(u), ErrorKind::NotNested, "layers are not nested");
  }
  return NestedPartition{n, std::move(dims), std::move(layers)};
}

NestedPartition layers_of(const Enumeration& e) {
  NestedPartition lambda{e.n, e.dims, {}};
  PointSet acc;
  std::size_t k = 0;
  for (int d : e.dims) {
    for (int t = 0; t < d; ++t) acc.insert(e.order[k++]);
    lambda.layers.push_back(to_partition(e.n, acc));
  }
  return lambda;
}

Enumeration make_enumeration(const NestedPartition& lambda, std::vector<LatticePoint> order) {
  require(static_cast<int>(order.size()) == lambda.total(), ErrorKind::DimensionMismatch, "order has the wrong length");
  Enumeration e{lambda.n, lambda.dims, std::move(order), {}};
  PointSet seen;
  for (std::size_t k = 0; k < e.order.size(); ++k) {
    require(is_addable(seen, e.order[k]) || (seen.empty() && e.order[k] == LatticePoint(static_cast<std::size_t>(lambda.n), 0)),
            ErrorKind::InvalidInput, "prefix is not an order ideal");
    seen.insert(e.order[k]);
    e.level.push_back(level_of(lambda.dims, static_cast<int>(k)));
  }
  require(layers_of(e) == lambda, ErrorKind::InvalidInput, "order does not list the layers as prefixes");
  return e;
}

std::vector<Partition> enumerate_partitions(int n, int size, const Limits& limits) {
  require(n >= 1, ErrorKind::InvalidInput, "n must be positive");
  require(size >= 0, ErrorKind::InvalidInput, "size must be nonnegative");
  require(size <= limits.max_points, ErrorKind::SizeGuard,
          "size " + std::to_string(size) + " exceeds the guard " + std::to_string(limits.max_points));
  std::vector<Partition> out;
  for (const auto& p : extensions({}, n, size)) out.push_back(to_partition(n, p));
  return out;
}

std::vector<NestedPartition> enumerate_nested(int n, const std::vector<int>& dims, const Limits& limits) {
  check_dims(n, dims, limits);
  std::vector<std::vector<PointSet>> chains{{}};
  for (int d : dims) {
    std::vector<std::vector<PointSet>> next;
    for (const auto& chain : chains) {
      PointSet base = chain.empty() ? PointSet{} : chain.back();
      for (const auto& p : extensions(base, n, d)) {
        auto extended = chain;
        extended.push_back(p);
        next.push_back(std::move(extended));
      }
    }
    chains = std::move(next);
  }
  std::sort(chains.begin(), chains.end());
  std::vector<NestedPartition> out;
  out.reserve(chains.size());
  for (const auto& chain : chains) {
    NestedPartition lambda{n, dims, {}};
    for (const auto& p : chain) lambda.layers.push_back(to_partition(n, p));
    out.push_back(std::move(lambda));
  }
  return out;
}

Enumeration canonical_enumeration(const NestedPartition& lambda) {
  // Reverse-lex refines the componentwise order, so sorting each layer's new
  // points gives the greedy, hence lex-minimal, valid order.
  Enumeration e{lambda.n, lambda.dims, {}, {}};
  const Partition* prev = nullptr;
  for (std::size_t i = 0; i < lambda.layers.size(); ++i) {
    std::vector<LatticePoint> fresh;
    for (const auto& u : lambda.layers[i].points)
      if (!prev || !prev->contains(u)) fresh.push_back(u);
    std::sort(fresh.begin(), fresh.end(), reverse_lex_less);
    for (auto& u : fresh) {
      e.order.push_back(std::move(u));
      e.level.push_back(static_cast<int>(i));
    }
    prev = &lambda.layers[i];
  }
  return e;
}

std::vector<Enumeration> all_enumerations(const NestedPartition& lambda, const Limits& limits) {
  require(lambda.total() <= limits.max_enumeration_points, ErrorKind::SizeGuard,
          "too many points to list every enumeration");
  std::vector<Enumeration> out;
  Enumeration current{lambda.n, lambda.dims, {}, {}};
  PointSet placed;
  auto recurse = [&](auto&& self, std::size_t layer) -> void {
    if (layer == lambda.layers.size()) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(placed.size()) == lambda.layers[layer].size()) {
      self(self, layer + 1);
      return;
    }
    for (const auto& v : lambda.layers[layer].points) {
      bool ok = placed.empty() ? std::all_of(v.begin(), v.end(), [](int c) { return c == 0; }) : is_addable(placed, v);
      if (!ok) continue;
      placed.insert(v);
      current.order.push_back(v);
      current.level.push_back(static_cast<int>(layer));
      self(self, layer);
      current.order.pop_back();
      current.level.pop_back();
      placed.erase(v);
    }
  };
  recurse(recurse, 0);
  return out;
}

bool is_admissible(const NestedPartition& lambda) {
  for (const auto& u : lambda.top().points) {
    int nonzero = 0;
    int sum = 0;
    for (int c : u) {
      nonzero += (c != 0);
      sum += c;
    }
    if (nonzero >= 3) return false;
    if (nonzero == 2 && sum > 3) return false;
    if (nonzero == 1 && sum > 4) return false;
  }
  return true;
}

bool is_nilfil(const NestedPartition& lambda) {
  if (lambda.dims.empty() || lambda.dims.front() != 1) return false;
  for (std::size_t k = 1; k < lambda.layers.size(); ++k) {
    const Partition& upper = lambda.layers[k];
    for (const auto& u : upper.points) {
      if (lambda.layers[k - 1].contains(u)) continue;
      LatticePoint v = u;
      for (std::size_t i = 0; i < v.size(); ++i) {
        ++v[i];
        bool hit = upper.contains(v);
        --v[i];
        if (hit) return false;
      }
    }
  }
  return true;
}

bool is_full_flag(const std::vector<int>& dims) {
  return !dims.empty() && std::all_of(dims.begin(), dims.end(), [](int d) { return d == 1; });
}

int level_of(const std::vector<int>& dims, int k) {
  int acc = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    acc += dims[i];
    if (k < acc) return static_cast<int>(i);
  }
  throw Error(ErrorKind::InvalidInput, "index past the last layer");
}

std::vector<int> flag_dims(const std::vector<int>& dims) {
  require(!dims.empty() && dims.front() == 1, ErrorKind::InvalidInput, "flag data needs d_0 = 1");
  return {dims.begin() + 1, dims.end()};
}

std::vector<int> flag_levels(int n, const std::vector<int>& hat_dims) {
  std::vector<int> w;
  for (std::size_t p = 0; p < hat_dims.size(); ++p)
    for (int t = 0; t < hat_dims[p]; ++t) w.push_back(static_cast<int>(p) + 1);
  require(static_cast<int>(w.size()) <= n, ErrorKind::InvalidInput, "flag blocks exceed n");
  while (static_cast<int>(w.size()) < n) w.push_back(static_cast<int>(hat_dims.size()) + 1);
  return w;
}

std::vector<CosetRep> enumerate_cosets(int n, const std::vector<int>& hat_dims) {
  int k = std::accumulate(hat_dims.begin(), hat_dims.end(), 0);
  require(k <= n, ErrorKind::InvalidInput, "flag blocks exceed n");
  std::vector<CosetRep> out;
  std::vector<int> images;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  // Within a block the images increase.
  auto recurse = [&](auto&& self, std::size_t block, int filled, int floor) -> void {
    if (block == hat_dims.size()) {
      out.push_back(CosetRep{images});
      return;
    }
    if (filled == hat_dims[block]) {
      self(self, block + 1, 0, 0);
      return;
    }
    for (int a = floor + 1; a <= n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      used[static_cast<std::size_t>(a)] = true;
      images.push_back(a);
      self(self, block, filled + 1, a);
      images.pop_back();
      used[static_cast<std::size_t>(a)] = false;
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

std::vector<int> extend_coset(const CosetRep& sigma, int n) {
  std::vector<int> full = sigma.images;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int a : full) {
    require(a >= 1 && a <= n && !used[static_cast<std::size_t>(a)], ErrorKind::InvalidInput, "coset images must be distinct in 1..n");
    used[static_cast<std::size_t>(a)] = true;
  }
  for (int a = 1; a <= n; ++a)
    if (!used[static_cast<std::size_t>(a)]) full.push_back(a);
  return full;
}

bool in_flag_fiber(const NestedPartition& lambda, const CosetRep& sigma) {
  const int d = lambda.total();
  require(static_cast<int>(sigma.images.size()) == d - 1, ErrorKind::DimensionMismatch, "sigma needs d-1 images");
  require(lambda.n >= d - 1, ErrorKind::InvalidInput, "the flag fiber needs n >= d-1");
  const std::vector<int> hat = flag_dims(lambda.dims);
  const std::vector<int> w = flag_levels(lambda.n, hat);
  const std::vector<int> full = extend_coset(sigma, lambda.n);
  // psi_1(x_{sigma(j)}) must land in V_{w(j)}: e_{sigma(j)} is outside lambda_i for all i <= w(j).
  for (int j = 1; j <= lambda.n; ++j) {
    const int wj = w[static_cast<std::size_t>(j - 1)];
    const LatticePoint e = unit_vector(lambda.n, full[static_cast<std::size_t>(j - 1)]);
    if (lambda.layers[static_cast<std::size_t>(wj - 1)].contains(e)) return false;
  }
  return true;
}

NestedPartition porteous(int n, const std::vector<int>& dims) {
  require(!dims.empty() && dims.front() == 1, ErrorKind::InvalidInput, "the Porteous point needs d_0 = 1");
  const int d = std::accumulate(dims.begin(), dims.end(), 0);
  require(d - 1 <= n, ErrorKind::InvalidInput, "the Porteous point needs d-1 <= n");
  NestedPartition lambda{n, dims, {}};
  PointSet acc;
  int next = 0;
  for (int dk : dims) {
    for (int t = 0; t < dk; ++t, ++next)
      acc.insert(next == 0 ? LatticePoint(static_cast<std::size_t>(n), 0) : unit_vector(n, next));
    lambda.layers.push_back(to_partition(n, acc));
  }
  return lambda;
}

}  // namespace nahilb
