#include "nahilb/weights.hpp"

#include <numeric>
#include <set>

#include "nahilb/error.hpp"

namespace nahilb {

namespace {

Weight plus(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight minus(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight unit(int n, int i) { return unit_vector(n, i); }

void require_punctual(const Enumeration& e) {
  if (e.dims.empty() || e.dims.front() != 1) throw Error(ErrorKind::InvalidInput, "punctual classes need d_0 = 1");
}

// Points first introduced in layer m.
std::vector<const LatticePoint*> new_points(const Enumeration& e, int m) {
  std::vector<const LatticePoint*> out;
  for (int k = 0; k < e.size(); ++k)
    if (e.level[static_cast<std::size_t>(k)] == m) out.push_back(&e.order[static_cast<std::size_t>(k)]);
  return out;
}

// sum over v new in layer m, over u in s, of (u - v)
void add_layer(SignedWeightMultiset& out, const SignedWeightMultiset& s, const Enumeration& e, int m) {
  for (const LatticePoint* v : new_points(e, m))
    for (const auto& [u, mult] : s.entries()) out.add(minus(u, *v), mult);
}

}  // namespace

void SignedWeightMultiset::add(const Weight& w, int multiplicity) {
  if (static_cast<int>(w.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "weight of wrong dimension");
  if (multiplicity == 0) return;
  int& slot = entries_[w];
  slot += multiplicity;
  if (slot == 0) entries_.erase(w);
}

int SignedWeightMultiset::multiplicity(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

int SignedWeightMultiset::net_rank() const {
  int r = 0;
  for (const auto& [w, m] : entries_) r += m;
  return r;
}

int SignedWeightMultiset::fixed_rank() const { return multiplicity(Weight(static_cast<std::size_t>(n_), 0)); }

SignedWeightMultiset SignedWeightMultiset::moving_part() const {
  SignedWeightMultiset r = *this;
  r.entries_.erase(Weight(static_cast<std::size_t>(n_), 0));
  return r;
}

bool SignedWeightMultiset::has_negative_multiplicity() const {
  for (const auto& [w, m] : entries_)
    if (m < 0) return true;
  return false;
}

SignedWeightMultiset& SignedWeightMultiset::operator+=(const SignedWeightMultiset& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "multisets over different tori");
  for (const auto& [w, m] : other.entries_) add(w, m);
  return *this;
}

SignedWeightMultiset& SignedWeightMultiset::operator-=(const SignedWeightMultiset& other) {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "multisets over different tori");
  for (const auto& [w, m] : other.entries_) add(w, -m);
  return *this;
}

SignedWeightMultiset tangent_class_direct(const Enumeration& e) {
  const int n = e.n, d = e.size();
  const auto& u = e.order;
  const auto& w = e.level;
  SignedWeightMultiset out(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < d; ++k) out.add(minus(unit(n, i), u[k]));
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (w[j] <= w[k]) out.add(minus(plus(u[i], u[j]), u[k]));
  for (int j = 1; j < d; ++j)
    for (int k = 0; k < d; ++k)
      if (w[j] <= w[k]) out.add(minus(u[j], u[k]), -1);
  return out;
}

SignedWeightMultiset tangent_class(const Enumeration& e) {
  const int n = e.n, d = e.size();
  SignedWeightMultiset out(n);
  for (int m = 0; m < e.levels(); ++m) {
    // S_m = {e_i} + {u_i + u_j : i <= j, w(j) <= m} - {u_j : w(j) <= m}
    SignedWeightMultiset s(n);
    for (int i = 1; i <= n; ++i) s.add(unit(n, i));
    for (int i = 1; i < d; ++i)
      for (int j = i; j < d; ++j)
        if (e.level[j] <= m) s.add(plus(e.order[i], e.order[j]));
    for (int j = 1; j < d; ++j)
      if (e.level[j] <= m) s.add(e.order[j], -1);
    add_layer(out, s, e, m);
  }
  return out;
}

SignedWeightMultiset tangent_class_punctual(const Enumeration& e) {
  require_punctual(e);
  const int n = e.n, d = e.size();
  const auto& u = e.order;
  const auto& w = e.level;
  SignedWeightMultiset out(n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k < d; ++k) out.add(minus(unit(n, i), u[k]));
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 1; k < d; ++k)
        if (w[j] < w[k]) out.add(minus(plus(u[i], u[j]), u[k]));
  for (int j = 1; j < d; ++j)
    for (int k = 1; k < d; ++k)
      if (w[j] <= w[k]) out.add(minus(u[j], u[k]), -1);
  return out;
}

SignedWeightMultiset obstruction_class_direct(const Enumeration& e) {
  const int n = e.n, d = e.size();
  const auto& u = e.order;
  const auto& w = e.level;
  SignedWeightMultiset out(n);
  for (int i = 1; i < d; ++i)
    for (int k = i + 1; k < d; ++k)
      for (int j = 1; j < d; ++j)
        for (int m = 0; m < d; ++m)
          if (w[j] <= w[m] && w[k] <= w[m]) out.add(minus(plus(plus(u[i], u[j]), u[k]), u[m]));
  return out;
}

SignedWeightMultiset obstruction_class(const Enumeration& e) {
  const int n = e.n, d = e.size();
  SignedWeightMultiset out(n);
  for (int m = 0; m < e.levels(); ++m) {
    // S_m = {u_i + u_j + u_k : i < k, w(j) <= m, w(k) <= m}; w(i) <= w(k) is automatic.
    SignedWeightMultiset s(n);
    for (int i = 1; i < d; ++i)
      for (int k = i + 1; k < d; ++k)
        for (int j = 1; j < d; ++j)
          if (e.level[j] <= m && e.level[k] <= m) s.add(plus(plus(e.order[i], e.order[j]), e.order[k]));
    add_layer(out, s, e, m);
  }
  return out;
}

SignedWeightMultiset epunct_class(const Enumeration& e) {
  require_punctual(e);
  const int n = e.n, d = e.size();
  SignedWeightMultiset out(n);
  for (int i = 1; i <= n; ++i) out.add(unit(n, i));
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 1; k < d; ++k)
        if (e.level[j] == e.level[k]) out.add(minus(plus(e.order[i], e.order[j]), e.order[k]));
  return out;
}

namespace {

void require_fiber(const Enumeration& e, const CosetRep& sigma) {
  require_punctual(e);
  if (!in_flag_fiber(layers_of(e), sigma)) throw Error(ErrorKind::NotInFiber, "the fixed point is outside the flag fiber");
}

}  // namespace

SignedWeightMultiset fiber_tangent_class_direct(const Enumeration& e, const CosetRep& sigma) {
  require_fiber(e, sigma);
  const int n = e.n, d = e.size();
  const auto& u = e.order;
  const auto& w = e.level;
  SignedWeightMultiset out(n);
  for (int i = 1; i < d; ++i)
    for (int k = 1; k < d; ++k)
      if (w[i] <= w[k]) out.add(minus(unit(n, sigma.images[i - 1]), u[k]));
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 1; k < d; ++k)
        if (w[j] < w[k]) out.add(minus(plus(u[i], u[j]), u[k]));
  for (int j = 1; j < d; ++j)
    for (int k = 1; k < d; ++k)
      if (w[j] <= w[k]) out.add(minus(u[j], u[k]), -1);
  return out;
}

SignedWeightMultiset fiber_tangent_class(const Enumeration& e, const CosetRep& sigma) {
  require_fiber(e, sigma);
  const int n = e.n, d = e.size();
  SignedWeightMultiset out(n);
  SignedWeightMultiset s(n);  // S_0 is empty
  for (int m = 1; m < e.levels(); ++m) {
    for (int i = 1; i < d; ++i)
      if (e.level[i] == m) s.add(unit(n, sigma.images[i - 1]));
    for (int i = 1; i < d; ++i)
      for (int j = i; j < d; ++j)
        if (e.level[j] == m - 1) s.add(plus(e.order[i], e.order[j]));
    for (int j = 1; j < d; ++j)
      if (e.level[j] == m) s.add(e.order[j], -1);
    add_layer(out, s, e, m);
  }
  return out;
}

int tangent_fixed_rank_at(const Enumeration& e, const LatticePoint& u) {
  int nonzero = 0, sum = 0;
  for (int c : u) {
    nonzero += (c != 0);
    sum += c;
  }
  if (sum == 0 || (nonzero == 1 && sum == 1)) return 0;
  int pairs = 0;
  const int d = e.size();
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j)
      if (plus(e.order[i], e.order[j]) == u) ++pairs;
  return pairs - 1;
}

int obstruction_fixed_rank_at(const Enumeration& e, const LatticePoint& u) {
  int triples = 0;
  const int d = e.size();
  for (int i = 1; i < d; ++i)
    for (int k = i + 1; k < d; ++k)
      for (int j = 1; j < d; ++j)
        if (plus(plus(e.order[i], e.order[j]), e.order[k]) == u) ++triples;
  return triples;
}

FixedRanks fixed_ranks(const Enumeration& e) {
  FixedRanks r;
  for (const auto& u : e.order) {
    r.tangent += tangent_fixed_rank_at(e, u);
    r.obstruction += obstruction_fixed_rank_at(e, u);
  }
  return r;
}

FactoredRational euler_class(const SignedWeightMultiset& m, Namespace ns) {
  FactoredRational r = FactoredRational::one();
  for (const auto& [w, mult] : m.entries()) {
    LinearForm form = linear_form_of(w, ns);
    if (!form.is_zero()) r.multiply_form(form, mult);
  }
  return r;
}

FactoredRational flag_tangent_euler(const CosetRep& sigma, int n, const std::vector<int>& hat_dims) {
  const std::vector<int> w = flag_levels(n, hat_dims);
  const std::vector<int> full = extend_coset(sigma, n);
  const int k = std::accumulate(hat_dims.begin(), hat_dims.end(), 0);
  FactoredRational r = FactoredRational::one();
  for (int j = 1; j <= k; ++j)
    for (int i = 1; i <= n; ++i)
      if (w[i - 1] > w[j - 1])
        r.multiply_form(LinearForm::variable(s_var(full[i - 1])) - LinearForm::variable(s_var(full[j - 1])), 1);
  return r;
}

}  // namespace nahilb
