#ifndef AUTMG_ORACLE_HPP
#define AUTMG_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

// Brute-force ground truth. Nothing here may depend on the recurrence or
// generating-function headers it is used to validate.

namespace autmg {

/// Symmetric multiplicity matrix of a multigraph. Diagonal entries count
/// loops, off-diagonal entries count parallel edges.
class MultigraphMatrix
{
public:
  explicit MultigraphMatrix(std::size_t n)
    : n_(n)
    , mult_(n * n, 0)
  {
    if (n == 0) throw std::invalid_argument("multigraph needs at least one vertex");
  }

  /// Row-major n*n entries; must be symmetric and non-negative.
  MultigraphMatrix(std::size_t n, std::vector<int> entries)
    : n_(n)
    , mult_(std::move(entries))
  {
    if (n == 0) throw std::invalid_argument("multigraph needs at least one vertex");
    if (mult_.size() != n * n) throw std::invalid_argument("multiplicity matrix has wrong size");
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (at(u, v) < 0) throw std::invalid_argument("negative multiplicity");
        if (at(u, v) != at(v, u)) throw std::invalid_argument("multiplicity matrix not symmetric");
      }
  }

  std::size_t size() const { return n_; }

  int at(std::size_t u, std::size_t v) const { return mult_[u * n_ + v]; }

  /// Sets both (u,v) and (v,u).
  void set(std::size_t u, std::size_t v, int m)
  {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    mult_[u * n_ + v] = m;
    mult_[v * n_ + u] = m;
  }

  int edge_count() const
  {
    int e = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u; v < n_; ++v) e += at(u, v);
    return e;
  }

  /// E - n + 1; meaningful for connected graphs.
  int cyclomatic_number() const { return edge_count() - static_cast<int>(n_) + 1; }

  /// Upper triangle including the diagonal, row-major.
  std::vector<int> upper_flat() const
  {
    std::vector<int> flat;
    flat.reserve(n_ * (n_ + 1) / 2);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u; v < n_; ++v) flat.push_back(at(u, v));
    return flat;
  }

  /// Relabelled matrix M'[i][j] = M[perm[i]][perm[j]].
  MultigraphMatrix permuted(const std::vector<std::size_t>& perm) const
  {
    MultigraphMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out.mult_[i * n_ + j] = at(perm[i], perm[j]);
    return out;
  }

  friend bool operator==(const MultigraphMatrix&, const MultigraphMatrix&) = default;

private:
  std::size_t n_;
  std::vector<int> mult_;
};

struct SearchBudget
{
  std::uint64_t max_permutations = 5040;
  std::uint64_t max_matrices = 10'000'000;
  std::uint64_t max_edge_subsets = std::uint64_t{1} << 15;
};

namespace detail {

inline std::uint64_t checked_factorial(std::size_t n, std::uint64_t cap)
{
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
    if (f > cap) return cap + 1;
  }
  return f;
}

inline std::vector<std::size_t> identity_perm(std::size_t n)
{
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

} // namespace detail

/// Lexicographically minimal upper_flat() over all n! relabellings.
inline MultigraphMatrix canonical_form(const MultigraphMatrix& g)
{
  auto perm = detail::identity_perm(g.size());
  MultigraphMatrix best = g;
  std::vector<int> best_flat = g.upper_flat();
  do {
    MultigraphMatrix candidate = g.permuted(perm);
    std::vector<int> flat = candidate.upper_flat();
    if (flat < best_flat) {
      best_flat = std::move(flat);
      best = std::move(candidate);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Connectivity of the underlying simple graph; loops are ignored.
inline bool is_connected(const MultigraphMatrix& g)
{
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (v != u && !seen[v] && g.at(u, v) > 0) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

/// Number of vertex permutations preserving every multiplicity.
inline std::uint64_t vertex_symmetry_count(const MultigraphMatrix& g)
{
  auto perm = detail::identity_perm(g.size());
  std::uint64_t count = 0;
  do {
    if (g.permuted(perm) == g) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// |Aut| = |vertex symmetries| * prod_{u<v} m_uv! * prod_v 2^{m_vv} m_vv!
///
/// The product is the kernel of the action on vertices: permutations of
/// parallel edges, and flips and permutations of the loops at a vertex.
inline Integer aut_order(const MultigraphMatrix& g)
{
  Integer order = vertex_symmetry_count(g);
  for (std::size_t u = 0; u < g.size(); ++u) {
    const int loops = g.at(u, u);
    order *= ipower(Integer(2), static_cast<std::uint64_t>(loops)) * factorial(loops);
    for (std::size_t v = u + 1; v < g.size(); ++v) order *= factorial(g.at(u, v));
  }
  return order;
}

struct CanonicalClass
{
  MultigraphMatrix rep;
  Integer aut_order;
};

/// One representative per isomorphism class of connected multigraphs on n
/// vertices with cyclomatic number k, ordered by canonical flattening.
///
/// Enumerates every weak composition of E = n + k - 1 edges over the
/// n(n+1)/2 cells of the upper triangle.
inline std::vector<CanonicalClass> enumerate_classes(std::int64_t n, std::int64_t k,
                                                     const SearchBudget& budget = SearchBudget{})
{
  if (n < 1 || k < 0) throw std::domain_error("enumerate_classes: need n >= 1 and k >= 0");
  const auto vertices = static_cast<std::size_t>(n);
  const int edges = static_cast<int>(n + k - 1);
  const std::size_t cells = vertices * (vertices + 1) / 2;

  if (detail::checked_factorial(vertices, budget.max_permutations) > budget.max_permutations)
    throw budget_exceeded(std::to_string(n) + "! permutations exceeds " + std::to_string(budget.max_permutations));
  // C(E + cells - 1, E) matrices to visit
  const Integer matrices = binomial(edges + static_cast<std::int64_t>(cells) - 1, edges);
  if (matrices > budget.max_matrices)
    throw budget_exceeded(matrices.str() + " multiplicity matrices exceeds " + std::to_string(budget.max_matrices));

  std::vector<std::pair<std::size_t, std::size_t>> cell_index;
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u; v < vertices; ++v) cell_index.emplace_back(u, v);

  std::map<std::vector<int>, CanonicalClass> classes;
  std::vector<int> counts(cells, 0);
  auto visit = [&]() {
    MultigraphMatrix g(vertices);
    for (std::size_t c = 0; c < cells; ++c) g.set(cell_index[c].first, cell_index[c].second, counts[c]);
    if (!is_connected(g)) return;
    MultigraphMatrix canon = canonical_form(g);
    auto key = canon.upper_flat();
    if (classes.find(key) == classes.end()) {
      Integer aut = aut_order(canon);
      classes.emplace(std::move(key), CanonicalClass{std::move(canon), std::move(aut)});
    }
  };
  auto distribute = [&](auto&& self, std::size_t cell, int remaining) -> void {
    if (cell + 1 == cells) {
      counts[cell] = remaining;
      visit();
      return;
    }
    for (int m = remaining; m >= 0; --m) {
      counts[cell] = m;
      self(self, cell + 1, remaining - m);
    }
    counts[cell] = 0;
  };
  distribute(distribute, 0, edges);

  std::vector<CanonicalClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

/// Sum of 1/|Aut| over the isomorphism classes.
inline Rational oracle_I(std::int64_t n, std::int64_t k, const SearchBudget& budget = SearchBudget{})
{
  Rational sum(0);
  for (const auto& cls : enumerate_classes(n, k, budget)) sum += Rational(1) / Rational(cls.aut_order);
  return sum;
}

/// sum over connected labelled simple graphs on n vertices of t^{edges},
/// by visiting every edge subset of K_n.
inline Polynomial enumerate_connected_simple(std::int64_t n, const SearchBudget& budget = SearchBudget{})
{
  if (n < 1) throw std::domain_error("enumerate_connected_simple: n must be >= 1");
  const auto vertices = static_cast<std::size_t>(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u + 1; v < vertices; ++v) pairs.emplace_back(u, v);
  if (pairs.size() >= 63 || (std::uint64_t{1} << pairs.size()) > budget.max_edge_subsets)
    throw budget_exceeded("2^" + std::to_string(pairs.size()) + " edge subsets exceeds " +
                          std::to_string(budget.max_edge_subsets));

  std::vector<std::uint64_t> counts(pairs.size() + 1, 0);
  std::vector<std::size_t> parent(vertices);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::size_t components = vertices;
    std::size_t edges = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (((mask >> e) & 1U) == 0) continue;
      ++edges;
      const auto a = find(pairs[e].first);
      const auto b = find(pairs[e].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) ++counts[edges];
  }
  std::vector<Rational> coeffs;
  for (auto c : counts) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

} // namespace autmg

#endif // AUTMG_ORACLE_HPP
