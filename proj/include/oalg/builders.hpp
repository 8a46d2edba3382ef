#pragma once

// Named constructions: chains, Boolean lattices and rings, MOn, O6, N5 and the
// sixteen-element Fano lambda-lattice.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "oalg/algebras.hpp"

namespace oalg {

inline Algebra chain_lattice(std::size_t n) {
  if (n == 0) throw Error(Errc::SizeOutOfRange, "a chain needs at least one element");
  const auto names = bounded_names(n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return lattice_from_poset(poset_from_covers(names, covers), "chain" + std::to_string(n));
}

/// "{}", "{1}", "{2}", "{1,2}", ... in bitmask order.
inline std::vector<std::string> subset_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
    std::string s = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (!(m >> i & 1)) continue;
      if (s.size() > 1) s += ',';
      s += std::to_string(i + 1);
    }
    out.push_back(s + "}");
  }
  return out;
}

/// Subsets of a k-set under inclusion, with set complement as neg.
inline Algebra boolean_lattice(std::size_t k) {
  if (k > 6) throw Error(Errc::SizeOutOfRange, "boolean lattice is limited to 6 atoms");
  const auto names = subset_names(k);
  const auto n = static_cast<Elem>(names.size());
  std::vector<std::uint8_t> leq(std::size_t{n} * n);
  std::vector<Elem> neg(n);
  for (Elem x = 0; x < n; ++x) {
    neg[x] = (n - 1) ^ x;
    for (Elem y = 0; y < n; ++y) leq[x * n + y] = (x & y) == x;
  }
  Algebra a = lattice_from_poset(FinitePoset::from_relation(names, std::move(leq)), "boolean" + std::to_string(k));
  a.set_unary("neg", UnaryTable(std::move(neg)));
  return a;
}

/// Boolean ring on the subsets of a k-set: symmetric difference, intersection,
/// x' = x + 1, x <= y iff xy = x.
inline Algebra build_boolean_ring(std::size_t k) {
  if (k < 1 || k > 4) throw Error(Errc::SizeOutOfRange, "boolean ring needs 1 to 4 atoms");
  const auto names = subset_names(k);
  const auto n = static_cast<Elem>(names.size());
  BinaryTable plus(n), times(n);
  std::vector<Elem> neg(n);
  std::vector<std::uint8_t> leq(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x) {
    neg[x] = x ^ (n - 1);
    for (Elem y = 0; y < n; ++y) {
      plus.set(x, y, x ^ y);
      times.set(x, y, x & y);
      leq[x * n + y] = (x & y) == x;
    }
  }
  Algebra r(Kind::Semiring, "boolean_ring_" + std::to_string(k), names);
  r.set_binary("plus", std::move(plus));
  r.set_binary("times", std::move(times));
  r.set_unary("neg", UnaryTable(std::move(neg)));
  r.set_constant("zero", 0);
  r.set_order(FinitePoset::from_relation(names, std::move(leq)));
  return r;
}

/// 0, 2n pairwise incomparable atoms, 1; atom i is complemented by atom i+n.
inline Algebra mo_lattice(std::size_t n) {
  if (n < 1 || n > 10) throw Error(Errc::SizeOutOfRange, "MOn is built for 1 <= n <= 10");
  const auto names = bounded_names(2 * n + 2);
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i <= 2 * n; ++i) {
    covers.emplace_back(names[0], names[i]);
    covers.emplace_back(names[i], names.back());
  }
  Algebra a = lattice_from_poset(poset_from_covers(names, covers), "mo" + std::to_string(n));
  std::vector<Elem> neg(names.size());
  neg[0] = static_cast<Elem>(names.size() - 1);
  neg.back() = 0;
  for (std::size_t i = 1; i <= 2 * n; ++i) neg[i] = static_cast<Elem>(i <= n ? i + n : i - n);
  a.set_unary("neg", UnaryTable(std::move(neg)));
  return a;
}

/// The hexagon 0 < a < b < 1, 0 < c < d < 1 with a' = d, b' = c.
inline Algebra o6_lattice() {
  Algebra a = lattice_from_poset(
      poset_from_covers({"0", "a", "b", "c", "d", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "d"}, {"d", "1"}}),
      "o6");
  return with_unary(std::move(a), unary_from_names(a, {"1", "d", "c", "b", "a", "0"}));
}

/// N5 with a' = c' = b and b' = a or c.
inline Algebra n5_lattice(char b_prime) {
  if (b_prime != 'a' && b_prime != 'c') throw Error(Errc::UnknownName, "b' must be a or c");
  Algebra a = lattice_from_poset(
      poset_from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "1"}, {"c", "1"}}),
      std::string("n5_bprime_") + b_prime);
  return with_unary(std::move(a), unary_from_names(a, {"1", "b", std::string(1, b_prime), "b", "0"}));
}

namespace detail {

inline constexpr std::array<std::array<int, 3>, 7> kFanoLines = {
    {{0, 1, 2}, {0, 3, 5}, {0, 4, 6}, {1, 3, 6}, {1, 4, 5}, {2, 3, 4}, {2, 5, 6}}};

/// Third point on the line through distinct points x and y.
inline int fano_third(int x, int y) {
  for (const auto& l : kFanoLines) {
    const bool hx = l[0] == x || l[1] == x || l[2] == x;
    const bool hy = l[0] == y || l[1] == y || l[2] == y;
    if (hx && hy) return l[0] + l[1] + l[2] - x - y;
  }
  return -1;
}

}  // namespace detail

/// Elements 0, a..g, a'..g', 1; points below the primes of all other points.
inline Algebra build_fano_lambda() {
  std::vector<std::string> names{"0"};
  for (char c = 'a'; c <= 'g'; ++c) names.emplace_back(1, c);
  for (char c = 'a'; c <= 'g'; ++c) names.push_back(std::string(1, c) + "'");
  names.emplace_back("1");
  const Elem n = 16, top = 15;
  auto point = [](Elem e) { return e >= 1 && e <= 7; };
  auto line = [](Elem e) { return e >= 8 && e <= 14; };
  auto leq = [&](Elem x, Elem y) { return x == 0 || y == top || x == y || (point(x) && line(y) && y != x + 7); };
  BinaryTable sup(n), inf(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (point(x) && point(y) && x != y) {
        sup.set(x, y, static_cast<Elem>(detail::fano_third(x - 1, y - 1) + 8));
      } else if (leq(x, y)) {
        sup.set(x, y, y);
      } else if (leq(y, x)) {
        sup.set(x, y, x);
      } else {
        sup.set(x, y, top);
      }
      if (line(x) && line(y) && x != y) {
        inf.set(x, y, static_cast<Elem>(detail::fano_third(x - 8, y - 8) + 1));
      } else if (leq(x, y)) {
        inf.set(x, y, x);
      } else if (leq(y, x)) {
        inf.set(x, y, y);
      } else {
        inf.set(x, y, 0);
      }
    }
  }
  std::vector<Elem> neg(n);
  neg[0] = top;
  neg[top] = 0;
  for (Elem p = 1; p <= 7; ++p) {
    neg[p] = p + 7;
    neg[p + 7] = p;
  }
  Algebra a = make_lambda("fano", names, std::move(sup), std::move(inf));
  a.set_unary("neg", UnaryTable(std::move(neg)));
  return a;
}

}  // namespace oalg
