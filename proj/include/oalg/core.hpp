#pragma once

// Finite posets, operation tables, cones, and unary-operation properties.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oalg/error.hpp"

namespace oalg {

/// Elements are referred to by their position in the declared element order.
using Elem = std::uint32_t;

namespace detail {

inline void validate_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string_view, std::size_t> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(Errc::InvalidName, "empty element name");
    for (char ch : n) {
      if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f') {
        throw Error(Errc::InvalidName, "element name '" + n + "' contains whitespace");
      }
    }
    if (!seen.emplace(n, 0).second) throw Error(Errc::DuplicateElement, n);
  }
}

}  // namespace detail

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds a poset from a full relation matrix (row-major, leq[a*n+b] = a<=b).
  /// Throws InvalidOrder unless the relation is reflexive, antisymmetric and transitive.
  static FinitePoset from_relation(std::vector<std::string> names, std::vector<std::uint8_t> leq) {
    detail::validate_names(names);
    const std::size_t n = names.size();
    if (leq.size() != n * n) throw Error(Errc::InvalidOrder, "relation size does not match universe");
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq[a * n + a]) throw Error(Errc::InvalidOrder, "not reflexive at " + names[a]);
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq[a * n + b] && leq[b * n + a]) {
          throw Error(Errc::InvalidOrder, "not antisymmetric at " + names[a] + ", " + names[b]);
        }
        if (!leq[a * n + b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq[b * n + c] && !leq[a * n + c]) {
            throw Error(Errc::InvalidOrder,
                        "not transitive at " + names[a] + ", " + names[b] + ", " + names[c]);
          }
        }
      }
    }
    FinitePoset p;
    p.names_ = std::move(names);
    p.leq_ = std::move(leq);
    p.reindex();
    return p;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem e) const { return names_.at(e); }

  std::optional<Elem> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Elem index_of(std::string_view name) const {
    auto e = find(name);
    if (!e) throw Error(Errc::UnknownName, std::string(name));
    return *e;
  }

  bool leq(Elem a, Elem b) const noexcept { return leq_[a * size() + b] != 0; }
  bool less(Elem a, Elem b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const noexcept { return leq(a, b) || leq(b, a); }

  std::span<const std::uint8_t> relation() const noexcept { return leq_; }

  /// Hasse diagram edges (a, b) with a covered by b, in lexicographic order.
  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    const auto n = static_cast<Elem>(size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (!less(a, b)) continue;
        bool cover = true;
        for (Elem c = 0; c < n && cover; ++c) cover = !(less(a, c) && less(c, b));
        if (cover) out.emplace_back(a, b);
      }
    }
    return out;
  }

  friend bool operator==(const FinitePoset& x, const FinitePoset& y) {
    return x.names_ == y.names_ && x.leq_ == y.leq_;
  }

 private:
  void reindex() {
    index_.clear();
    for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], static_cast<Elem>(i));
  }

  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::unordered_map<std::string, Elem> index_;
};

/// Reflexive-transitive closure of the given comparabilities. Redundant pairs are accepted.
inline FinitePoset poset_from_covers(std::vector<std::string> elements,
                                     const std::vector<std::pair<std::string, std::string>>& covers) {
  detail::validate_names(elements);
  const std::size_t n = elements.size();
  std::unordered_map<std::string_view, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(elements[i], i);
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw Error(Errc::UnknownName, s);
    return it->second;
  };
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) leq[lookup(lo) * n + lookup(hi)] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(Errc::CycleDetected, elements[i] + " and " + elements[j] + " lie on a cycle");
      }
    }
  }
  return FinitePoset::from_relation(std::move(elements), std::move(leq));
}

struct Bounds {
  std::optional<Elem> bottom;
  std::optional<Elem> top;
};

inline Bounds bounds(const FinitePoset& p) {
  Bounds b;
  const auto n = static_cast<Elem>(p.size());
  for (Elem x = 0; x < n; ++x) {
    bool below_all = true;
    bool above_all = true;
    for (Elem y = 0; y < n; ++y) {
      below_all = below_all && p.leq(x, y);
      above_all = above_all && p.leq(y, x);
    }
    if (below_all) b.bottom = x;
    if (above_all) b.top = x;
  }
  return b;
}

/// Upper cone U(a,b) and lower cone L(a,b), each listed in element order.
struct ConePair {
  std::vector<Elem> upper;
  std::vector<Elem> lower;
};

inline ConePair cones(const FinitePoset& p, Elem a, Elem b) {
  if (a >= p.size() || b >= p.size()) throw Error(Errc::UnknownName, "element index out of range");
  ConePair c;
  const auto n = static_cast<Elem>(p.size());
  for (Elem x = 0; x < n; ++x) {
    if (p.leq(a, x) && p.leq(b, x)) c.upper.push_back(x);
    if (p.leq(x, a) && p.leq(x, b)) c.lower.push_back(x);
  }
  return c;
}

inline ConePair cones(const FinitePoset& p, std::string_view a, std::string_view b) {
  return cones(p, p.index_of(a), p.index_of(b));
}

class UnaryTable {
 public:
  UnaryTable() = default;
  explicit UnaryTable(std::vector<Elem> map) : map_(std::move(map)) {
    for (Elem v : map_) {
      if (v >= map_.size()) throw Error(Errc::UnknownName, "unary table value out of range");
    }
  }

  std::size_t size() const noexcept { return map_.size(); }
  Elem operator()(Elem x) const { return map_[x]; }
  std::span<const Elem> values() const noexcept { return map_; }
  const Elem* data() const noexcept { return map_.data(); }

  friend bool operator==(const UnaryTable&, const UnaryTable&) = default;

 private:
  std::vector<Elem> map_;
};

/// Square operation table, cell (x, y) at x*n+y.
class BinaryTable {
 public:
  BinaryTable() = default;
  explicit BinaryTable(std::size_t n, Elem fill = 0) : n_(n), cells_(n * n, fill) {}
  BinaryTable(std::size_t n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) throw Error(Errc::InvalidOrder, "binary table is not square");
    for (Elem v : cells_) {
      if (v >= n_) throw Error(Errc::UnknownName, "binary table value out of range");
    }
  }

  std::size_t size() const noexcept { return n_; }
  Elem operator()(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  void set(Elem x, Elem y, Elem v) { cells_[x * n_ + y] = v; }
  std::span<const Elem> cells() const noexcept { return cells_; }
  const Elem* data() const noexcept { return cells_.data(); }

  friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// A property flag; on failure `witness` holds the least violating tuple.
struct Flag {
  bool holds = true;
  std::vector<Elem> witness;
};

struct UnaryProperties {
  Flag antitone;    // witness (x, y) with x<=y but u(y) not <= u(x)
  Flag involution;  // witness (x) with u(u(x)) != x
  Flag surjective;  // witness (x) not in the image
};

inline UnaryProperties unary_properties(const FinitePoset& p, const UnaryTable& u) {
  if (u.size() != p.size()) throw Error(Errc::UnknownName, "unary table does not match universe");
  UnaryProperties r;
  const auto n = static_cast<Elem>(p.size());
  for (Elem x = 0; x < n && r.antitone.holds; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (p.leq(x, y) && !p.leq(u(y), u(x))) {
        r.antitone = {false, {x, y}};
        break;
      }
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (u(u(x)) != x) {
      r.involution = {false, {x}};
      break;
    }
  }
  std::vector<std::uint8_t> hit(n, 0);
  for (Elem x = 0; x < n; ++x) hit[u(x)] = 1;
  for (Elem x = 0; x < n; ++x) {
    if (!hit[x]) {
      r.surjective = {false, {x}};
      break;
    }
  }
  return r;
}

}  // namespace oalg
