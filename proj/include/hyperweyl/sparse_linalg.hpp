#ifndef HYPERWEYL_SPARSE_LINALG_HPP
#define HYPERWEYL_SPARSE_LINALG_HPP

#include "scalars.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace hyperweyl {

/// Sparse vector keyed by column index; entries sorted by column, never zero.
template <class V>
class SparseVec {
public:
  using Entry = std::pair<std::size_t, V>;

  SparseVec() = default;

  static SparseVec from_map(const std::map<std::size_t, V>& m) {
    SparseVec v;
    for (const auto& [c, x] : m)
      if (!is_zero(x)) v.entries_.emplace_back(c, x);
    return v;
  }

  /// Adds x at column c (accumulating). Out-of-order columns are merged.
  void add(std::size_t c, const V& x) {
    if (is_zero(x)) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != entries_.end() && it->first == c) {
      it->second += x;
      if (is_zero(it->second)) entries_.erase(it);
    } else {
      entries_.insert(it, Entry{c, x});
    }
  }

  [[nodiscard]] const V* find(std::size_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    return (it != entries_.end() && it->first == c) ? &it->second : nullptr;
  }

  /// this -= f * other
  void axpy_sub(const V& f, const SparseVec& other) {
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, V(-(f * b->second)));
        ++b;
      } else {
        V x = V(a->second - f * b->second);
        if (!is_zero(x)) out.emplace_back(a->first, std::move(x));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  void scale(const V& f) {
    for (auto& e : entries_) e.second *= f;
  }

  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t leading() const { return entries_.front().first; }

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (a.entries_[i].first != b.entries_[i].first || !(a.entries_[i].second == b.entries_[i].second))
        return false;
    return true;
  }

private:
  std::vector<Entry> entries_;
};

/// Entrywise reduction of a p-integral rational vector.
inline SparseVec<Residue> reduce_mod_p(const SparseVec<Rational>& v, std::uint32_t p) {
  SparseVec<Residue> out;
  for (const auto& [c, q] : v.entries()) out.add(c, reduce_mod_p(q, p));
  return out;
}

/// Row space kept in reduced row echelon form. The pivot of a row is its
/// smallest column; rows are stored in increasing pivot order.
template <class V>
class RowSpace {
public:
  /// Reduces v against the space; if the residue is nonzero it is adjoined.
  /// Returns the residue (before normalization).
  SparseVec<V> insert(SparseVec<V> v) {
    check_field(v);
    reduce(v);
    if (v.empty()) return v;
    SparseVec<V> residue = v;
    const std::size_t piv = v.leading();
    V inv = V(v.entries().front().second);
    inv = one_like(inv) / inv;
    v.scale(inv);
    for (auto& [p, row] : rows_) {
      if (const V* x = row.find(piv)) {
        V f = *x;
        row.axpy_sub(f, v);
      }
    }
    rows_.emplace(piv, std::move(v));
    return residue;
  }

  /// Residue of v modulo the space; zero iff v lies in the span.
  void reduce(SparseVec<V>& v) const {
    if (rows_.empty()) return;
    std::vector<std::pair<std::size_t, V>> hits;
    for (const auto& [c, x] : v.entries())
      if (rows_.count(c)) hits.emplace_back(c, x);
    // RREF: eliminating one pivot never introduces another pivot column.
    for (const auto& [c, x] : hits) v.axpy_sub(x, rows_.at(c));
  }

  [[nodiscard]] bool contains(SparseVec<V> v) const {
    reduce(v);
    return v.empty();
  }

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] const std::map<std::size_t, SparseVec<V>>& rows() const noexcept { return rows_; }

  /// Number of rows whose pivot is >= first. With columns ordered so that
  /// [first, ...) is a subspace's coordinate block, this is the dimension of
  /// the intersection of the row space with that coordinate subspace.
  [[nodiscard]] std::size_t rank_from(std::size_t first) const {
    return static_cast<std::size_t>(std::distance(rows_.lower_bound(first), rows_.end()));
  }

private:
  void check_field(const SparseVec<V>& v) {
    if constexpr (std::is_same_v<V, Residue>) {
      for (const auto& e : v.entries()) {
        if (prime_ == 0) prime_ = e.second.prime();
        if (e.second.prime() != prime_)
          throw FieldMismatchError("RowSpace: vector over F_" + std::to_string(e.second.prime()) +
                                   " inserted into a space over F_" + std::to_string(prime_));
      }
    }
  }

  static V one_like(const V& x) {
    if constexpr (std::is_same_v<V, Residue>)
      return Residue(1, x.prime());
    else
      return V(1);
  }

  std::map<std::size_t, SparseVec<V>> rows_;
  std::uint32_t prime_ = 0;
};

/// Functional form of RowSpace::insert.
template <class V>
std::pair<RowSpace<V>, SparseVec<V>> row_reduce_insert(RowSpace<V> space, SparseVec<V> v) {
  auto residue = space.insert(std::move(v));
  return {std::move(space), std::move(residue)};
}

}  // namespace hyperweyl

#endif
