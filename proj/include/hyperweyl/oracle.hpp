#ifndef HYPERWEYL_ORACLE_HPP
#define HYPERWEYL_ORACLE_HPP

#include "coeff_algebra.hpp"
#include "root_data.hpp"
#include "scalars.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hyperweyl {

class UnsupportedTypeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Block of a Lie basis element; the numeric order is the PBW block order.
enum class LetterKind : std::uint8_t { Lower = 0, Cartan = 1, Raise = 2 };

/// x_alpha^- (x) b, h_i (x) b or x_alpha^+ (x) b. `index` is a positive root
/// index for root vectors and a node for Cartan elements.
struct LieBasisElt {
  LetterKind kind = LetterKind::Cartan;
  std::uint8_t index = 0;
  Monomial b;

  friend std::strong_ordering operator<=>(const LieBasisElt& x, const LieBasisElt& y) {
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.index <=> y.index; c != 0) return c;
    return x.b <=> y.b;
  }
  friend bool operator==(const LieBasisElt& x, const LieBasisElt& y) { return (x <=> y) == 0; }

  [[nodiscard]] std::size_t hash() const noexcept {
    return (static_cast<std::size_t>(kind) * 131u + index) * 1000003u ^ b.hash();
  }
};

inline LieBasisElt lower(std::size_t root, const Monomial& b) {
  return {LetterKind::Lower, static_cast<std::uint8_t>(root), b};
}
inline LieBasisElt raise(std::size_t root, const Monomial& b) {
  return {LetterKind::Raise, static_cast<std::uint8_t>(root), b};
}
inline LieBasisElt cartan(int node, const Monomial& b) {
  return {LetterKind::Cartan, static_cast<std::uint8_t>(node), b};
}

using PbwWord = std::vector<LieBasisElt>;

struct PbwWordHash {
  std::size_t operator()(const PbwWord& w) const noexcept {
    std::size_t h = w.size();
    for (const auto& x : w) h = h * 0x9E3779B97F4A7C15ull ^ x.hash();
    return h;
  }
};

/// Finitely supported rational combination of ordered PBW words.
class OracleElt {
public:
  using Terms = std::map<PbwWord, Rational>;

  OracleElt() = default;
  static OracleElt scalar(const Rational& c) {
    OracleElt e;
    e.add(PbwWord{}, c);
    return e;
  }
  static OracleElt word(PbwWord w, const Rational& c = 1) {
    OracleElt e;
    e.add(std::move(w), c);
    return e;
  }

  void add(const PbwWord& w, const Rational& c) {
    if (hyperweyl::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (hyperweyl::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const OracleElt& o, const Rational& c = 1) {
    for (const auto& [w, x] : o.terms_) add(w, c * x);
  }

  OracleElt& operator+=(const OracleElt& o) {
    add(o);
    return *this;
  }
  OracleElt& operator-=(const OracleElt& o) {
    add(o, -1);
    return *this;
  }
  OracleElt& operator*=(const Rational& c) {
    if (hyperweyl::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
  }
  friend OracleElt operator+(OracleElt a, const OracleElt& b) { return a += b; }
  friend OracleElt operator-(OracleElt a, const OracleElt& b) { return a -= b; }
  friend OracleElt operator*(OracleElt a, const Rational& c) { return a *= c; }
  friend bool operator==(const OracleElt& a, const OracleElt& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }

  /// Removes every word containing a raising letter (projection modulo U * n+).
  [[nodiscard]] OracleElt drop_raising() const {
    OracleElt out;
    for (const auto& [w, c] : terms_)
      if (w.empty() || w.back().kind != LetterKind::Raise) out.terms_.emplace(w, c);
    return out;
  }

private:
  Terms terms_;
};

/// Lie structure of g (x) A for a type A_n Chevalley basis realized by
/// matrix units: x_alpha^+ = E_ij (i < j), x_alpha^- = E_ji, h_k = E_kk - E_k+1,k+1.
/// This fixes N(alpha_1, alpha_2) = +1 for the extraspecial pair.
class ChevalleyTable {
public:
  explicit ChevalleyTable(const RootDatum& datum) : rank_(datum.rank()) {
    if (datum.series() != 'A')
      throw UnsupportedTypeError("the enveloping-algebra engine supports type A only, got " + datum.label());
    for (std::size_t a = 0; a < datum.num_positive_roots(); ++a) {
      const auto& r = datum.root(a);
      int first = -1, last = -1;
      for (int i = 0; i < rank_; ++i)
        if (r.coords[i] != 0) {
          if (first < 0) first = i;
          last = i;
        }
      spans_.emplace_back(first, last + 1);
    }
  }

  /// One term of a bracket: coefficient times a basis element of g.
  struct GTerm {
    LetterKind kind;
    int index;
    int coeff;
  };

  [[nodiscard]] std::vector<GTerm> bracket(LetterKind k1, int i1, LetterKind k2, int i2) const {
    auto m1 = matrix(k1, i1);
    auto m2 = matrix(k2, i2);
    std::map<std::pair<int, int>, int> prod;
    for (const auto& [r1, c1, v1] : m1)
      for (const auto& [r2, c2, v2] : m2) {
        if (c1 == r2) prod[{r1, c2}] += v1 * v2;
        if (c2 == r1) prod[{r2, c1}] -= v1 * v2;
      }
    std::vector<GTerm> out;
    std::vector<int> diag(rank_ + 1, 0);
    for (const auto& [rc, v] : prod) {
      if (v == 0) continue;
      const auto [r, c] = rc;
      if (r == c) {
        diag[r] += v;
      } else if (r < c) {
        out.push_back({LetterKind::Raise, root_of(r, c), v});
      } else {
        out.push_back({LetterKind::Lower, root_of(c, r), v});
      }
    }
    // diag = sum_k c_k (e_k - e_{k+1})  =>  c_k = diag_0 + ... + diag_k
    int acc = 0;
    for (int k = 0; k < rank_; ++k) {
      acc += diag[k];
      if (acc != 0) out.push_back({LetterKind::Cartan, k, acc});
    }
    return out;
  }

private:
  struct Entry {
    int row, col, value;
  };

  [[nodiscard]] std::vector<Entry> matrix(LetterKind k, int idx) const {
    switch (k) {
      case LetterKind::Raise: return {{spans_[idx].first, spans_[idx].second, 1}};
      case LetterKind::Lower: return {{spans_[idx].second, spans_[idx].first, 1}};
      case LetterKind::Cartan: return {{idx, idx, 1}, {idx + 1, idx + 1, -1}};
    }
    return {};
  }

  [[nodiscard]] int root_of(int i, int j) const {
    for (std::size_t a = 0; a < spans_.size(); ++a)
      if (spans_[a].first == i && spans_[a].second == j) return static_cast<int>(a);
    throw std::logic_error("ChevalleyTable: no root for matrix unit");
  }

  int rank_;
  std::vector<std::pair<int, int>> spans_;
};

/// The rational enveloping algebra U(g (x) A) with PBW normal form. Products
/// are straightened by xy = yx + [x, y]; results are memoized per instance.
class Envelope {
public:
  Envelope(RootDatum datum, CoeffAlgebraSpec spec) : datum_(std::move(datum)), spec_(spec), table_(datum_) {
    npos_ = static_cast<int>(datum_.num_positive_roots());
    dim_ = 2 * npos_ + datum_.rank();
    table_cache_.resize(static_cast<std::size_t>(dim_ * dim_));
    for (auto k1 : {LetterKind::Lower, LetterKind::Cartan, LetterKind::Raise})
      for (int i1 = 0; i1 < block_size(k1); ++i1)
        for (auto k2 : {LetterKind::Lower, LetterKind::Cartan, LetterKind::Raise})
          for (int i2 = 0; i2 < block_size(k2); ++i2)
            table_cache_[code(k1, i1) * dim_ + code(k2, i2)] = table_.bracket(k1, i1, k2, i2);
  }

  [[nodiscard]] const RootDatum& datum() const noexcept { return datum_; }
  [[nodiscard]] const CoeffAlgebraSpec& coeff_spec() const noexcept { return spec_; }

  /// [x, y] as a combination of basis elements (coefficients are integers).
  [[nodiscard]] std::vector<std::pair<LieBasisElt, int>> bracket(const LieBasisElt& x, const LieBasisElt& y) const {
    const auto& g = table_cache_[code(x.kind, x.index) * dim_ + code(y.kind, y.index)];
    std::vector<std::pair<LieBasisElt, int>> out;
    if (g.empty()) return out;
    const Monomial ab = mul_basis(spec_, x.b, y.b);
    for (const auto& t : g) out.push_back({{t.kind, static_cast<std::uint8_t>(t.index), ab}, t.coeff});
    return out;
  }

  [[nodiscard]] OracleElt lie_bracket(const LieBasisElt& x, const LieBasisElt& y) const {
    OracleElt e;
    for (const auto& [z, c] : bracket(x, y)) e.add(PbwWord{z}, c);
    return e;
  }

  /// Normal form of x * w for an ordered word w.
  const OracleElt& left_multiply(const LieBasisElt& x, const PbwWord& w) {
    Key key{x, w};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    OracleElt result;
    if (w.empty() || !(w.front() < x)) {
      PbwWord v;
      v.reserve(w.size() + 1);
      v.push_back(x);
      v.insert(v.end(), w.begin(), w.end());
      result.add(v, 1);
    } else {
      // x y w' = y (x w') + [x, y] w'
      const LieBasisElt& y = w.front();
      const PbwWord rest(w.begin() + 1, w.end());
      const OracleElt xr = left_multiply(x, rest);
      for (const auto& [v, c] : xr.terms()) result.add(left_multiply(y, v), c);
      for (const auto& [z, c] : bracket(x, y)) result.add(left_multiply(z, rest), Rational(c));
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  /// Normal form of word * e, where word is an arbitrary letter sequence.
  [[nodiscard]] OracleElt left_multiply_word(const PbwWord& word, OracleElt e) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      OracleElt next;
      for (const auto& [v, c] : e.terms()) next.add(left_multiply(*it, v), c);
      e = std::move(next);
    }
    return e;
  }

  [[nodiscard]] OracleElt multiply(const OracleElt& a, const OracleElt& b) {
    OracleElt out;
    for (const auto& [u, c] : a.terms()) out.add(left_multiply_word(u, b), c);
    return out;
  }

  /// Fully straightened form of coefficient * word.
  [[nodiscard]] OracleElt normal_form(const PbwWord& word, const Rational& coefficient = 1) {
    return left_multiply_word(word, OracleElt::scalar(coefficient));
  }

  [[nodiscard]] std::size_t memo_size() const noexcept { return memo_.size(); }
  void clear_memo() { memo_.clear(); }

  /// Root-lattice weight of a letter (Cartan letters have weight zero).
  [[nodiscard]] RootVector weight(const LieBasisElt& x) const {
    if (x.kind == LetterKind::Cartan) return RootVector{std::vector<int>(datum_.rank(), 0)};
    const auto& r = datum_.root(x.index);
    return x.kind == LetterKind::Raise ? r : r.scaled(-1);
  }

  /// (weight, A-degree) of a word.
  [[nodiscard]] std::pair<RootVector, int> bidegree(const PbwWord& w) const {
    RootVector wt{std::vector<int>(datum_.rank(), 0)};
    int deg = 0;
    for (const auto& x : w) {
      wt = wt + weight(x);
      deg += x.b.degree();
    }
    return {wt, deg};
  }

private:
  struct Key {
    LieBasisElt x;
    PbwWord w;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.x.hash() * 31u ^ PbwWordHash{}(k.w); }
  };

  [[nodiscard]] int block_size(LetterKind k) const { return k == LetterKind::Cartan ? datum_.rank() : npos_; }
  [[nodiscard]] int code(LetterKind k, int i) const {
    return k == LetterKind::Lower ? i : k == LetterKind::Cartan ? npos_ + i : npos_ + datum_.rank() + i;
  }

  RootDatum datum_;
  CoeffAlgebraSpec spec_;
  ChevalleyTable table_;
  std::vector<std::vector<ChevalleyTable::GTerm>> table_cache_;
  int npos_ = 0;
  int dim_ = 0;
  std::unordered_map<Key, OracleElt, KeyHash> memo_;
};

/// Straightens coefficient * word in a fresh or shared envelope.
inline OracleElt oracle_normal_form(Envelope& env, const PbwWord& word, const Rational& coefficient = 1) {
  return env.normal_form(word, coefficient);
}

}  // namespace hyperweyl

#endif
