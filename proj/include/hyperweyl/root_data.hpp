#ifndef HYPERWEYL_ROOT_DATA_HPP
#define HYPERWEYL_ROOT_DATA_HPP

#include "scalars.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cctype>
#include <deque>
#include <optional>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweyl {

/// Integer vector in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  [[nodiscard]] std::size_t rank() const noexcept { return coords.size(); }
  auto operator<=>(const Weight&) const = default;

  Weight operator+(const Weight& o) const { return zip(o, std::plus<>{}); }
  Weight operator-(const Weight& o) const { return zip(o, std::minus<>{}); }
  Weight operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  [[nodiscard]] bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }

private:
  template <class Op>
  Weight zip(const Weight& o, Op op) const {
    if (o.rank() != rank()) throw std::invalid_argument("Weight: rank mismatch");
    Weight r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] = op(coords[i], o.coords[i]);
    return r;
  }
};

/// Integer vector in the simple-root basis.
struct RootVector {
  std::vector<int> coords;

  auto operator<=>(const RootVector&) const = default;
  [[nodiscard]] int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
  [[nodiscard]] bool in_positive_cone() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }
  RootVector operator+(const RootVector& o) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    return r;
  }
  RootVector operator-(const RootVector& o) const {
    RootVector r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  RootVector scaled(int k) const {
    RootVector r = *this;
    for (auto& c : r.coords) c *= k;
    return r;
  }
};

class RootDatum {
public:
  using Matrix = std::vector<std::vector<int>>;

  RootDatum(char series, int rank) : series_(series), rank_(rank) {
    cartan_ = cartan_matrix(series, rank);
    generate_roots();
  }

  [[nodiscard]] char series() const noexcept { return series_; }
  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] std::string label() const { return std::string(1, series_) + std::to_string(rank_); }
  /// a(i, j) = alpha_j(h_i).
  [[nodiscard]] int cartan(int i, int j) const { return cartan_[i][j]; }
  [[nodiscard]] const Matrix& cartan_matrix() const noexcept { return cartan_; }

  [[nodiscard]] std::size_t num_positive_roots() const noexcept { return roots_.size(); }
  [[nodiscard]] const RootVector& root(std::size_t idx) const { return roots_.at(idx); }
  [[nodiscard]] const std::vector<RootVector>& positive_roots() const noexcept { return roots_; }
  /// h_alpha = sum_i coroot(idx)[i] h_i.
  [[nodiscard]] const std::vector<int>& coroot(std::size_t idx) const { return coroots_.at(idx); }

  /// Index of a positive root, or -1.
  [[nodiscard]] int root_index(const RootVector& r) const {
    auto it = std::find(roots_.begin(), roots_.end(), r);
    return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
  }
  /// Index of the simple root alpha_i (simple roots come first).
  [[nodiscard]] std::size_t simple_root_index(int i) const { return static_cast<std::size_t>(i); }

  [[nodiscard]] Weight zero_weight() const { return Weight{std::vector<int>(rank_, 0)}; }
  [[nodiscard]] Weight fundamental(int i) const {
    Weight w = zero_weight();
    w.coords.at(i) = 1;
    return w;
  }
  [[nodiscard]] Weight rho() const { return Weight{std::vector<int>(rank_, 1)}; }

  /// lambda(h_alpha) for the positive root with the given index.
  [[nodiscard]] int pairing(const Weight& lambda, std::size_t root_idx) const {
    check(lambda);
    const auto& c = coroots_.at(root_idx);
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += c[i] * lambda.coords[i];
    return s;
  }
  /// beta(h_i) for a root-lattice vector beta.
  [[nodiscard]] int root_on_coroot(const RootVector& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta.coords[j];
    return s;
  }

  [[nodiscard]] Weight to_weight(const RootVector& beta) const {
    Weight w = zero_weight();
    for (int i = 0; i < rank_; ++i) w.coords[i] = root_on_coroot(beta, i);
    return w;
  }

  /// Rational simple-root coordinates of a weight (solves A c = mu).
  [[nodiscard]] std::vector<Rational> to_root_coords(const Weight& mu) const {
    check(mu);
    const int n = rank_;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
      m[i][n] = mu.coords[i];
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (sgn(m[piv][col]) == 0) ++piv;
      std::swap(m[piv], m[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || sgn(m[r][col]) == 0) continue;
        Rational f = m[r][col] / m[col][col];
        for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
      }
    }
    std::vector<Rational> out(n);
    for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
    return out;
  }

  /// Integral simple-root coordinates if mu lies in the root lattice.
  [[nodiscard]] std::optional<RootVector> to_root_vector(const Weight& mu) const {
    auto q = to_root_coords(mu);
    RootVector r{std::vector<int>(rank_)};
    for (int i = 0; i < rank_; ++i) {
      if (!is_integer(q[i])) return std::nullopt;
      r.coords[i] = static_cast<int>(q[i].get_num().get_si());
    }
    return r;
  }

  /// mu <= lambda iff lambda - mu is a non-negative integer combination of simple roots.
  [[nodiscard]] bool dominance_leq(const Weight& mu, const Weight& lambda) const {
    auto r = to_root_vector(lambda - mu);
    return r && r->in_positive_cone();
  }

  [[nodiscard]] Weight reflect(const Weight& mu, int i) const {
    check(mu);
    Weight r = mu;
    const int m = mu.coords[i];
    for (int k = 0; k < rank_; ++k) r.coords[k] -= m * cartan_[k][i];
    return r;
  }

  [[nodiscard]] std::set<Weight> weyl_orbit(const Weight& mu) const {
    check(mu);
    std::set<Weight> seen{mu};
    std::deque<Weight> queue{mu};
    while (!queue.empty()) {
      Weight w = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < rank_; ++i) {
        Weight s = reflect(w, i);
        if (seen.insert(s).second) queue.push_back(std::move(s));
      }
    }
    return seen;
  }

  /// The unique dominant weight in the orbit of mu.
  [[nodiscard]] Weight dominant_conjugate(Weight mu) const {
    check(mu);
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < rank_; ++i) {
        if (mu.coords[i] < 0) {
          mu = reflect(mu, i);
          changed = true;
        }
      }
    }
    return mu;
  }

  /// w_0 applied to a weight.
  [[nodiscard]] Weight longest_element_image(const Weight& lambda) const {
    return -dominant_conjugate(-lambda);
  }

  [[nodiscard]] Integer weyl_dimension(const Weight& lambda) const {
    check(lambda);
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    const Weight shifted = lambda + rho();
    Rational d = 1;
    for (std::size_t a = 0; a < roots_.size(); ++a)
      d *= make_rational(pairing(shifted, a), pairing(rho(), a));
    if (!is_integer(d)) throw std::logic_error("weyl_dimension: non-integral result");
    return d.get_num();
  }

  [[nodiscard]] Integer weyl_group_order() const {
    const unsigned long n = static_cast<unsigned long>(rank_);
    switch (series_) {
      case 'A': return factorial(n + 1);
      case 'B':
      case 'C': return (Integer(1) << n) * factorial(n);
      case 'D': return (Integer(1) << (n - 1)) * factorial(n);
      case 'E': return n == 6 ? Integer(51840) : n == 7 ? Integer(2903040) : Integer(696729600);
      case 'F': return 1152;
      case 'G': return 12;
    }
    throw std::logic_error("weyl_group_order: unknown series");
  }

  static Matrix cartan_matrix(char series, int n) {
    auto bad = [&] {
      return std::invalid_argument("invalid simple type " + std::string(1, series) + std::to_string(n));
    };
    if (n < 1) throw bad();
    Matrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (series) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
      case 'B':
        if (n < 2) throw bad();
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;  // alpha_n short
        break;
      case 'C':
        if (n < 2) throw bad();
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;  // alpha_n long
        break;
      case 'D':
        if (n < 4) throw bad();
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
      case 'E':
        if (n < 6 || n > 8) throw bad();
        // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
      case 'F':
        if (n != 4) throw bad();
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[2][1] = -2;
        break;
      case 'G':
        if (n != 2) throw bad();
        a[0][1] = -3;  // alpha_1 short
        a[1][0] = -1;
        break;
      default:
        throw bad();
    }
    return a;
  }

private:
  void check(const Weight& w) const {
    if (static_cast<int>(w.rank()) != rank_) throw std::invalid_argument("weight rank does not match root datum");
  }

  void generate_roots() {
    struct Pair {
      RootVector root;
      std::vector<int> coroot;
    };
    std::vector<Pair> found;
    std::deque<Pair> queue;
    for (int i = 0; i < rank_; ++i) {
      Pair p{RootVector{std::vector<int>(rank_, 0)}, std::vector<int>(rank_, 0)};
      p.root.coords[i] = 1;
      p.coroot[i] = 1;
      found.push_back(p);
      queue.push_back(p);
    }
    auto known = [&](const RootVector& r) {
      return std::any_of(found.begin(), found.end(), [&](const Pair& p) { return p.root == r; });
    };
    while (!queue.empty()) {
      Pair p = queue.front();
      queue.pop_front();
      for (int j = 0; j < rank_; ++j) {
        const int c = root_on_coroot(p.root, j);
        Pair q = p;
        q.root.coords[j] -= c;
        int d = 0;  // alpha_j(h)
        for (int k = 0; k < rank_; ++k) d += p.coroot[k] * cartan_[k][j];
        q.coroot[j] -= d;
        if (!q.root.in_positive_cone() || q.root.height() == 0 || known(q.root)) continue;
        found.push_back(q);
        queue.push_back(q);
      }
    }
    std::sort(found.begin(), found.end(), [](const Pair& x, const Pair& y) {
      if (x.root.height() != y.root.height()) return x.root.height() < y.root.height();
      return x.root.coords > y.root.coords;
    });
    for (auto& p : found) {
      roots_.push_back(std::move(p.root));
      coroots_.push_back(std::move(p.coroot));
    }
  }

  char series_;
  int rank_;
  Matrix cartan_;
  std::vector<RootVector> roots_;
  std::vector<std::vector<int>> coroots_;
};

inline RootDatum build_root_datum(char series, int rank) { return RootDatum(series, rank); }

/// Parses "A1", "A2", "G2", ...
inline RootDatum parse_root_datum(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("invalid type label '" + label + "'");
  int rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoi(label.substr(1), &pos);
    if (pos != label.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid type label '" + label + "'");
  }
  return RootDatum(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))), rank);
}

}  // namespace hyperweyl

#endif
