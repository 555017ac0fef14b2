#ifndef HYPERWEYL_COEFF_ALGEBRA_HPP
#define HYPERWEYL_COEFF_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweyl {

/// Exponent vector of a monomial t1^e1 ... tm^em; the zero vector is 1.
class Monomial {
public:
  static constexpr std::size_t kMaxVars = 4;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(check_nvars(nvars))) {}
  Monomial(std::initializer_list<int> exps) : nvars_(static_cast<std::uint8_t>(check_nvars(exps.size()))) {
    std::size_t i = 0;
    for (int e : exps) exps_[i++] = static_cast<std::int16_t>(e);
  }

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.exps_.at(i) = static_cast<std::int16_t>(power);
    return m;
  }

  [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
  [[nodiscard]] int exponent(std::size_t i) const { return exps_.at(i); }
  [[nodiscard]] int degree() const noexcept {
    int d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += exps_[i];
    return d;
  }
  [[nodiscard]] bool is_one() const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] != 0) return false;
    return true;
  }
  [[nodiscard]] int max_exponent() const noexcept {
    int m = 0;
    for (std::size_t i = 0; i < nvars_; ++i) m = std::max(m, int{exps_[i]});
    return m;
  }
  [[nodiscard]] bool has_negative_exponent() const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] < 0) return true;
    return false;
  }

  Monomial operator*(const Monomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Monomial: mixed coefficient algebras");
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::int16_t>(exps_[i] + o.exps_[i]);
    return r;
  }
  [[nodiscard]] Monomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("Monomial::pow: negative exponent");
    Monomial r = *this;
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<std::int16_t>(exps_[i] * k);
    return r;
  }

  /// Graded lexicographic order; for Laurent monomials the grading is |degree|.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    if (auto c = std::abs(a.degree()) <=> std::abs(b.degree()); c != 0) return c;
    for (std::size_t i = 0; i < a.nvars_; ++i)
      if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return (a <=> b) == 0; }

  [[nodiscard]] std::size_t hash() const noexcept {
    std::size_t h = nvars_;
    for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + static_cast<std::uint16_t>(exps_[i]);
    return h;
  }

  /// "1", "t^3", "t1^2*t2"; single-variable algebras use the name t.
  [[nodiscard]] std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += nvars_ == 1 ? std::string("t") : "t" + std::to_string(i + 1);
      if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

  static Monomial parse(const std::string& text, std::size_t nvars) {
    Monomial m(nvars);
    auto fail = [&] { return std::invalid_argument("cannot parse monomial '" + text + "'"); };
    if (text == "1") return m;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 't') throw fail();
      ++pos;
      std::size_t var = 0;
      if (nvars > 1) {
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw fail();
        var = std::stoul(text.substr(pos, end - pos));
        if (var < 1 || var > nvars) throw fail();
        --var;
        pos = end;
      }
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t end = pos;
        if (end < text.size() && text[end] == '-') ++end;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos || (end == pos + 1 && text[pos] == '-')) throw fail();
        power = std::stoi(text.substr(pos, end - pos));
        pos = end;
      }
      m.exps_[var] = static_cast<std::int16_t>(m.exps_[var] + power);
      if (pos < text.size()) {
        if (text[pos] != '*') throw fail();
        ++pos;
        if (pos == text.size()) throw fail();
      }
    }
    return m;
  }

private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw std::invalid_argument("Monomial: at most 4 variables are supported");
    return n;
  }

  std::array<std::int16_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
};

using CoeffBasisElem = Monomial;

enum class CoeffKind { Constant, Polynomial, Laurent };

/// The coefficient algebra: F (constant), F[t1..tm], or F[t, t^-1].
struct CoeffAlgebraSpec {
  CoeffKind kind = CoeffKind::Polynomial;
  std::size_t nvars = 1;

  static CoeffAlgebraSpec constant() { return {CoeffKind::Constant, 0}; }
  static CoeffAlgebraSpec polynomial(std::size_t m) {
    if (m < 1 || m > Monomial::kMaxVars) throw std::invalid_argument("polynomial algebra needs 1..4 variables");
    return {CoeffKind::Polynomial, m};
  }
  static CoeffAlgebraSpec laurent() { return {CoeffKind::Laurent, 1}; }

  [[nodiscard]] Monomial one() const { return Monomial(nvars); }

  [[nodiscard]] bool contains(const Monomial& b) const {
    if (b.nvars() != nvars) return false;
    return kind == CoeffKind::Laurent || !b.has_negative_exponent();
  }

  /// Basis elements of |degree| <= max_degree, in increasing order.
  [[nodiscard]] std::vector<Monomial> basis_up_to(int max_degree) const {
    std::vector<Monomial> out;
    if (kind == CoeffKind::Constant) {
      out.push_back(one());
      return out;
    }
    if (kind == CoeffKind::Laurent) {
      for (int d = 0; d <= max_degree; ++d) {
        if (d > 0) out.push_back(Monomial{-d});
        out.push_back(Monomial{d});
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    std::vector<int> exps(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == nvars) {
        Monomial m(nvars);
        for (std::size_t j = 0; j < nvars; ++j) m = m * Monomial::variable(nvars, j, exps[j]);
        out.push_back(m);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        exps[i] = e;
        rec(i + 1, left - e);
      }
    };
    rec(0, max_degree);
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] std::string str() const {
    switch (kind) {
      case CoeffKind::Constant: return "const";
      case CoeffKind::Polynomial: return "poly:" + std::to_string(nvars);
      case CoeffKind::Laurent: return "laurent:1";
    }
    return "?";
  }

  static CoeffAlgebraSpec parse(const std::string& s) {
    if (s == "const") return constant();
    if (s.rfind("poly:", 0) == 0) return polynomial(std::stoul(s.substr(5)));
    if (s == "laurent" || s == "laurent:1") return laurent();
    throw std::invalid_argument("unknown coefficient algebra '" + s + "' (expected const, poly:m, laurent:1)");
  }

  friend bool operator==(const CoeffAlgebraSpec&, const CoeffAlgebraSpec&) = default;
};

inline Monomial mul_basis(const CoeffAlgebraSpec& spec, const Monomial& a, const Monomial& b) {
  if (!spec.contains(a) || !spec.contains(b)) throw std::invalid_argument("mul_basis: element not in the algebra");
  return a * b;
}

inline Monomial pow_basis(const Monomial& b, int k) { return b.pow(k); }

}  // namespace hyperweyl

template <>
struct std::hash<hyperweyl::Monomial> {
  std::size_t operator()(const hyperweyl::Monomial& m) const noexcept { return m.hash(); }
};

#endif
