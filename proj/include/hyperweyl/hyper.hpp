#ifndef HYPERWEYL_HYPER_HPP
#define HYPERWEYL_HYPER_HPP

#include "coeff_algebra.hpp"
#include "root_data.hpp"
#include "scalars.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperweyl {

/// Raised when a collected coefficient is not an integer.
class NotInZFormError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Block of a divided-power generator; the numeric order is the block order.
enum class GenKind : std::uint8_t { Lower = 0, Binom = 1, Lambda = 2, Raise = 3 };

/// (x_alpha^- (x) b)^(k), binom(h_i (x) 1, k), Lambda_{i,c,k}, (x_alpha^+ (x) b)^(k).
/// `index` is a positive root index for root vectors and a node otherwise.
struct GenSym {
  GenKind kind = GenKind::Lower;
  std::uint8_t index = 0;
  Monomial b;
  int k = 1;

  static GenSym lower(std::size_t root, const Monomial& b, int k) { return make(GenKind::Lower, root, b, k); }
  static GenSym raise(std::size_t root, const Monomial& b, int k) { return make(GenKind::Raise, root, b, k); }
  static GenSym binom(int node, std::size_t nvars, int k) { return make(GenKind::Binom, node, Monomial(nvars), k); }
  static GenSym lambda(int node, const Monomial& c, int r) {
    if (c.is_one()) throw std::invalid_argument("Lambda generator requires c != 1");
    return make(GenKind::Lambda, node, c, r);
  }

  [[nodiscard]] bool is_root_vector() const noexcept { return kind == GenKind::Lower || kind == GenKind::Raise; }
  /// Generators sharing a slot may not both appear in an ordered monomial.
  [[nodiscard]] bool same_slot(const GenSym& o) const noexcept {
    return kind == o.kind && index == o.index && b == o.b;
  }

  friend std::strong_ordering operator<=>(const GenSym& x, const GenSym& y) {
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.index <=> y.index; c != 0) return c;
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.k <=> y.k;
  }
  friend bool operator==(const GenSym& x, const GenSym& y) { return (x <=> y) == 0; }

private:
  static GenSym make(GenKind kind, std::size_t index, const Monomial& b, int k) {
    if (k < 1) throw std::invalid_argument("generator exponent must be >= 1");
    return {kind, static_cast<std::uint8_t>(index), b, k};
  }
};

using OrderedMonomial = std::vector<GenSym>;

/// True iff the generators respect the block order with one factor per slot.
inline bool is_ordered(const OrderedMonomial& m) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (!(m[i - 1] < m[i]) || m[i - 1].same_slot(m[i])) return false;
  }
  return true;
}

/// Degree of the root-vector part (sum of divided-power exponents).
inline int root_degree(const OrderedMonomial& m) {
  int d = 0;
  for (const auto& g : m)
    if (g.is_root_vector()) d += g.k;
  return d;
}

/// Total A-degree: b-degree times exponent over root vectors and Lambda factors.
inline int coeff_degree(const OrderedMonomial& m) {
  int d = 0;
  for (const auto& g : m)
    if (g.kind != GenKind::Binom) d += g.k * g.b.degree();
  return d;
}

inline RootVector monomial_weight(const RootDatum& datum, const OrderedMonomial& m) {
  RootVector w{std::vector<int>(datum.rank(), 0)};
  for (const auto& g : m) {
    if (g.kind == GenKind::Lower) w = w - datum.root(g.index).scaled(g.k);
    if (g.kind == GenKind::Raise) w = w + datum.root(g.index).scaled(g.k);
  }
  return w;
}

/// Integer combination of ordered monomials.
class HyperElt {
public:
  using Terms = std::map<OrderedMonomial, Integer>;

  HyperElt() = default;
  static HyperElt monomial(OrderedMonomial m, const Integer& c = 1) {
    HyperElt e;
    e.add(std::move(m), c);
    return e;
  }

  void add(const OrderedMonomial& m, const Integer& c) {
    if (hyperweyl::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (hyperweyl::is_zero(it->second)) terms_.erase(it);
    }
  }
  HyperElt& operator+=(const HyperElt& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  HyperElt& operator-=(const HyperElt& o) {
    for (const auto& [m, c] : o.terms_) add(m, Integer(-c));
    return *this;
  }
  friend HyperElt operator+(HyperElt a, const HyperElt& b) { return a += b; }
  friend HyperElt operator-(HyperElt a, const HyperElt& b) { return a -= b; }
  friend bool operator==(const HyperElt& a, const HyperElt& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] Integer coefficient(const OrderedMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

private:
  Terms terms_;
};

/// Drops every monomial with a raising factor (projection modulo U * n+^0).
inline HyperElt quotient_drop_raising(const HyperElt& e) {
  HyperElt out;
  for (const auto& [m, c] : e.terms())
    if (m.empty() || m.back().kind != GenKind::Raise) out.add(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// Text form

/// "a1", "a1+a2", "2a1+a2".
inline std::string root_label(const RootVector& r) {
  std::string out;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    if (r.coords[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (r.coords[i] != 1) out += std::to_string(r.coords[i]);
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

inline std::size_t parse_root_label(const RootDatum& datum, const std::string& text) {
  RootVector r{std::vector<int>(datum.rank(), 0)};
  std::size_t pos = 0;
  auto fail = [&] { return std::invalid_argument("cannot parse root label '" + text + "'"); };
  while (pos < text.size()) {
    int mult = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      mult = mult * 10 + (text[pos++] - '0');
    if (mult == 0) mult = 1;
    if (pos >= text.size() || text[pos] != 'a') throw fail();
    ++pos;
    int node = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) node = node * 10 + (text[pos++] - '0');
    if (pos == start || node < 1 || node > datum.rank()) throw fail();
    r.coords[node - 1] += mult;
    if (pos < text.size()) {
      if (text[pos] != '+') throw fail();
      ++pos;
    }
  }
  int idx = datum.root_index(r);
  if (idx < 0) throw std::invalid_argument("'" + text + "' is not a positive root of " + datum.label());
  return static_cast<std::size_t>(idx);
}

inline std::string gen_str(const RootDatum& datum, const GenSym& g) {
  switch (g.kind) {
    case GenKind::Lower:
    case GenKind::Raise:
      return std::string(g.kind == GenKind::Lower ? "F(" : "E(") + root_label(datum.root(g.index)) + "," + g.b.str() +
             ")^(" + std::to_string(g.k) + ")";
    case GenKind::Binom: return "H(" + std::to_string(g.index + 1) + ")^[" + std::to_string(g.k) + "]";
    case GenKind::Lambda:
      return "L(" + std::to_string(g.index + 1) + "," + g.b.str() + "," + std::to_string(g.k) + ")";
  }
  return "?";
}

inline std::string monomial_str(const RootDatum& datum, const OrderedMonomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& g : m) {
    if (!out.empty()) out += ' ';
    out += gen_str(datum, g);
  }
  return out;
}

/// Parses a space-separated generator sequence (not necessarily ordered).
inline std::vector<GenSym> parse_gens(const RootDatum& datum, const CoeffAlgebraSpec& spec, const std::string& text) {
  std::vector<GenSym> out;
  std::istringstream in(text);
  std::string tok;
  auto fail = [&](const std::string& t) { return std::invalid_argument("cannot parse generator '" + t + "'"); };
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok.size() < 4 || tok[1] != '(') throw fail(tok);
    const char head = tok[0];
    const auto close = tok.find(')');
    if (close == std::string::npos) throw fail(tok);
    const std::string inner = tok.substr(2, close - 2);
    const std::string tail = tok.substr(close + 1);
    std::vector<std::string> parts;
    std::stringstream ss(inner);
    for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
    auto exponent = [&](char open, char shut) {
      if (tail.size() < 4 || tail[0] != '^' || tail[1] != open || tail.back() != shut) throw fail(tok);
      return std::stoi(tail.substr(2, tail.size() - 3));
    };
    if (head == 'F' || head == 'E') {
      if (parts.size() != 2) throw fail(tok);
      const auto root = parse_root_label(datum, parts[0]);
      const auto b = Monomial::parse(parts[1], spec.nvars);
      if (!spec.contains(b)) throw fail(tok);
      const int k = exponent('(', ')');
      out.push_back(head == 'F' ? GenSym::lower(root, b, k) : GenSym::raise(root, b, k));
    } else if (head == 'H') {
      if (parts.size() != 1) throw fail(tok);
      const int node = std::stoi(parts[0]);
      if (node < 1 || node > datum.rank()) throw fail(tok);
      out.push_back(GenSym::binom(node - 1, spec.nvars, exponent('[', ']')));
    } else if (head == 'L') {
      if (parts.size() != 3 || !tail.empty()) throw fail(tok);
      const int node = std::stoi(parts[0]);
      if (node < 1 || node > datum.rank()) throw fail(tok);
      const auto c = Monomial::parse(parts[1], spec.nvars);
      if (!spec.contains(c)) throw fail(tok);
      out.push_back(GenSym::lambda(node - 1, c, std::stoi(parts[2])));
    } else {
      throw fail(tok);
    }
  }
  return out;
}

inline std::string hyper_str(const RootDatum& datum, const HyperElt& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    Integer a = abs(c);
    if (m.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += monomial_str(datum, m);
    }
  }
  return out;
}

/// [[monomial, coefficient], ...] in the monomial order.
inline nlohmann::json hyper_to_json(const RootDatum& datum, const HyperElt& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : e.terms()) out.push_back({monomial_str(datum, m), c.get_str()});
  return out;
}

}  // namespace hyperweyl

#endif
