#ifndef HYPERWEYL_STRAIGHTEN_HPP
#define HYPERWEYL_STRAIGHTEN_HPP

#include "hyper.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperweyl {

/// A ℬ-combination sum_b c_b b in the coefficient algebra.
using CoeffPoly = std::map<Monomial, Rational>;

inline CoeffPoly coeff_mul(const CoeffAlgebraSpec& spec, const CoeffPoly& x, const CoeffPoly& y) {
  CoeffPoly out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      auto& slot = out[mul_basis(spec, a, b)];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

/// Product of two commutative polynomials whose words consist of Cartan letters only.
inline OracleElt cartan_mul(const OracleElt& x, const OracleElt& y) {
  OracleElt out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      PbwWord w;
      w.reserve(u.size() + v.size());
      std::merge(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(w));
      out.add(w, cu * cv);
    }
  return out;
}

/// Lambda_{i,a,s1}^{n1} ... written as sorted (s, n) pairs.
using LambdaProduct = std::vector<std::pair<int, int>>;

/// Result of rewriting Lambda_{i,a^k,r} in products of Lambda_{i,a,s}.
struct LambdaReduction {
  std::map<LambdaProduct, Rational> terms;
  [[nodiscard]] bool integral() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& kv) { return is_integer(kv.second); });
  }
};

/// The integral form U_Z(g (x) A): expansion of divided-power monomials into the
/// rational enveloping algebra and collection back into the ordered Z-basis.
class Hyperalgebra {
public:
  Hyperalgebra(const RootDatum& datum, const CoeffAlgebraSpec& spec) : env_(datum, spec) {}

  [[nodiscard]] const RootDatum& datum() const noexcept { return env_.datum(); }
  [[nodiscard]] const CoeffAlgebraSpec& coeff_spec() const noexcept { return env_.coeff_spec(); }
  [[nodiscard]] Envelope& envelope() noexcept { return env_; }
  [[nodiscard]] Monomial one() const { return coeff_spec().one(); }

  // -------------------------------------------------------------------------
  // Cartan polynomials

  /// h_alpha (x) b = sum_i c_i h_i (x) b.
  [[nodiscard]] OracleElt h_root(std::size_t root, const Monomial& b) const {
    OracleElt e;
    const auto& co = datum().coroot(root);
    for (int i = 0; i < datum().rank(); ++i)
      if (co[i] != 0) e.add(PbwWord{cartan(i, b)}, co[i]);
    return e;
  }

  [[nodiscard]] OracleElt h_root(std::size_t root, const CoeffPoly& a) const {
    OracleElt e;
    for (const auto& [b, c] : a) e.add(h_root(root, b), c);
    return e;
  }

  /// (x + shift)(x + shift - 1)...(x + shift - k + 1) / k! for a Cartan polynomial x.
  [[nodiscard]] OracleElt binom_poly(const OracleElt& x, const Rational& shift, int k) const {
    OracleElt out = OracleElt::scalar(1);
    for (int j = 0; j < k; ++j) {
      OracleElt factor = x;
      factor.add(PbwWord{}, shift - j);
      out = cartan_mul(out, factor);
    }
    out *= Rational(1, 1) / Rational(factorial(static_cast<unsigned long>(k)));
    return out;
  }

  /// Coefficient of u^r in exp(-sum_s (h_alpha (x) a^s) u^s / s).
  [[nodiscard]] OracleElt lambda_poly_root(std::size_t root, const CoeffPoly& a, int r) const {
    if (r < 0) throw std::invalid_argument("lambda_poly: r must be >= 0");
    std::vector<OracleElt> h_pow;  // h_alpha (x) a^s for s = 1..r
    CoeffPoly power{{one(), 1}};
    for (int s = 1; s <= r; ++s) {
      power = coeff_mul(coeff_spec(), power, a);
      h_pow.push_back(h_root(root, power));
    }
    // r L_r = - sum_{s=1}^r (h (x) a^s) L_{r-s}
    std::vector<OracleElt> L{OracleElt::scalar(1)};
    for (int n = 1; n <= r; ++n) {
      OracleElt acc;
      for (int s = 1; s <= n; ++s) acc.add(cartan_mul(h_pow[s - 1], L[n - s]), -1);
      acc *= Rational(1, n);
      L.push_back(std::move(acc));
    }
    return L[r];
  }

  [[nodiscard]] OracleElt lambda_poly_root(std::size_t root, const Monomial& a, int r) {
    auto key = std::make_tuple(root, a, r);
    if (auto it = lambda_cache_.find(key); it != lambda_cache_.end()) return it->second;
    auto e = lambda_poly_root(root, CoeffPoly{{a, 1}}, r);
    lambda_cache_.emplace(key, e);
    return e;
  }

  /// Lambda_{i,a,r} for a simple root.
  [[nodiscard]] OracleElt lambda_poly(int node, const Monomial& a, int r) {
    return lambda_poly_root(datum().simple_root_index(node), a, r);
  }
  [[nodiscard]] OracleElt lambda_poly(int node, const CoeffPoly& a, int r) const {
    return lambda_poly_root(datum().simple_root_index(node), a, r);
  }

  /// Lambda_{i,a^k,r} = sum m_{s,n} prod Lambda_{i,a,s_j}^{n_j}, solved exactly through
  /// the triangular change of variables between y_s = h_i (x) a^s and Lambda_{i,a,s}.
  [[nodiscard]] LambdaReduction lambda_power_reduction(int node, const Monomial& a, int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("lambda_power_reduction: k, r must be >= 1");
    if (a.is_one()) throw std::invalid_argument("lambda_power_reduction: a must differ from 1");
    const int top = k * r;
    // exponent vector over y_1..y_top
    using Exps = std::vector<int>;
    auto to_exps = [&](const PbwWord& w) {
      Exps e(top, 0);
      for (const auto& x : w) {
        int s = 0;
        for (std::size_t v = 0; v < x.b.nvars(); ++v)
          if (a.exponent(v) != 0) {
            s = x.b.exponent(v) / a.exponent(v);
            break;
          }
        if (s < 1 || s > top || !(a.pow(s) == x.b) || x.index != node)
          throw std::logic_error("lambda_power_reduction: unexpected Cartan letter");
        ++e[s - 1];
      }
      return e;
    };
    // greater = more weight on higher-index variables
    auto greater = [](const Exps& x, const Exps& y) {
      for (std::size_t s = x.size(); s-- > 0;)
        if (x[s] != y[s]) return x[s] > y[s];
      return false;
    };
    auto to_map = [&](const OracleElt& e) {
      std::map<Exps, Rational> m;
      for (const auto& [w, c] : e.terms()) m[to_exps(w)] += c;
      std::erase_if(m, [](const auto& kv) { return is_zero(kv.second); });
      return m;
    };

    auto rest = to_map(lambda_poly(node, a.pow(k), r));
    LambdaReduction out;
    while (!rest.empty()) {
      auto lead = rest.begin();
      for (auto it = rest.begin(); it != rest.end(); ++it)
        if (greater(it->first, lead->first)) lead = it;
      const Exps e = lead->first;
      // leading term of Lambda_s is -y_s / s
      Rational lc = 1;
      LambdaProduct prod;
      for (int s = 1; s <= top; ++s)
        if (e[s - 1] > 0) {
          prod.emplace_back(s, e[s - 1]);
          for (int j = 0; j < e[s - 1]; ++j) lc *= Rational(-1, s);
        }
      const Rational m = lead->second / lc;
      out.terms[prod] += m;
      for (const auto& [ex, c] : to_map(evaluate_lambda_product(node, a, prod))) {
        auto& slot = rest[ex];
        slot -= m * c;
        if (is_zero(slot)) rest.erase(ex);
      }
    }
    std::erase_if(out.terms, [](const auto& kv) { return is_zero(kv.second); });
    return out;
  }

  [[nodiscard]] OracleElt evaluate_lambda_product(int node, const Monomial& a, const LambdaProduct& prod) {
    OracleElt out = OracleElt::scalar(1);
    for (const auto& [s, n] : prod)
      for (int j = 0; j < n; ++j) out = cartan_mul(out, lambda_poly(node, a, s));
    return out;
  }

  [[nodiscard]] OracleElt evaluate_lambda_reduction(int node, const Monomial& a, const LambdaReduction& red) {
    OracleElt out;
    for (const auto& [prod, m] : red.terms) out.add(evaluate_lambda_product(node, a, prod), m);
    return out;
  }

  // -------------------------------------------------------------------------
  // Series in lowering root vectors

  /// Coefficient of u^n in (sum_p c_p (x_alpha^- (x) b_p) u^p)^dp / dp!, where
  /// `series[p]` holds (b_p, c_p) and the letters commute (same root).
  [[nodiscard]] OracleElt series_dp_coeff(std::size_t root, const std::vector<std::pair<Monomial, Rational>>& series,
                                          int dp, int n) const {
    OracleElt out;
    if (dp < 0 || n < 0) return out;
    std::vector<int> mult(series.size(), 0);
    auto rec = [&](auto&& self, std::size_t p, int left, int need) -> void {
      if (left == 0) {
        if (need != 0) return;
        Rational coef = 1;
        PbwWord w;
        for (std::size_t q = 0; q < series.size(); ++q) {
          if (mult[q] == 0) continue;
          for (int j = 0; j < mult[q]; ++j) {
            coef *= series[q].second;
            w.push_back(hyperweyl::lower(root, series[q].first));
          }
          coef /= Rational(factorial(static_cast<unsigned long>(mult[q])));
        }
        std::sort(w.begin(), w.end());
        out.add(w, coef);
        return;
      }
      if (p >= series.size()) return;
      for (int m = 0; m <= left && static_cast<int>(p) * m <= need; ++m) {
        mult[p] = m;
        self(self, p + 1, left - m, need - static_cast<int>(p) * m);
      }
      mult[p] = 0;
    };
    rec(rec, 0, dp, n);
    return out;
  }

  /// Coefficient of u^n in the dp-th divided power of sum_j (x_alpha^- (x) a^j b^{j+1}) u^{j+1}.
  [[nodiscard]] OracleElt xminus_series_dp_coeff(std::size_t root, const Monomial& a, const Monomial& b, int dp,
                                                 int n) const {
    std::vector<std::pair<Monomial, Rational>> series;
    series.emplace_back(one(), 0);
    for (int j = 0; j + 1 <= n; ++j) series.emplace_back(a.pow(j) * b.pow(j + 1), 1);
    return series_dp_coeff(root, series, dp, n);
  }

  // -------------------------------------------------------------------------
  // Expansion into the rational envelope

  [[nodiscard]] OracleElt expand(const GenSym& g) {
    switch (g.kind) {
      case GenKind::Lower:
      case GenKind::Raise: {
        const LieBasisElt x = g.kind == GenKind::Lower ? lower(g.index, g.b) : raise(g.index, g.b);
        return OracleElt::word(PbwWord(static_cast<std::size_t>(g.k), x),
                               Rational(1) / Rational(factorial(static_cast<unsigned long>(g.k))));
      }
      case GenKind::Binom: return cartan_basis(g);
      case GenKind::Lambda: return cartan_basis(g);
    }
    return {};
  }

  /// Expansion of an ordered monomial; the result is already in PBW order.
  [[nodiscard]] OracleElt expand(const OrderedMonomial& m) {
    if (!is_ordered(m)) return expand_product(std::vector<GenSym>(m.begin(), m.end()));
    PbwWord low, high;
    Rational scale = 1;
    OracleElt cart = OracleElt::scalar(1);
    for (const auto& g : m) {
      if (g.is_root_vector()) {
        const LieBasisElt x = g.kind == GenKind::Lower ? lower(g.index, g.b) : raise(g.index, g.b);
        PbwWord& block = g.kind == GenKind::Lower ? low : high;
        block.insert(block.end(), static_cast<std::size_t>(g.k), x);
        scale /= Rational(factorial(static_cast<unsigned long>(g.k)));
      } else {
        cart = cartan_mul(cart, cartan_basis(g));
      }
    }
    OracleElt out;
    for (const auto& [c, x] : cart.terms()) {
      PbwWord w = low;
      w.insert(w.end(), c.begin(), c.end());
      w.insert(w.end(), high.begin(), high.end());
      out.add(w, x * scale);
    }
    return out;
  }

  [[nodiscard]] OracleElt expand(const HyperElt& e) {
    OracleElt out;
    for (const auto& [m, c] : e.terms()) out.add(expand(m), Rational(c));
    return out;
  }

  /// Naive product of the expansions of an arbitrary generator sequence.
  [[nodiscard]] OracleElt expand_product(const std::vector<GenSym>& word) {
    OracleElt acc = OracleElt::scalar(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = env_.multiply(expand(*it), acc);
    return acc;
  }

  // -------------------------------------------------------------------------
  // Collection into the ordered Z-basis

  [[nodiscard]] HyperElt collect(const OracleElt& e) {
    std::map<std::pair<PbwWord, PbwWord>, OracleElt> groups;
    for (const auto& [w, c] : e.terms()) {
      auto first_cartan = std::find_if(w.begin(), w.end(), [](const auto& x) { return x.kind != LetterKind::Lower; });
      auto first_raise = std::find_if(first_cartan, w.end(), [](const auto& x) { return x.kind == LetterKind::Raise; });
      groups[{PbwWord(w.begin(), first_cartan), PbwWord(first_raise, w.end())}].add(PbwWord(first_cartan, first_raise),
                                                                                      c);
    }
    HyperElt out;
    for (auto& [lr, poly] : groups) {
      const auto& [low, high] = lr;
      Rational scale = 1;
      OrderedMonomial head = runs(low, scale);
      OrderedMonomial tail = runs(high, scale);
      poly *= scale;
      for (auto& [cart, coef] : collect_cartan(poly)) {
        if (!is_integer(coef))
          throw NotInZFormError("element is not in the Z-form: coefficient " + coef.get_str() + " on " +
                                monomial_str(datum(), join(head, cart, tail)));
        out.add(join(head, cart, tail), coef.get_num());
      }
    }
    return out;
  }

  /// collect(expand_product(word)).
  [[nodiscard]] HyperElt straighten(const std::vector<GenSym>& word) { return collect(expand_product(word)); }

  [[nodiscard]] HyperElt multiply(const HyperElt& x, const HyperElt& y) {
    return collect(env_.multiply(expand(x), expand(y)));
  }

  void clear_caches() {
    env_.clear_memo();
    lambda_cache_.clear();
    basis_cache_.clear();
  }

private:
  /// Expansion of a Binom or Lambda generator.
  const OracleElt& cartan_basis(const GenSym& g) {
    if (auto it = basis_cache_.find(g); it != basis_cache_.end()) return it->second;
    OracleElt e = g.kind == GenKind::Binom
                      ? binom_poly(OracleElt::word(PbwWord{cartan(g.index, one())}), 0, g.k)
                      : lambda_poly(g.index, g.b, g.k);
    return basis_cache_.emplace(g, std::move(e)).first->second;
  }

  /// Run-length encodes an ordered root-vector word into divided powers; scale *= prod k!.
  static OrderedMonomial runs(const PbwWord& w, Rational& scale) {
    OrderedMonomial out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      const int k = static_cast<int>(j - i);
      out.push_back(w[i].kind == LetterKind::Lower ? GenSym::lower(w[i].index, w[i].b, k)
                                                   : GenSym::raise(w[i].index, w[i].b, k));
      scale *= Rational(factorial(static_cast<unsigned long>(k)));
      i = j;
    }
    return out;
  }

  static OrderedMonomial join(const OrderedMonomial& a, const OrderedMonomial& b, const OrderedMonomial& c) {
    OrderedMonomial out = a;
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  /// Rewrites a Cartan polynomial in products of binom(h_i,k) and Lambda_{i,c,r},
  /// eliminating the longest words first.
  std::vector<std::pair<OrderedMonomial, Rational>> collect_cartan(OracleElt rest) {
    std::vector<std::pair<OrderedMonomial, Rational>> out;
    while (!rest.is_zero()) {
      auto lead = rest.terms().begin();
      for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
        if (it->first.size() >= lead->first.size()) lead = it;
      const PbwWord w = lead->first;
      const Rational c = lead->second;
      OrderedMonomial gens;
      Rational lc = 1;
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const int k = static_cast<int>(j - i);
        lc /= Rational(factorial(static_cast<unsigned long>(k)));
        if (w[i].b.is_one()) {
          gens.push_back(GenSym::binom(w[i].index, w[i].b.nvars(), k));
        } else {
          gens.push_back(GenSym::lambda(w[i].index, w[i].b, k));
          if (k % 2 == 1) lc = -lc;
        }
        i = j;
      }
      std::sort(gens.begin(), gens.end());
      const Rational coef = c / lc;
      OracleElt basis = OracleElt::scalar(1);
      for (const auto& g : gens) basis = cartan_mul(basis, cartan_basis(g));
      rest.add(basis, -coef);
      out.emplace_back(std::move(gens), coef);
    }
    return out;
  }

  Envelope env_;
  std::map<std::tuple<std::size_t, Monomial, int>, OracleElt> lambda_cache_;
  std::map<GenSym, OracleElt> basis_cache_;
};

inline std::string letter_str(const RootDatum& datum, const LieBasisElt& x) {
  switch (x.kind) {
    case LetterKind::Lower: return "f(" + root_label(datum.root(x.index)) + "," + x.b.str() + ")";
    case LetterKind::Raise: return "e(" + root_label(datum.root(x.index)) + "," + x.b.str() + ")";
    case LetterKind::Cartan: return "h(" + std::to_string(x.index + 1) + "," + x.b.str() + ")";
  }
  return "?";
}

inline std::string word_str(const RootDatum& datum, const PbwWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& x : w) {
    if (!out.empty()) out += ' ';
    out += letter_str(datum, x);
  }
  return out;
}

/// "1/2*h(1,t) h(1,t) - 1/2*h(1,t^2)"; "0" for the zero element.
inline std::string oracle_str(const RootDatum& datum, const OracleElt& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const Rational a = abs(c);
    if (w.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += word_str(datum, w);
    }
  }
  return out;
}

}  // namespace hyperweyl

#endif
