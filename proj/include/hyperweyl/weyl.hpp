#ifndef HYPERWEYL_WEYL_HPP
#define HYPERWEYL_WEYL_HPP

#include "sparse_linalg.hpp"
#include "straighten.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace hyperweyl {

/// Highest weight, field, and the scalars by which Lambda_{i,b,r} act on w_lambda.
/// Entries absent from the table act by zero (the graded case).
class EvalData {
public:
  using Key = std::tuple<int, Monomial, int>;

  EvalData() = default;
  EvalData(Weight lambda, FieldSpec field) : lambda_(std::move(lambda)), field_(field) {
    if (!field_.is_rational() && !is_prime(field_.characteristic))
      throw std::invalid_argument("characteristic " + std::to_string(field_.characteristic) + " is not prime");
  }
  static EvalData graded(Weight lambda, FieldSpec field = {}) { return EvalData(std::move(lambda), field); }

  void set(int node, const Monomial& b, int r, const Rational& value) {
    if (node < 0 || node >= static_cast<int>(lambda_.rank()))
      throw std::invalid_argument("eval entry: node " + std::to_string(node + 1) + " out of range");
    if (b.is_one()) throw std::invalid_argument("eval entry: b must differ from 1");
    if (r < 1 || r > lambda_.coords[node])
      throw std::invalid_argument("eval entry: r=" + std::to_string(r) + " outside 1..lambda(h_" +
                                  std::to_string(node + 1) + ")=" + std::to_string(lambda_.coords[node]));
    if (!field_.is_rational()) (void)reduce_mod_p(value, field_.characteristic);
    if (is_zero(value))
      table_.erase({node, b, r});
    else
      table_[{node, b, r}] = value;
  }

  /// Value of Lambda_{i,b,r} on w_lambda; zero when r > lambda(h_i).
  [[nodiscard]] Rational value(int node, const Monomial& b, int r) const {
    if (r > lambda_.coords.at(node)) return 0;
    auto it = table_.find({node, b, r});
    return it == table_.end() ? Rational(0) : it->second;
  }

  /// True when some Lambda_{i,b,r} is set explicitly.
  [[nodiscard]] bool has_entries(int node, const Monomial& b) const {
    auto it = table_.lower_bound({node, b, 0});
    return it != table_.end() && std::get<0>(it->first) == node && std::get<1>(it->first) == b;
  }

  [[nodiscard]] const Weight& lambda() const noexcept { return lambda_; }
  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] bool is_graded() const noexcept { return table_.empty(); }
  [[nodiscard]] const std::map<Key, Rational>& table() const noexcept { return table_; }
  [[nodiscard]] std::string label() const { return is_graded() ? "graded" : "table"; }

private:
  Weight lambda_;
  FieldSpec field_;
  std::map<Key, Rational> table_;
};

/// Spanning-set bounds plus the slack used for relation vectors and seeds.
struct Window {
  std::vector<int> max_exponent;  // per positive root
  RootVector max_drop;
  int slack = 2;
};

inline RootVector top_drop(const RootDatum& datum, const Weight& lambda) {
  auto r = datum.to_root_vector(lambda - datum.longest_element_image(lambda));
  if (!r) throw std::logic_error("lambda - w0 lambda is not in the root lattice");
  return *r;
}

inline Window default_window(const RootDatum& datum, const Weight& lambda, int slack = 2) {
  Window w;
  for (std::size_t a = 0; a < datum.num_positive_roots(); ++a) w.max_exponent.push_back(datum.pairing(lambda, a) - 1);
  w.max_drop = top_drop(datum, lambda);
  w.slack = slack;
  return w;
}

inline bool drop_leq(const RootVector& x, const RootVector& y) { return (y - x).in_positive_cone(); }

using LoweringMonomial = OrderedMonomial;

/// Ordered lowering monomials whose letters (root, b) satisfy `allowed`, whose
/// weight drop sum k_j beta_j satisfies `accept_drop`, and whose A-degree is at most max_degree.
template <class Allowed, class Accept>
std::vector<LoweringMonomial> enumerate_lowering(const RootDatum& datum, const std::vector<Monomial>& basis,
                                                 const RootVector& bound, int max_degree, Allowed allowed,
                                                 Accept accept_drop) {
  std::vector<std::pair<std::size_t, Monomial>> letters;
  for (std::size_t a = 0; a < datum.num_positive_roots(); ++a)
    for (const auto& b : basis)
      if (allowed(a, b)) letters.emplace_back(a, b);
  std::vector<LoweringMonomial> out;
  LoweringMonomial cur;
  RootVector zero{std::vector<int>(datum.rank(), 0)};
  auto rec = [&](auto&& self, std::size_t i, const RootVector& drop, int deg) -> void {
    if (i == letters.size()) {
      if (accept_drop(drop)) out.push_back(cur);
      return;
    }
    self(self, i + 1, drop, deg);
    const auto& [a, b] = letters[i];
    RootVector d = drop;
    for (int k = 1;; ++k) {
      d = d + datum.root(a);
      const int nd = deg + k * b.degree();
      if (!drop_leq(d, bound) || nd > max_degree) break;
      cur.push_back(GenSym::lower(a, b, k));
      self(self, i + 1, d, nd);
      cur.pop_back();
    }
  };
  rec(rec, 0, zero, 0);
  return out;
}

inline void require_weyl_inputs(const RootDatum& datum, const Weight& lambda, const CoeffAlgebraSpec& spec) {
  if (lambda.rank() != static_cast<std::size_t>(datum.rank()))
    throw std::invalid_argument("lambda has the wrong rank for " + datum.label());
  if (!lambda.is_dominant()) throw std::invalid_argument("lambda is not dominant");
  if (spec.kind == CoeffKind::Laurent) throw std::invalid_argument("Weyl modules need a polynomial or constant algebra");
}

/// The lowering monomials applied to w_lambda that span the local Weyl module.
inline std::vector<LoweringMonomial> spanning_set(const RootDatum& datum, const Weight& lambda,
                                                  const CoeffAlgebraSpec& spec, const Window& w) {
  require_weyl_inputs(datum, lambda, spec);
  int maxe = 0;
  for (int e : w.max_exponent) maxe = std::max(maxe, e);
  const int deg_cap = maxe * static_cast<int>(spec.nvars) * std::max(1, w.max_drop.height());
  return enumerate_lowering(
      datum, spec.basis_up_to(std::max(0, maxe * static_cast<int>(spec.nvars))), w.max_drop, deg_cap,
      [&](std::size_t a, const Monomial& b) { return b.max_exponent() <= w.max_exponent[a]; },
      [](const RootVector&) { return true; });
}

inline int max_degree(const std::vector<LoweringMonomial>& ms) {
  int d = 0;
  for (const auto& m : ms) d = std::max(d, coeff_degree(m));
  return d;
}

struct WeylModuleResult {
  std::string type;
  Weight lambda;
  CoeffAlgebraSpec coeff;
  FieldSpec field;
  std::string eval = "graded";
  std::size_t dimension = 0;
  std::map<Weight, std::size_t> character;
  Window window;
  int degree_bound = 0;
  std::size_t spanning_size = 0;
  bool stabilized = false;
};

/// Maximal quotient of the induced module U(n^-) w_lambda by the submodule generated
/// by (x_beta^-)^(s) w_lambda, s > lambda(h_beta), restricted to a finite window.
template <class V>
class WeylClosure {
public:
  WeylClosure(const RootDatum& datum, const CoeffAlgebraSpec& spec, EvalData eval, Window window)
      : H_(datum, spec), eval_(std::move(eval)), window_(std::move(window)) {
    require_weyl_inputs(datum, eval_.lambda(), spec);
    base_ = spanning_set(datum, eval_.lambda(), spec, window_);
    degree_bound_ = spec.nvars == 0 ? 0 : max_degree(base_) + window_.slack;
    basis_ = spec.basis_up_to(degree_bound_);
    for (const auto& m : base_) base_set_.insert(m);
    run();
  }

  [[nodiscard]] const RootDatum& datum() const { return H_.datum(); }
  [[nodiscard]] std::size_t spanning_size() const { return base_.size(); }
  [[nodiscard]] const std::vector<LoweringMonomial>& spanning() const { return base_; }
  [[nodiscard]] int degree_bound() const { return degree_bound_; }

  [[nodiscard]] std::map<Weight, std::size_t> character() const {
    std::map<RootVector, std::size_t> base_count;
    for (const auto& m : base_) ++base_count[drop_of(m)];
    std::map<Weight, std::size_t> out;
    for (const auto& [eta, n] : base_count) {
      std::size_t rel = 0;
      if (auto it = spaceB_.find(eta); it != spaceB_.end()) rel = it->second.rank_from(piece(eta).first_base);
      if (n > rel) out[eval_.lambda() - datum().to_weight(eta)] = n - rel;
    }
    return out;
  }

  [[nodiscard]] std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& [w, n] : character()) d += n;
    return d;
  }

  /// True iff target w_lambda lies in the span of the given monomials applied to w_lambda.
  /// Weights below lambda - w0 lambda are zero; targets above the degree bound throw out_of_range.
  [[nodiscard]] bool in_span(const LoweringMonomial& target, const std::vector<LoweringMonomial>& span) const {
    const RootVector eta = drop_of(target);
    if (!drop_leq(eta, window_.max_drop)) return true;
    const Piece& p = piece(eta);
    RowSpace<V> space;
    if (auto it = spaceB_.find(eta); it != spaceB_.end()) space = it->second;
    for (const auto& m : span) {
      if (!(drop_of(m) == eta)) continue;
      space.insert(unit(p, m));
    }
    return space.contains(unit(p, target));
  }

private:
  struct Piece {
    std::vector<LoweringMonomial> monos;
    std::map<LoweringMonomial, std::size_t> index;
    std::size_t first_base = 0;
  };
  using Vec = SparseVec<V>;

  RootVector drop_of(const LoweringMonomial& m) const { return monomial_weight(datum(), m).scaled(-1); }

  const Piece& piece(const RootVector& eta) const {
    if (auto it = pieces_.find(eta); it != pieces_.end()) return it->second;
    auto monos = enumerate_lowering(
        datum(), basis_, eta, degree_bound_, [](std::size_t, const Monomial&) { return true; },
        [&](const RootVector& d) { return d == eta; });
    Piece p;
    std::stable_partition(monos.begin(), monos.end(), [&](const auto& m) { return !base_set_.count(m); });
    p.first_base = static_cast<std::size_t>(
        std::count_if(monos.begin(), monos.end(), [&](const auto& m) { return !base_set_.count(m); }));
    p.monos = std::move(monos);
    for (std::size_t i = 0; i < p.monos.size(); ++i) p.index.emplace(p.monos[i], i);
    return pieces_.emplace(eta, std::move(p)).first->second;
  }

  Vec unit(const Piece& p, const LoweringMonomial& m) const {
    auto it = p.index.find(m);
    if (it == p.index.end()) throw std::out_of_range("monomial outside the computed window: " + monomial_str(datum(), m));
    Vec v;
    v.add(it->second, field_one());
    return v;
  }

  V field_one() const { return FieldOps<V>::from(Rational(1), eval_.field()); }
  V to_field(const Rational& q) const { return FieldOps<V>::from(q, eval_.field()); }

  /// g * m * w_lambda with the Cartan part evaluated on w_lambda.
  const std::vector<std::pair<LoweringMonomial, V>>& action(const GenSym& g, const LoweringMonomial& m) {
    auto key = std::make_pair(g, m);
    if (auto it = action_cache_.find(key); it != action_cache_.end()) return it->second;
    const OracleElt prod = H_.envelope().multiply(H_.expand(g), H_.expand(m)).drop_raising();
    const HyperElt he = H_.collect(prod);
    std::map<LoweringMonomial, V> acc;
    for (const auto& [mono, coef] : he.terms()) {
      LoweringMonomial low;
      Rational val = Rational(coef);
      for (const auto& x : mono) {
        switch (x.kind) {
          case GenKind::Lower: low.push_back(x); break;
          case GenKind::Binom: val *= Rational(rational_binomial(eval_.lambda().coords[x.index], x.k)); break;
          case GenKind::Lambda: val *= lambda_value(x.index, x.b, x.k); break;
          case GenKind::Raise: val = 0; break;
        }
        if (is_zero(val)) break;
      }
      if (is_zero(val)) continue;
      V fv = to_field(val);
      if (is_zero(fv)) continue;
      auto [it, inserted] = acc.try_emplace(low, fv);
      if (!inserted) it->second += fv;
    }
    std::vector<std::pair<LoweringMonomial, V>> out;
    for (auto& [mono, v] : acc)
      if (!is_zero(v)) out.emplace_back(mono, v);
    return action_cache_.emplace(std::move(key), std::move(out)).first->second;
  }

  /// Lambda_{i,b,r} on w_lambda. Without an explicit entry for b = c^k, the value is
  /// derived from the entries for c through the power reduction.
  Rational lambda_value(int node, const Monomial& b, int r) {
    if (eval_.is_graded() || r > eval_.lambda().coords[node] || eval_.has_entries(node, b))
      return eval_.value(node, b, r);
    const auto key = std::make_tuple(node, b, r);
    if (auto it = lambda_cache_.find(key); it != lambda_cache_.end()) return it->second;
    int g = 0;
    for (std::size_t v = 0; v < b.nvars(); ++v) g = std::gcd(g, b.exponent(v));
    Rational out = 0;
    for (int k = g; k > 1; --k) {
      if (g % k != 0) continue;
      Monomial c(b.nvars());
      for (std::size_t v = 0; v < b.nvars(); ++v)
        c = c * Monomial::variable(b.nvars(), v, b.exponent(v) / k);
      if (!eval_.has_entries(node, c)) continue;
      for (const auto& [prod, m] : H_.lambda_power_reduction(node, c, k, r).terms) {
        Rational term = m;
        for (const auto& [s, n] : prod)
          for (int j = 0; j < n; ++j) term *= eval_.value(node, c, s);
        out += term;
      }
      break;
    }
    return lambda_cache_.emplace(key, out).first->second;
  }

  static int gen_degree(const GenSym& g) { return g.kind == GenKind::Binom ? 0 : g.k * g.b.degree(); }

  /// Applies g to a vector at drop eta; nullopt when the image leaves the window.
  std::optional<std::pair<RootVector, Vec>> apply(const GenSym& g, const RootVector& eta, const Vec& v) {
    RootVector target = eta;
    if (g.kind == GenKind::Lower) target = eta + datum().root(g.index).scaled(g.k);
    if (g.kind == GenKind::Raise) target = eta - datum().root(g.index).scaled(g.k);
    if (!target.in_positive_cone()) return std::nullopt;
    const Piece& src = piece(eta);
    int vdeg = 0;
    for (const auto& [col, x] : v.entries()) vdeg = std::max(vdeg, coeff_degree(src.monos[col]));
    if (vdeg + gen_degree(g) > degree_bound_) return std::nullopt;
    const Piece& dst = piece(target);
    std::map<std::size_t, V> acc;
    for (const auto& [col, x] : v.entries()) {
      for (const auto& [mono, y] : action(g, src.monos[col])) {
        auto it = dst.index.find(mono);
        if (it == dst.index.end()) return std::nullopt;
        auto [slot, inserted] = acc.try_emplace(it->second, x * y);
        if (!inserted) slot->second += x * y;
      }
    }
    return std::make_pair(target, Vec::from_map(acc));
  }

  void run() {
    const auto& D = datum();
    const Weight& lambda = eval_.lambda();
    const int nroots = static_cast<int>(D.num_positive_roots());
    const Monomial one = H_.one();

    // seeds (x_beta^-)^(s) w_lambda
    std::vector<std::pair<RootVector, Vec>> seeds;
    RootVector seed_top = window_.max_drop;
    for (int a = 0; a < nroots; ++a) {
      const int lam = D.pairing(lambda, a);
      for (int s = lam + 1; s <= lam + 1 + window_.slack; ++s) {
        const LoweringMonomial m{GenSym::lower(a, one, s)};
        const RootVector eta = D.root(a).scaled(s);
        for (std::size_t i = 0; i < seed_top.coords.size(); ++i)
          seed_top.coords[i] = std::max(seed_top.coords[i], eta.coords[i]);
        seeds.emplace_back(eta, unit(piece(eta), m));
      }
    }

    // generators of U(b+): divided powers of raising root vectors and Lambda's
    std::vector<GenSym> up;
    for (int a = 0; a < nroots; ++a)
      for (const auto& b : basis_)
        for (int r = 1; drop_leq(D.root(a).scaled(r), seed_top) && r * b.degree() <= degree_bound_; ++r)
          up.push_back(GenSym::raise(a, b, r));
    for (int i = 0; i < D.rank(); ++i)
      for (const auto& c : basis_) {
        if (c.is_one()) continue;
        for (int r = 1; r * c.degree() <= degree_bound_; ++r) up.push_back(GenSym::lambda(i, c, r));
      }
    std::vector<GenSym> down;
    for (int a = 0; a < nroots; ++a)
      for (const auto& b : basis_)
        for (int k = 1; drop_leq(D.root(a).scaled(k), window_.max_drop) && k * b.degree() <= degree_bound_; ++k)
          down.push_back(GenSym::lower(a, b, k));

    // phase A: U(b+)-closure of the seeds
    std::map<RootVector, RowSpace<V>> spaceA;
    std::deque<std::pair<RootVector, Vec>> queue;
    for (auto& [eta, v] : seeds) {
      auto res = spaceA[eta].insert(v);
      if (!res.empty()) queue.emplace_back(eta, std::move(res));
    }
    while (!queue.empty()) {
      auto [eta, v] = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : up) {
        auto img = apply(g, eta, v);
        if (!img || img->second.empty()) continue;
        auto res = spaceA[img->first].insert(std::move(img->second));
        if (!res.empty()) queue.emplace_back(img->first, std::move(res));
      }
    }

    // phase B: U(n-)-closure inside the window
    for (const auto& [eta, space] : spaceA) {
      if (!drop_leq(eta, window_.max_drop)) continue;
      for (const auto& [pivot, row] : space.rows()) {
        auto res = spaceB_[eta].insert(row);
        if (!res.empty()) queue.emplace_back(eta, std::move(res));
      }
    }
    while (!queue.empty()) {
      auto [eta, v] = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : down) {
        auto img = apply(g, eta, v);
        if (!img || img->second.empty() || !drop_leq(img->first, window_.max_drop)) continue;
        auto res = spaceB_[img->first].insert(std::move(img->second));
        if (!res.empty()) queue.emplace_back(img->first, std::move(res));
      }
    }
  }

  Hyperalgebra H_;
  EvalData eval_;
  Window window_;
  std::vector<LoweringMonomial> base_;
  std::set<LoweringMonomial> base_set_;
  int degree_bound_ = 0;
  std::vector<Monomial> basis_;
  mutable std::map<RootVector, Piece> pieces_;
  std::map<RootVector, RowSpace<V>> spaceB_;
  std::map<std::pair<GenSym, LoweringMonomial>, std::vector<std::pair<LoweringMonomial, V>>> action_cache_;
  std::map<EvalData::Key, Rational> lambda_cache_;
};

/// Field-dispatching handle on a computed closure.
class LocalWeylModule {
public:
  LocalWeylModule(const RootDatum& datum, const CoeffAlgebraSpec& spec, const EvalData& eval, const Window& window) {
    if (eval.field().is_rational())
      impl_ = std::make_shared<WeylClosure<Rational>>(datum, spec, eval, window);
    else
      impl_ = std::make_shared<WeylClosure<Residue>>(datum, spec, eval, window);
  }

  [[nodiscard]] std::size_t dimension() const {
    return std::visit([](const auto& p) { return p->dimension(); }, impl_);
  }
  [[nodiscard]] std::map<Weight, std::size_t> character() const {
    return std::visit([](const auto& p) { return p->character(); }, impl_);
  }
  [[nodiscard]] std::size_t spanning_size() const {
    return std::visit([](const auto& p) { return p->spanning_size(); }, impl_);
  }
  [[nodiscard]] int degree_bound() const {
    return std::visit([](const auto& p) { return p->degree_bound(); }, impl_);
  }
  [[nodiscard]] bool in_span(const LoweringMonomial& target, const std::vector<LoweringMonomial>& span) const {
    return std::visit([&](const auto& p) { return p->in_span(target, span); }, impl_);
  }

private:
  std::variant<std::shared_ptr<WeylClosure<Rational>>, std::shared_ptr<WeylClosure<Residue>>> impl_;
};

/// Closure at the window's slack, re-checked at slack + 1.
inline WeylModuleResult relation_closure(const RootDatum& datum, const CoeffAlgebraSpec& spec, const EvalData& eval,
                                         const Window& window) {
  LocalWeylModule first(datum, spec, eval, window);
  Window wider = window;
  ++wider.slack;
  LocalWeylModule second(datum, spec, eval, wider);
  WeylModuleResult r;
  r.type = datum.label();
  r.lambda = eval.lambda();
  r.coeff = spec;
  r.field = eval.field();
  r.eval = eval.label();
  r.dimension = first.dimension();
  r.character = first.character();
  r.window = window;
  r.degree_bound = first.degree_bound();
  r.spanning_size = first.spanning_size();
  r.stabilized = second.dimension() == r.dimension && second.character() == r.character;
  return r;
}

inline WeylModuleResult relation_closure(const RootDatum& datum, const CoeffAlgebraSpec& spec, const EvalData& eval) {
  return relation_closure(datum, spec, eval, default_window(datum, eval.lambda()));
}

/// The Weyl module W_F(lambda) of g: the closure with A = F.
inline WeylModuleResult weyl_module_g(const RootDatum& datum, const Weight& lambda, FieldSpec field = {}) {
  return relation_closure(datum, CoeffAlgebraSpec::constant(), EvalData::graded(lambda, field));
}

/// Character constant on Weyl orbits with every orbit point below lambda.
inline bool character_check(const std::map<Weight, std::size_t>& character, const Weight& lambda,
                            const RootDatum& datum) {
  for (const auto& [mu, n] : character) {
    for (const auto& nu : datum.weyl_orbit(mu)) {
      auto it = character.find(nu);
      if (it == character.end() || it->second != n) return false;
      if (!datum.dominance_leq(nu, lambda)) return false;
    }
  }
  return true;
}

inline bool character_check(const WeylModuleResult& r, const RootDatum& datum) {
  return character_check(r.character, r.lambda, datum);
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json window_to_json(const Window& w) {
  return {{"max_exponent", w.max_exponent}, {"max_drop", w.max_drop.coords}, {"slack", w.slack}};
}

inline Window window_from_json(const nlohmann::json& j) {
  Window w;
  w.max_exponent = j.at("max_exponent").get<std::vector<int>>();
  w.max_drop.coords = j.at("max_drop").get<std::vector<int>>();
  w.slack = j.at("slack").get<int>();
  if (w.slack < 0) throw std::invalid_argument("window slack must be >= 0");
  return w;
}

/// Character entries from the highest weight down, by depth below lambda, then lexicographically descending.
inline std::vector<std::pair<Weight, std::size_t>> ordered_character(const WeylModuleResult& r) {
  std::vector<std::pair<Weight, std::size_t>> out(r.character.begin(), r.character.end());
  const auto datum = parse_root_datum(r.type);
  auto depth = [&](const Weight& mu) {
    const auto eta = datum.to_root_vector(r.lambda - mu);
    return eta ? eta->height() : 0;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    const int dx = depth(x.first), dy = depth(y.first);
    return dx != dy ? dx < dy : y.first < x.first;
  });
  return out;
}

inline nlohmann::json result_to_json(const WeylModuleResult& r) {
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& [w, n] : ordered_character(r)) chars.push_back({{"weight", w.coords}, {"mult", n}});
  return {{"type", r.type},
          {"lambda", r.lambda.coords},
          {"coeff", r.coeff.str()},
          {"char", r.field.characteristic},
          {"eval", r.eval},
          {"dimension", r.dimension},
          {"character", chars},
          {"stabilized", r.stabilized},
          {"window", window_to_json(r.window)},
          {"degree_bound", r.degree_bound},
          {"spanning_size", r.spanning_size}};
}

inline WeylModuleResult result_from_json(const nlohmann::json& j) {
  WeylModuleResult r;
  r.type = j.at("type").get<std::string>();
  r.lambda.coords = j.at("lambda").get<std::vector<int>>();
  r.coeff = CoeffAlgebraSpec::parse(j.at("coeff").get<std::string>());
  r.field.characteristic = j.at("char").get<std::uint32_t>();
  r.eval = j.at("eval").get<std::string>();
  r.dimension = j.at("dimension").get<std::size_t>();
  for (const auto& e : j.at("character")) {
    Weight w{e.at("weight").get<std::vector<int>>()};
    r.character[w] = e.at("mult").get<std::size_t>();
  }
  r.stabilized = j.at("stabilized").get<bool>();
  r.window = window_from_json(j.at("window"));
  r.degree_bound = j.at("degree_bound").get<int>();
  r.spanning_size = j.at("spanning_size").get<std::size_t>();
  return r;
}

/// {"lambda":[...],"c":[{"i":1,"b":"t^2","r":1,"value":"3"}],"field":{"char":5}}
inline EvalData eval_from_json(const nlohmann::json& j, const CoeffAlgebraSpec& spec) {
  if (!j.is_object()) throw std::invalid_argument("eval table must be a JSON object");
  Weight lambda{j.at("lambda").get<std::vector<int>>()};
  if (!lambda.is_dominant()) throw std::invalid_argument("eval table: lambda is not dominant");
  FieldSpec field;
  if (j.contains("field")) field.characteristic = j.at("field").at("char").get<std::uint32_t>();
  EvalData eval(lambda, field);
  if (j.contains("c")) {
    for (const auto& e : j.at("c")) {
      const int i = e.at("i").get<int>();
      const Monomial b = Monomial::parse(e.at("b").get<std::string>(), spec.nvars);
      if (!spec.contains(b)) throw std::invalid_argument("eval table: " + b.str() + " not in " + spec.str());
      const auto& v = e.at("value");
      const Rational value = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
      eval.set(i - 1, b, e.at("r").get<int>(), value);
    }
  }
  return eval;
}

inline nlohmann::json eval_to_json(const EvalData& eval) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& [key, v] : eval.table()) {
    const auto& [i, b, r] = key;
    c.push_back({{"i", i + 1}, {"b", b.str()}, {"r", r}, {"value", v.get_str()}});
  }
  return {{"lambda", eval.lambda().coords}, {"c", c}, {"field", {{"char", eval.field().characteristic}}}};
}

}  // namespace hyperweyl

#endif
