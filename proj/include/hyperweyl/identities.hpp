#ifndef HYPERWEYL_IDENTITIES_HPP
#define HYPERWEYL_IDENTITIES_HPP

#include "straighten.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hyperweyl {

enum class Identity {
  Basicrel,
  Commutrels1,
  Commutrels2,
  Commutrels3,
  Commutrels4,
  Commutrels5,
  AkReduction,
  GAformsIntegrality,
};

inline const std::array<Identity, 8>& all_identities() {
  static const std::array<Identity, 8> ids{Identity::Basicrel,    Identity::Commutrels1, Identity::Commutrels2,
                                           Identity::Commutrels3, Identity::Commutrels4, Identity::Commutrels5,
                                           Identity::AkReduction, Identity::GAformsIntegrality};
  return ids;
}

inline std::string identity_name(Identity id) {
  switch (id) {
    case Identity::Basicrel: return "basicrel";
    case Identity::Commutrels1: return "commutrels1";
    case Identity::Commutrels2: return "commutrels2";
    case Identity::Commutrels3: return "commutrels3";
    case Identity::Commutrels4: return "commutrels4";
    case Identity::Commutrels5: return "commutrels5";
    case Identity::AkReduction: return "a_k_reduction";
    case Identity::GAformsIntegrality: return "gAforms_integrality";
  }
  return "?";
}

inline Identity parse_identity(const std::string& name) {
  for (auto id : all_identities())
    if (identity_name(id) == name) return id;
  throw std::invalid_argument("unknown identity '" + name + "'");
}

/// One instance of an identity. Unused fields are ignored.
struct IdentityCase {
  Identity which = Identity::Basicrel;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  int node = 0;
  int sign = -1;  // -1: lowering root vectors, +1: raising
  Monomial a;
  Monomial b;
  int k = 1;
  int l = 1;
  int r = 1;
  int s = 1;
  std::uint64_t seed = 0;
};

/// Sweep limits: divided-power exponents, degree of basis elements a, b,
/// word length and sample count for random products.
struct IdentityLimits {
  int max_power = 3;
  int max_adeg = 3;
  int max_word = 4;
  int samples = 50;
};

struct IdentityReport {
  bool pass = false;
  HyperElt lhs;
  HyperElt rhs;
  OracleElt residual;
  std::string note;
};

inline std::string case_str(const RootDatum& datum, const IdentityCase& c) {
  auto root = [&](std::size_t i) { return root_label(datum.root(i)); };
  const std::string sg = c.sign < 0 ? "-" : "+";
  switch (c.which) {
    case Identity::Basicrel:
      return "alpha=" + root(c.alpha) + " a=" + c.a.str() + " b=" + c.b.str() + " r=" + std::to_string(c.r) +
             " s=" + std::to_string(c.s);
    case Identity::Commutrels1:
      return "sign=" + sg + " alpha=" + root(c.alpha) + " beta=" + root(c.beta) + " a=" + c.a.str() +
             " b=" + c.b.str() + " k=" + std::to_string(c.k) + " l=" + std::to_string(c.l);
    case Identity::Commutrels2:
      return "alpha=" + root(c.alpha) + " k=" + std::to_string(c.k) + " l=" + std::to_string(c.l);
    case Identity::Commutrels3:
      return "i=" + std::to_string(c.node + 1) + " sign=" + sg + " alpha=" + root(c.alpha) + " a=" + c.a.str() +
             " k=" + std::to_string(c.k) + " l=" + std::to_string(c.l);
    case Identity::Commutrels4:
      return "sign=" + sg + " alpha=" + root(c.alpha) + " a=" + c.a.str() + " k=" + std::to_string(c.k) +
             " l=" + std::to_string(c.l);
    case Identity::Commutrels5:
      return "alpha=" + root(c.alpha) + " a=" + c.a.str() + " b=" + c.b.str() + " r=" + std::to_string(c.r) +
             " k=" + std::to_string(c.k);
    case Identity::AkReduction:
      return "i=" + std::to_string(c.node + 1) + " a=" + c.a.str() + " k=" + std::to_string(c.k) +
             " r=" + std::to_string(c.r);
    case Identity::GAformsIntegrality: return "seed=" + std::to_string(c.seed);
  }
  return "";
}

/// Random product of generators of M(A) within the limits.
inline std::vector<GenSym> random_generator_word(const RootDatum& datum, const CoeffAlgebraSpec& spec,
                                                 const IdentityLimits& lim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto basis = spec.basis_up_to(lim.max_adeg);
  std::vector<Monomial> nonunit;
  for (const auto& m : basis)
    if (!m.is_one()) nonunit.push_back(m);
  const int len = pick(2, std::max(2, lim.max_word));
  const int nroots = static_cast<int>(datum.num_positive_roots());
  std::vector<GenSym> word;
  while (static_cast<int>(word.size()) < len) {
    const int kind = pick(0, 9);
    const int k = pick(1, lim.max_power);
    if (kind < 4) {
      word.push_back(GenSym::lower(pick(0, nroots - 1), basis[pick(0, static_cast<int>(basis.size()) - 1)], k));
    } else if (kind < 8) {
      word.push_back(GenSym::raise(pick(0, nroots - 1), basis[pick(0, static_cast<int>(basis.size()) - 1)], k));
    } else if (kind == 8 || nonunit.empty()) {
      word.push_back(GenSym::binom(pick(0, datum.rank() - 1), spec.nvars, k));
    } else {
      word.push_back(GenSym::lambda(pick(0, datum.rank() - 1), nonunit[pick(0, static_cast<int>(nonunit.size()) - 1)], k));
    }
  }
  return word;
}

inline void check_case(const RootDatum& datum, const CoeffAlgebraSpec& spec, const IdentityCase& c,
                       const IdentityLimits& lim) {
  auto bad = [&](const std::string& why) {
    return std::out_of_range(identity_name(c.which) + ": " + why + " (" + case_str(datum, c) + ")");
  };
  const auto nroots = datum.num_positive_roots();
  if (c.alpha >= nroots || c.beta >= nroots) throw bad("root index out of range");
  if (c.node < 0 || c.node >= datum.rank()) throw bad("node out of range");
  for (int v : {c.k, c.l, c.r, c.s})
    if (v < 1 || v > lim.max_power) throw bad("exponent outside 1.." + std::to_string(lim.max_power));
  const bool uses_a = c.which != Identity::Commutrels2 && c.which != Identity::GAformsIntegrality;
  const bool uses_b = c.which == Identity::Basicrel || c.which == Identity::Commutrels1 || c.which == Identity::Commutrels5;
  for (const auto* m : {&c.a, &c.b}) {
    if ((m == &c.a && !uses_a) || (m == &c.b && !uses_b)) continue;
    if (m->nvars() == 0 && spec.nvars == 0) continue;
    if (!spec.contains(*m)) throw bad("basis element not in " + spec.str());
    if (std::abs(m->degree()) > lim.max_adeg) throw bad("A-degree above " + std::to_string(lim.max_adeg));
  }
  if (c.which == Identity::Basicrel && c.s < c.r) throw bad("basicrel needs s >= r");
  if (c.which == Identity::AkReduction && c.a.is_one()) throw bad("a must differ from 1");
}

/// Builds both sides of the identity in the rational envelope and compares them.
inline IdentityReport verify_identity(Hyperalgebra& H, const IdentityCase& c, const IdentityLimits& lim = {}) {
  const auto& datum = H.datum();
  const auto& spec = H.coeff_spec();
  check_case(datum, spec, c, lim);
  Envelope& env = H.envelope();
  const Monomial one = H.one();
  IdentityReport rep;
  OracleElt lhs, rhs;
  auto rv = [&](int sign, std::size_t root, const Monomial& b, int k) {
    return sign < 0 ? GenSym::lower(root, b, k) : GenSym::raise(root, b, k);
  };

  switch (c.which) {
    case Identity::Basicrel: {
      lhs = H.expand_product({GenSym::raise(c.alpha, c.a, c.r), GenSym::lower(c.alpha, c.b, c.s)}).drop_raising();
      const Monomial ab = mul_basis(spec, c.a, c.b);
      for (int j = 0; j <= c.r; ++j) {
        OracleElt x = H.xminus_series_dp_coeff(c.alpha, c.a, c.b, c.s - c.r, c.s - c.r + j);
        OracleElt lam = H.lambda_poly_root(c.alpha, ab, c.r - j);
        rhs.add(env.multiply(x, lam), c.r % 2 == 0 ? 1 : -1);
      }
      break;
    }
    case Identity::Commutrels1: {
      const auto fwd = H.straighten({rv(c.sign, c.alpha, c.a, c.k), rv(c.sign, c.beta, c.b, c.l)});
      const auto rev = H.straighten({rv(c.sign, c.beta, c.b, c.l), rv(c.sign, c.alpha, c.a, c.k)});
      rep.lhs = fwd;
      rep.rhs = rev;
      const HyperElt diff = fwd - rev;
      rep.pass = true;
      for (const auto& [m, coef] : diff.terms()) {
        const bool same_sign = std::all_of(m.begin(), m.end(), [&](const GenSym& g) {
          return g.kind == (c.sign < 0 ? GenKind::Lower : GenKind::Raise);
        });
        if (!same_sign || root_degree(m) >= c.k + c.l) {
          rep.pass = false;
          rep.residual.add(H.expand(m), Rational(coef));
        }
      }
      if (!rep.pass) rep.note = "cross term of degree >= k+l";
      return rep;
    }
    case Identity::Commutrels2: {
      lhs = H.expand_product({GenSym::raise(c.alpha, one, c.l), GenSym::lower(c.alpha, one, c.k)});
      const OracleElt h = H.h_root(c.alpha, one);
      for (int m = 0; m <= std::min(c.k, c.l); ++m) {
        OracleElt left = c.k - m > 0 ? H.expand(GenSym::lower(c.alpha, one, c.k - m)) : OracleElt::scalar(1);
        OracleElt right = c.l - m > 0 ? H.expand(GenSym::raise(c.alpha, one, c.l - m)) : OracleElt::scalar(1);
        OracleElt mid = H.binom_poly(h, Rational(-c.k - c.l + 2 * m), m);
        rhs += env.multiply(env.multiply(left, mid), right);
      }
      break;
    }
    case Identity::Commutrels3: {
      const OracleElt hi = OracleElt::word(PbwWord{cartan(c.node, one)});
      const int shift = c.sign * c.k * datum.root_on_coroot(datum.root(c.alpha), c.node);
      const OracleElt x = H.expand(rv(c.sign, c.alpha, c.a, c.k));
      lhs = env.multiply(H.binom_poly(hi, 0, c.l), x);
      rhs = env.multiply(x, H.binom_poly(hi, Rational(shift), c.l));
      break;
    }
    case Identity::Commutrels4: {
      lhs = H.expand_product({rv(c.sign, c.alpha, c.a, c.k), rv(c.sign, c.alpha, c.a, c.l)});
      rhs = H.expand(rv(c.sign, c.alpha, c.a, c.k + c.l)) *
            Rational(rational_binomial(c.k + c.l, static_cast<unsigned long>(c.k)));
      break;
    }
    case Identity::Commutrels5: {
      lhs = env.multiply(H.lambda_poly_root(c.alpha, c.a, c.r), H.expand(GenSym::lower(c.alpha, c.b, c.k)));
      std::vector<std::pair<Monomial, Rational>> series;
      for (int j = 0; j <= c.r; ++j) series.emplace_back(c.a.pow(j) * c.b, j + 1);
      for (int s = 0; s <= c.r; ++s)
        rhs += env.multiply(H.series_dp_coeff(c.alpha, series, c.k, c.r - s), H.lambda_poly_root(c.alpha, c.a, s));
      break;
    }
    case Identity::AkReduction: {
      const auto red = H.lambda_power_reduction(c.node, c.a, c.k, c.r);
      lhs = H.lambda_poly(c.node, c.a.pow(c.k), c.r);
      rhs = H.evaluate_lambda_reduction(c.node, c.a, red);
      rep.residual = lhs - rhs;
      const auto lead = red.terms.find(LambdaProduct{{c.k * c.r, 1}});
      const bool lead_ok = lead != red.terms.end() && lead->second == c.k;
      rep.pass = rep.residual.is_zero() && red.integral() && lead_ok;
      if (!red.integral()) rep.note = "non-integer coefficient m";
      if (!lead_ok) rep.note = "leading coefficient differs from k";
      rep.lhs = H.collect(lhs);
      rep.rhs = H.collect(rhs);
      return rep;
    }
    case Identity::GAformsIntegrality: {
      const auto word = random_generator_word(datum, spec, lim, c.seed);
      lhs = H.expand_product(word);
      try {
        rep.lhs = H.collect(lhs);
      } catch (const NotInZFormError& e) {
        rep.pass = false;
        rep.note = e.what();
        return rep;
      }
      rhs = H.expand(rep.lhs);
      rep.rhs = rep.lhs;
      rep.residual = lhs - rhs;
      rep.pass = rep.residual.is_zero();
      if (!rep.pass) rep.note = "round trip through expand_divided differs";
      return rep;
    }
  }
  rep.residual = lhs - rhs;
  rep.pass = rep.residual.is_zero();
  try {
    rep.lhs = H.collect(lhs);
    rep.rhs = H.collect(rhs);
  } catch (const NotInZFormError& e) {
    rep.pass = false;
    rep.note = e.what();
  }
  return rep;
}

/// Deterministic parameter sweep for one identity.
inline std::vector<IdentityCase> identity_sweep(Identity id, const RootDatum& datum, const CoeffAlgebraSpec& spec,
                                                const IdentityLimits& lim) {
  std::vector<IdentityCase> out;
  const auto basis = spec.basis_up_to(lim.max_adeg);
  const auto nroots = datum.num_positive_roots();
  const int P = lim.max_power;
  const Monomial one = spec.one();
  IdentityCase c;
  c.which = id;
  c.a = c.b = one;
  switch (id) {
    case Identity::Basicrel:
      for (std::size_t al = 0; al < nroots; ++al)
        for (const auto& a : basis)
          for (const auto& b : basis)
            for (int r = 1; r <= P; ++r)
              for (int s = r; s <= P; ++s) {
                c.alpha = al, c.a = a, c.b = b, c.r = r, c.s = s;
                out.push_back(c);
              }
      break;
    case Identity::Commutrels1:
      for (int sign : {-1, 1})
        for (std::size_t al = 0; al < nroots; ++al)
          for (std::size_t be = 0; be < nroots; ++be)
            for (const auto& a : basis)
              for (const auto& b : basis)
                for (int k = 1; k <= P; ++k)
                  for (int l = 1; l <= P; ++l) {
                    if (k * std::abs(a.degree()) + l * std::abs(b.degree()) > lim.max_adeg) continue;
                    c.sign = sign, c.alpha = al, c.beta = be, c.a = a, c.b = b, c.k = k, c.l = l;
                    out.push_back(c);
                  }
      break;
    case Identity::Commutrels2:
      for (std::size_t al = 0; al < nroots; ++al)
        for (int k = 1; k <= P; ++k)
          for (int l = 1; l <= P; ++l) {
            c.alpha = al, c.k = k, c.l = l;
            out.push_back(c);
          }
      break;
    case Identity::Commutrels3:
      for (int i = 0; i < datum.rank(); ++i)
        for (int sign : {-1, 1})
          for (std::size_t al = 0; al < nroots; ++al)
            for (const auto& a : basis)
              for (int k = 1; k <= P; ++k)
                for (int l = 1; l <= P; ++l) {
                  c.node = i, c.sign = sign, c.alpha = al, c.a = a, c.k = k, c.l = l;
                  out.push_back(c);
                }
      break;
    case Identity::Commutrels4:
      for (int sign : {-1, 1})
        for (std::size_t al = 0; al < nroots; ++al)
          for (const auto& a : basis)
            for (int k = 1; k <= P; ++k)
              for (int l = 1; l <= P; ++l) {
                if ((k + l) * std::abs(a.degree()) > lim.max_adeg) continue;
                c.sign = sign, c.alpha = al, c.a = a, c.k = k, c.l = l;
                out.push_back(c);
              }
      break;
    case Identity::Commutrels5:
      for (std::size_t al = 0; al < nroots; ++al)
        for (const auto& a : basis)
          for (const auto& b : basis)
            for (int r = 1; r <= P; ++r)
              for (int k = 1; k <= P; ++k) {
                if (r * std::abs(a.degree()) + k * std::abs(b.degree()) > lim.max_adeg) continue;
                c.alpha = al, c.a = a, c.b = b, c.r = r, c.k = k;
                out.push_back(c);
              }
      break;
    case Identity::AkReduction:
      for (int i = 0; i < datum.rank(); ++i)
        for (const auto& a : basis) {
          if (a.is_one()) continue;
          for (int k = 1; k <= P; ++k)
            for (int r = 1; r <= P; ++r) {
              c.node = i, c.a = a, c.k = k, c.r = r;
              out.push_back(c);
            }
        }
      break;
    case Identity::GAformsIntegrality:
      for (int n = 0; n < lim.samples; ++n) {
        c.seed = static_cast<std::uint64_t>(n);
        out.push_back(c);
      }
      break;
  }
  return out;
}

/// Thread count from HYPERWEYL_THREADS, else the hardware concurrency (at least 1).
inline unsigned sweep_threads() {
  if (const char* env = std::getenv("HYPERWEYL_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Verifies every case; reports come back in case order. Each worker owns a Hyperalgebra.
inline std::vector<IdentityReport> run_sweep(const RootDatum& datum, const CoeffAlgebraSpec& spec,
                                             const std::vector<IdentityCase>& cases, const IdentityLimits& lim,
                                             unsigned threads = sweep_threads()) {
  std::vector<IdentityReport> out(cases.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Hyperalgebra H(datum, spec);
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        out[i] = verify_identity(H, cases[i], lim);
      } catch (const NotInZFormError& e) {
        out[i].pass = false;
        out[i].note = std::string("not in Z-form: ") + e.what();
      } catch (const std::exception& e) {
        out[i].pass = false;
        out[i].note = e.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace hyperweyl

#endif
