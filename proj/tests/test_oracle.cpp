#include <hyperweyl/oracle.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hyperweyl;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(std::size_t n) { return Matrix(n, std::vector<Rational>(n)); }

Matrix identity(std::size_t n) {
  auto m = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  auto m = zero_matrix(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < a.size(); ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

void add_scaled(Matrix& a, const Matrix& b, const Rational& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += c * b[i][j];
}

// Evaluation representation of sl_{n+1} (x) F[t1..tm] at t_j = j + 1 on F^{n+1}.
struct NaturalRep {
  const RootDatum& datum;

  Rational eval(const Monomial& b) const {
    Rational v = 1;
    for (std::size_t j = 0; j < b.nvars(); ++j)
      for (int e = 0; e < b.exponent(j); ++e) v *= static_cast<int>(j) + 2;
    return v;
  }

  Matrix letter(const LieBasisElt& x) const {
    const std::size_t n = static_cast<std::size_t>(datum.rank()) + 1;
    auto m = zero_matrix(n);
    const Rational v = eval(x.b);
    if (x.kind == LetterKind::Cartan) {
      m[x.index][x.index] = v;
      m[x.index + 1][x.index + 1] = -v;
      return m;
    }
    const auto& r = datum.root(x.index);
    int first = -1, last = -1;
    for (int i = 0; i < datum.rank(); ++i)
      if (r.coords[i] != 0) {
        if (first < 0) first = i;
        last = i;
      }
    if (x.kind == LetterKind::Raise)
      m[first][last + 1] = v;
    else
      m[last + 1][first] = v;
    return m;
  }

  Matrix word(const PbwWord& w) const {
    auto m = identity(static_cast<std::size_t>(datum.rank()) + 1);
    for (const auto& x : w) m = m * letter(x);
    return m;
  }

  Matrix element(const OracleElt& e) const {
    auto m = zero_matrix(static_cast<std::size_t>(datum.rank()) + 1);
    for (const auto& [w, c] : e.terms()) add_scaled(m, word(w), c);
    return m;
  }
};

std::vector<LieBasisElt> letters(const RootDatum& datum, const CoeffAlgebraSpec& spec, int max_deg) {
  std::vector<LieBasisElt> out;
  for (const auto& b : spec.basis_up_to(max_deg)) {
    for (std::size_t a = 0; a < datum.num_positive_roots(); ++a) {
      out.push_back(lower(a, b));
      out.push_back(raise(a, b));
    }
    for (int i = 0; i < datum.rank(); ++i) out.push_back(cartan(i, b));
  }
  return out;
}

OracleElt bracket_with(const Envelope& env, const LieBasisElt& x, const OracleElt& y) {
  OracleElt out;
  for (const auto& [w, c] : y.terms()) {
    EXPECT_EQ(w.size(), 1u);
    out.add(env.lie_bracket(x, w.front()), c);
  }
  return out;
}

PbwWord random_word(std::mt19937_64& rng, const std::vector<LieBasisElt>& pool, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  PbwWord w;
  for (int i = len(rng); i > 0; --i) w.push_back(pool[pick(rng)]);
  return w;
}

bool is_pbw_ordered(const PbwWord& w) { return std::is_sorted(w.begin(), w.end()); }

}  // namespace

TEST(Envelope, BasicBrackets) {
  const auto A1 = parse_root_datum("A1");
  Envelope env(A1, CoeffAlgebraSpec::polynomial(1));
  const Monomial one(1), t{1};
  // [e, f] = h, [h, e] = 2e, [h (x) t, f (x) t] = -2 f (x) t^2
  EXPECT_EQ(env.lie_bracket(raise(0, one), lower(0, one)), OracleElt::word({cartan(0, one)}));
  EXPECT_EQ(env.lie_bracket(cartan(0, one), raise(0, one)), OracleElt::word({raise(0, one)}, 2));
  EXPECT_EQ(env.lie_bracket(cartan(0, t), lower(0, t)), OracleElt::word({lower(0, Monomial{2})}, -2));
}

TEST(Envelope, A2ExtraspecialSign) {
  const auto A2 = parse_root_datum("A2");
  Envelope env(A2, CoeffAlgebraSpec::constant());
  const Monomial one(0);
  EXPECT_EQ(env.lie_bracket(raise(0, one), raise(1, one)), OracleElt::word({raise(2, one)}));
  EXPECT_EQ(env.lie_bracket(lower(0, one), lower(1, one)), OracleElt::word({lower(2, one)}, -1));
}

TEST(Envelope, Antisymmetry) {
  for (const char* label : {"A1", "A2", "A3"}) {
    const auto D = parse_root_datum(label);
    Envelope env(D, CoeffAlgebraSpec::polynomial(1));
    const auto pool = letters(D, env.coeff_spec(), 1);
    for (const auto& x : pool)
      for (const auto& y : pool) EXPECT_EQ(env.lie_bracket(x, y), env.lie_bracket(y, x) * Rational(-1)) << label;
  }
}

TEST(Envelope, Jacobi) {
  for (const char* label : {"A1", "A2", "A3"}) {
    const auto D = parse_root_datum(label);
    Envelope env(D, CoeffAlgebraSpec::polynomial(2));
    const auto pool = letters(D, env.coeff_spec(), 1);
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (const auto& z : pool) {
          OracleElt j = bracket_with(env, x, env.lie_bracket(y, z));
          j += bracket_with(env, y, env.lie_bracket(z, x));
          j += bracket_with(env, z, env.lie_bracket(x, y));
          ASSERT_TRUE(j.is_zero()) << label;
        }
  }
}

TEST(Envelope, NormalFormExample) {
  const auto A1 = parse_root_datum("A1");
  Envelope env(A1, CoeffAlgebraSpec::constant());
  const Monomial one(0);
  // e f = f e + h
  OracleElt expect = OracleElt::word({lower(0, one), raise(0, one)});
  expect.add(PbwWord{cartan(0, one)}, 1);
  EXPECT_EQ(env.normal_form({raise(0, one), lower(0, one)}), expect);
  // e f f = f f e + 2 f h - 2 f
  OracleElt e2 = OracleElt::word({lower(0, one), lower(0, one), raise(0, one)});
  e2.add(PbwWord{lower(0, one), cartan(0, one)}, 2);
  e2.add(PbwWord{lower(0, one)}, -2);
  EXPECT_EQ(env.normal_form({raise(0, one), lower(0, one), lower(0, one)}), e2);
}

TEST(Envelope, NormalFormIsOrderedAndMatchesNaturalRep) {
  std::mt19937_64 rng(5);
  for (const char* label : {"A1", "A2", "A3"}) {
    const auto D = parse_root_datum(label);
    Envelope env(D, CoeffAlgebraSpec::polynomial(2));
    const NaturalRep rep{D};
    const auto pool = letters(D, env.coeff_spec(), 1);
    for (int trial = 0; trial < 60; ++trial) {
      const PbwWord w = random_word(rng, pool, 5);
      const OracleElt nf = env.normal_form(w);
      for (const auto& [v, c] : nf.terms()) ASSERT_TRUE(is_pbw_ordered(v));
      EXPECT_EQ(rep.element(nf), rep.word(w)) << label << " trial " << trial;
    }
  }
}

TEST(Envelope, CommutatorIsBracket) {
  const auto A2 = parse_root_datum("A2");
  Envelope env(A2, CoeffAlgebraSpec::polynomial(1));
  const auto pool = letters(A2, env.coeff_spec(), 1);
  for (const auto& x : pool)
    for (const auto& y : pool) EXPECT_EQ(env.normal_form({x, y}) - env.normal_form({y, x}), env.lie_bracket(x, y));
}

TEST(Envelope, Associativity) {
  std::mt19937_64 rng(9);
  const auto A2 = parse_root_datum("A2");
  Envelope env(A2, CoeffAlgebraSpec::polynomial(1));
  const auto pool = letters(A2, env.coeff_spec(), 2);
  for (int trial = 0; trial < 40; ++trial) {
    const OracleElt a = env.normal_form(random_word(rng, pool, 3));
    const OracleElt b = env.normal_form(random_word(rng, pool, 3), Rational(1, 2));
    const OracleElt c = env.normal_form(random_word(rng, pool, 2), 3);
    EXPECT_EQ(env.multiply(env.multiply(a, b), c), env.multiply(a, env.multiply(b, c))) << trial;
  }
}

TEST(Envelope, BidegreeConserved) {
  std::mt19937_64 rng(13);
  const auto A2 = parse_root_datum("A2");
  Envelope env(A2, CoeffAlgebraSpec::polynomial(2));
  const auto pool = letters(A2, env.coeff_spec(), 2);
  for (int trial = 0; trial < 100; ++trial) {
    const PbwWord w = random_word(rng, pool, 5);
    const auto bd = env.bidegree(w);
    const OracleElt nf = env.normal_form(w);
    for (const auto& [v, c] : nf.terms()) EXPECT_EQ(env.bidegree(v), bd);
  }
}

TEST(Envelope, LaurentCoefficients) {
  const auto A1 = parse_root_datum("A1");
  Envelope env(A1, CoeffAlgebraSpec::laurent());
  const auto e = env.lie_bracket(raise(0, Monomial{-1}), lower(0, Monomial{1}));
  EXPECT_EQ(e, OracleElt::word({cartan(0, Monomial{0})}));
}

TEST(Envelope, MemoGrowsAndClears) {
  const auto A1 = parse_root_datum("A1");
  Envelope env(A1, CoeffAlgebraSpec::constant());
  const Monomial one(0);
  (void)env.normal_form({raise(0, one), lower(0, one), lower(0, one)});
  EXPECT_GT(env.memo_size(), 0u);
  env.clear_memo();
  EXPECT_EQ(env.memo_size(), 0u);
}

TEST(Envelope, RejectsOtherTypes) {
  EXPECT_THROW(Envelope(parse_root_datum("B2"), CoeffAlgebraSpec::constant()), UnsupportedTypeError);
  EXPECT_THROW(Envelope(parse_root_datum("G2"), CoeffAlgebraSpec::constant()), UnsupportedTypeError);
}
