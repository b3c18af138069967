#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "braidsplit/crt.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/smith.hpp"
#include "braidsplit/solve.hpp"

using namespace braidsplit;

namespace {

// Fraction-free Gaussian elimination; independent of the SNF code path.
BigInt bareiss_det(IntegerMatrix m)
{
  Index const n = m.rows();
  if (n == 0)
    return 1;
  BigInt sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool same(IntegerMatrix const &a, IntegerMatrix const &b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return false;
  return true;
}

IntegerMatrix identity(Index n)
{
  IntegerMatrix m = IntegerMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

BigInt gcd_of_entries(IntegerMatrix const &m)
{
  BigInt g = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      g = gcd(g, m(i, j));
  return g;
}

IntegerMatrix random_matrix(std::mt19937 &rng, Index rows, Index cols, int bound)
{
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = entry(rng);
  return m;
}

void check_smith(IntegerMatrix const &m)
{
  auto snf = smith_normal_form(m);
  CHECK(same(multiply(multiply(snf.U, m), snf.V), snf.D));
  CHECK(abs(bareiss_det(snf.U)) == 1);
  CHECK(abs(bareiss_det(snf.V)) == 1);
  Index const diag = std::min(m.rows(), m.cols());
  for (Index i = 0; i < snf.D.rows(); ++i)
    for (Index j = 0; j < snf.D.cols(); ++j)
      if (i != j)
        CHECK(snf.D(i, j) == 0);
  for (Index i = 0; i < diag; ++i) {
    CHECK(snf.D(i, i) >= 0);
    if (i + 1 < diag) {
      if (snf.D(i, i) == 0)
        CHECK(snf.D(i + 1, i + 1) == 0);
      else
        CHECK(snf.D(i + 1, i + 1) % snf.D(i, i) == 0);
    }
  }
  if (diag > 0)
    CHECK(snf.D(0, 0) == gcd_of_entries(m));
}

std::vector<std::vector<std::int64_t>> all_vectors(Index len, std::int64_t q)
{
  std::vector<std::vector<std::int64_t>> out{{}};
  for (Index i = 0; i < len; ++i) {
    std::vector<std::vector<std::int64_t>> next;
    for (auto const &v : out)
      for (std::int64_t x = 0; x < q; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::set<std::vector<std::int64_t>> brute_solutions(ResidueMatrix const &m, ResidueVector const &b)
{
  std::set<std::vector<std::int64_t>> out;
  for (auto const &x : all_vectors(m.cols(), m.modulus()))
    if (m * ResidueVector(x, m.modulus()) == b)
      out.insert(x);
  return out;
}

std::set<std::vector<std::int64_t>> solution_set(Solution const &sol)
{
  std::set<std::vector<std::int64_t>> span{sol.particular.to_std()};
  for (auto const &k : sol.kernel_basis) {
    std::set<std::vector<std::int64_t>> next;
    for (auto const &v : span) {
      ResidueVector x(v, k.modulus());
      for (std::int64_t c = 0; c < k.modulus(); ++c, x = x + k)
        next.insert(x.to_std());
    }
    span = std::move(next);
  }
  return span;
}

} // namespace

TEST_CASE("residue arithmetic")
{
  Residue a(7, 5), b(-1, 5);
  CHECK(a.value() == 2);
  CHECK(b.value() == 4);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 3);
  CHECK(a.inverse()->value() == 3);
  CHECK_FALSE(Residue(2, 4).inverse().has_value());
  CHECK_THROWS_AS(Residue(1, 4) + Residue(1, 5), ModulusMismatch);
  CHECK_THROWS_AS(Residue(1, 0), DomainError);
  CHECK(*inverse_mod(2, 7) == 4);

  ResidueVector v({1, 2}, 3), w({1, 2, 0}, 3);
  CHECK_THROWS_AS(v + w, DimensionMismatch);
  CHECK_THROWS_AS(v + ResidueVector({1, 2}, 4), ModulusMismatch);
  CHECK_THROWS_AS(ResidueMatrix({{1, 0}}, 3) * w, DimensionMismatch);
}

TEST_CASE("smith_normal_form examples")
{
  IntegerMatrix zero = IntegerMatrix::Zero(1, 1);
  auto z = smith_normal_form(zero);
  CHECK(same(z.U, identity(1)));
  CHECK(same(z.D, zero));
  CHECK(same(z.V, identity(1)));

  IntegerMatrix id = identity(3);
  CHECK(same(smith_normal_form(id).D, id));

  IntegerMatrix m(2, 2);
  m << 2, 4, 6, 8;
  auto snf = smith_normal_form(m);
  CHECK(snf.D(0, 0) == 2);
  CHECK(snf.D(1, 1) == 4);
  CHECK(snf.D(0, 1) == 0);
  CHECK(snf.D(1, 0) == 0);
  CHECK(same(multiply(multiply(snf.U, m), snf.V), snf.D));
  check_smith(m);

  IntegerMatrix wide(2, 4);
  wide << 0, 0, 0, 0, 0, 6, 0, 4;
  check_smith(wide);
  CHECK(smith_normal_form(wide).rank() == 1);
}

TEST_CASE("smith_normal_form property: random small matrices")
{
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial)
    check_smith(random_matrix(rng, dim(rng), dim(rng), 10));
}

TEST_CASE("smith_normal_form is deterministic")
{
  std::mt19937 rng(7);
  auto m = random_matrix(rng, 4, 5, 10);
  auto a = smith_normal_form(m);
  auto b = smith_normal_form(m);
  CHECK(same(a.U, b.U));
  CHECK(same(a.V, b.V));
}

TEST_CASE("solve_mod examples")
{
  ResidueMatrix m({{2}}, 4);

  auto yes = solve_mod(m, ResidueVector({2}, 4));
  REQUIRE(is_solvable(yes));
  auto const &sol = std::get<Solution>(yes);
  CHECK(sol.particular == ResidueVector({1}, 4));
  REQUIRE(sol.kernel_basis.size() == 1);
  CHECK(sol.kernel_basis[0] == ResidueVector({2}, 4));

  auto no = solve_mod(m, ResidueVector({1}, 4));
  REQUIRE_FALSE(is_solvable(no));
  CHECK(std::get<Insolvable>(no).certificate == ResidueVector({2}, 4));

  ResidueMatrix trivial({{3, 5}, {1, 1}}, 1);
  auto t = solve_mod(trivial, ResidueVector({7, 9}, 1));
  REQUIRE(is_solvable(t));
  CHECK(std::get<Solution>(t).particular.is_zero());

  CHECK_THROWS_AS(solve_mod(m, ResidueVector({1, 1}, 4)), DimensionMismatch);
  CHECK_THROWS_AS(solve_mod(m, ResidueVector({1}, 5)), ModulusMismatch);
}

TEST_CASE("verify_outcome examples")
{
  ResidueMatrix m({{2}}, 4);
  CHECK(verify_outcome(m, ResidueVector({2}, 4),
                       Solution{ResidueVector({1}, 4), {ResidueVector({2}, 4)}}));
  CHECK(verify_outcome(m, ResidueVector({1}, 4), Insolvable{ResidueVector({2}, 4)}));
  CHECK_FALSE(verify_outcome(m, ResidueVector({1}, 4), Solution{ResidueVector({1}, 4), {}}));
  // Correct particular solution but a kernel basis that misses x = 2.
  CHECK_FALSE(verify_outcome(m, ResidueVector({2}, 4), Solution{ResidueVector({1}, 4), {}}));
  // u = 1 does not annihilate M.
  CHECK_FALSE(verify_outcome(m, ResidueVector({1}, 4), Insolvable{ResidueVector({1}, 4)}));
}

TEST_CASE("solve_mod agrees with exhaustive search")
{
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<std::int64_t> modulus(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t q = modulus(rng);
    Index rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<std::int64_t> entry(0, q - 1);
    Int64Matrix mm(rows, cols);
    Int64Vector bb(rows);
    for (Index i = 0; i < rows; ++i) {
      bb(i) = entry(rng);
      for (Index j = 0; j < cols; ++j)
        mm(i, j) = entry(rng);
    }
    ResidueMatrix m(mm, q);
    ResidueVector b(bb, q);
    auto outcome = solve_mod(m, b);
    auto brute = brute_solutions(m, b);
    CHECK(verify_outcome(m, b, outcome));
    CHECK(is_solvable(outcome) == !brute.empty());
    if (auto const *sol = std::get_if<Solution>(&outcome))
      CHECK(solution_set(*sol) == brute);
  }
}

TEST_CASE("crt_split")
{
  CHECK(crt_split(6) == std::vector<PrimePowerFactor>{{2, 1, 2}, {3, 1, 3}});
  CHECK(crt_split(12) == std::vector<PrimePowerFactor>{{2, 2, 4}, {3, 1, 3}});
  CHECK(crt_split(7) == std::vector<PrimePowerFactor>{{7, 1, 7}});
  CHECK_THROWS_AS(crt_split(1), DomainError);
  for (std::int64_t q = 2; q <= 200; ++q) {
    std::int64_t product = 1, last = 0;
    for (auto const &f : crt_split(q)) {
      CHECK(f.prime > last);
      last = f.prime;
      product *= f.modulus;
    }
    CHECK(product == q);
  }
}

TEST_CASE("crt_combine")
{
  CHECK(crt_combine({ResidueVector({1}, 2), ResidueVector({2}, 3)}) == ResidueVector({5}, 6));
  CHECK(crt_combine({ResidueVector({0}, 4), ResidueVector({0}, 3)}).is_zero());
  CHECK(crt_combine({ResidueVector({1, 0}, 2), ResidueVector({2, 1}, 3)}) ==
        ResidueVector({5, 4}, 6));
  CHECK_THROWS_AS(crt_combine({ResidueVector({1}, 2), ResidueVector({1}, 4)}), DomainError);
}

TEST_CASE("crt_combine inverts reduction by the prime-power factors")
{
  for (std::int64_t q = 2; q <= 30; ++q) {
    auto factors = crt_split(q);
    for (auto const &x : all_vectors(2, q)) {
      ResidueVector v(x, q);
      std::vector<ResidueVector> parts;
      for (auto const &f : factors)
        parts.push_back(v.reduced(f.modulus));
      CHECK(crt_combine(parts) == v);
    }
  }
}

TEST_CASE("solvability mod q is solvability mod every prime-power factor")
{
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<std::int64_t> modulus(2, 36);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t q = modulus(rng);
    Index rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<std::int64_t> entry(0, q - 1);
    Int64Matrix mm(rows, cols);
    Int64Vector bb(rows);
    for (Index i = 0; i < rows; ++i) {
      bb(i) = entry(rng);
      for (Index j = 0; j < cols; ++j)
        mm(i, j) = entry(rng);
    }
    bool all_factors = true;
    for (auto const &f : crt_split(q))
      all_factors = all_factors && is_solvable(solve_mod(ResidueMatrix(mm, f.modulus),
                                                         ResidueVector(bb, f.modulus)));
    CHECK(is_solvable(solve_mod(ResidueMatrix(mm, q), ResidueVector(bb, q))) == all_factors);
  }
}
