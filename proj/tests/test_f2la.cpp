#include <doctest.h>

#include <random>
#include <vector>

#include "hfsplice/error.hpp"
#include "hfsplice/f2la.hpp"
#include "support/dense_oracle.hpp"
#include "support/random_complexes.hpp"

using namespace hfs::f2la;

namespace {

oracle::Dense to_dense(const F2Matrix& m) {
  auto d = oracle::zeros(m.rows(), m.cols());
  for (const auto& [r, c] : m.entries()) d[r][c] = 1;
  return d;
}

BitVector bits(std::initializer_list<int> values) {
  BitVector v(values.size());
  std::size_t i = 0;
  for (int b : values) v.set(i++, b != 0);
  return v;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  const std::vector<Entry> one_row{{0, 0}, {0, 1}};
  CHECK(rank(F2Matrix::from_entries(2, 2, one_row)) == 1);
  CHECK(rank(F2Matrix(3, 5)) == 0);
  CHECK(rank(F2Matrix(0, 4)) == 0);
  CHECK(rank(F2Matrix::identity(3)) == 3);
}

TEST_CASE("from_entries rejects bad positions") {
  const std::vector<Entry> outside{{2, 0}};
  const std::vector<Entry> repeated{{0, 0}, {0, 0}};
  CHECK_THROWS_AS(F2Matrix::from_entries(2, 2, outside), hfs::InputError);
  CHECK_THROWS_AS(F2Matrix::from_entries(2, 2, repeated), hfs::InputError);
}

TEST_CASE("solve") {
  SUBCASE("identity") {
    auto x = solve(F2Matrix::identity(3), BitVector::unit(3, 0));
    REQUIRE(x);
    CHECK(*x == BitVector::unit(3, 0));
  }
  SUBCASE("zero matrix, nonzero rhs") { CHECK_FALSE(solve(F2Matrix(2, 2), BitVector::unit(2, 1))); }
  SUBCASE("kernel ambiguity") {
    const std::vector<Entry> e{{0, 0}, {0, 1}};
    const auto m = F2Matrix::from_entries(1, 2, e);
    auto x = solve(m, BitVector(1));
    REQUIRE(x);
    CHECK(m.apply(*x) == BitVector(1));
  }
  SUBCASE("wrong length") { CHECK_THROWS_AS(solve(F2Matrix(2, 2), BitVector(3)), hfs::InputError); }
}

TEST_CASE("homology of small complexes") {
  SUBCASE("zero differential") { CHECK(homology(F2Matrix(3, 3)).rank() == 3); }
  SUBCASE("cone of identity") {
    F2Matrix d(2, 2);
    d.set(1, 0);  // d(x) = y
    CHECK(homology(d).rank() == 0);
  }
  SUBCASE("C1(1) of the trefoil, written out by hand") {
    // Basis: x_w | m_u m_v m_w | y_u y_v y_w.
    F2Matrix d(7, 7);
    d.set(3, 0);  // x_w -> m_w
    d.set(2, 1);  // m_u -> m_v
    d.set(1, 4);  // y_u -> m_u
    d.set(5, 4);  // y_u -> y_v
    d.set(2, 5);  // y_v -> m_v
    d.set(3, 6);  // y_w -> m_w
    CHECK(rank(d) == 3);
    const auto h = homology(d);
    CHECK(h.rank() == 1);
    // The class is represented by x_w + y_w.
    BitVector xw_yw(7);
    xw_yw.set(0);
    xw_yw.set(6);
    auto coords = h.coordinates(xw_yw);
    REQUIRE(coords);
    CHECK(coords->test(0));
  }
  SUBCASE("rejects d^2 != 0") {
    F2Matrix d(3, 3);
    d.set(1, 0);
    d.set(2, 1);
    CHECK_THROWS_AS(homology(d), hfs::InvariantError);
  }
  SUBCASE("rejects non-square") { CHECK_THROWS_AS(homology(F2Matrix(2, 3)), hfs::InvariantError); }
}

TEST_CASE("presentation invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = testing_support::random_f2_complex(rng, 1 + trial % 40);
    const auto h = homology(c.d);
    for (const auto& rep : h.cycle_reps()) CHECK(c.d.apply(rep).none());
    EchelonBasis span(c.d.rows(), 0);
    for (const auto& b : h.boundary_basis()) CHECK(span.insert(b, BitVector(0)));
    for (const auto& rep : h.cycle_reps()) CHECK(span.insert(rep, BitVector(0)));
    CHECK(h.rank() == c.d.rows() - 2 * rank(c.d));
  }
}

TEST_CASE("homology rank agrees with the dense oracle up to dimension 64") {
  std::mt19937_64 rng(2024);
  for (std::size_t n = 0; n <= 64; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      const auto c = testing_support::random_f2_complex(rng, n);
      const auto dense = to_dense(c.d);
      REQUIRE(oracle::is_zero(oracle::multiply(dense, dense)));
      CHECK(homology(c.d).rank() == oracle::homology_rank(dense));
      CHECK(homology(c.d).rank() == c.expected_homology);
    }
  }
}

TEST_CASE("rank agrees with the dense oracle on arbitrary matrices") {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 17, cols = 1 + (trial * 7) % 23;
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (coin(rng)) m.set(r, c);
    CHECK(rank(m) == oracle::rank(to_dense(m)));
    CHECK(rank(m) == rank(m.transpose()));
    const auto ker = kernel_basis(m);
    CHECK(ker.size() + rank(m) == cols);
    for (const auto& v : ker) CHECK(m.apply(v).none());
  }
}

TEST_CASE("class bases are deterministic") {
  std::mt19937_64 a(99), b(99);
  const auto ca = testing_support::random_f2_complex(a, 30);
  const auto cb = testing_support::random_f2_complex(b, 30);
  CHECK(homology(ca.d).cycle_reps() == homology(cb.d).cycle_reps());
}

TEST_CASE("induced maps") {
  std::mt19937_64 rng(3);
  const auto c = testing_support::random_f2_complex(rng, 12);
  const auto h = homology(c.d);

  SUBCASE("identity") { CHECK(induced_map(F2Matrix::identity(12), h, h) == F2Matrix::identity(h.rank())); }
  SUBCASE("zero") { CHECK(induced_map(F2Matrix(12, 12), h, h).is_zero()); }
  SUBCASE("non chain map rejected") {
    F2Matrix d(2, 2);
    d.set(1, 0);
    const auto hd = homology(d);
    F2Matrix f(2, 2);
    f.set(0, 0);
    CHECK_THROWS_AS(induced_map(f, hd, hd), hfs::InvariantError);
  }
}

TEST_CASE("induced map of a composition is the product") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = testing_support::random_f2_complex(rng, 1 + trial % 20);
    const auto b = testing_support::random_f2_complex(rng, 1 + (trial * 3) % 20);
    const auto c = testing_support::random_f2_complex(rng, 1 + (trial * 5) % 20);
    const auto f = testing_support::random_chain_map(rng, a, b);
    const auto g = testing_support::random_chain_map(rng, b, c);
    REQUIRE(is_chain_map(f, a.d, b.d));
    REQUIRE(is_chain_map(g, b.d, c.d));
    const auto ha = homology(a.d), hb = homology(b.d), hc = homology(c.d);
    CHECK(induced_map(g * f, ha, hc) == induced_map(g, hb, hc) * induced_map(f, ha, hb));
  }
}

TEST_CASE("image_equals_kernel") {
  F2Matrix d(2, 2);
  d.set(1, 0);
  // im d = span(e1) = ker d.
  CHECK(image_equals_kernel(d, d));
  CHECK_FALSE(image_equals_kernel(F2Matrix(2, 2), d));
  CHECK(image_equals_kernel(F2Matrix(2, 0), F2Matrix::identity(2)));
}

TEST_CASE("kronecker product") {
  const auto a = F2Matrix::from_entries(2, 2, std::vector<Entry>{{0, 1}, {1, 1}});
  const auto i2 = F2Matrix::identity(2);
  const auto k = kronecker(a, i2);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 4);
  CHECK(k.entries() == std::vector<Entry>{{0, 2}, {1, 3}, {2, 2}, {3, 3}});
  // Mixed-product rule: (A⊗B)(C⊗D) = AC ⊗ BD.
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.5);
  auto rnd = [&](std::size_t r, std::size_t c) {
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (coin(rng)) m.set(i, j);
    return m;
  };
  const auto A = rnd(3, 4), B = rnd(2, 5), C = rnd(4, 2), D = rnd(5, 3);
  CHECK(kronecker(A, B) * kronecker(C, D) == kronecker(A * C, B * D));
  CHECK(kronecker(F2Matrix(0, 3), B).rows() == 0);
}

TEST_CASE("bit vector basics") {
  auto v = bits({0, 1, 1, 0, 1});
  CHECK(v.count() == 3);
  CHECK(v.first() == std::optional<std::size_t>{1});
  CHECK(v.ones() == std::vector<std::size_t>{1, 2, 4});
  BitVector wide(130);
  wide.set(129);
  CHECK(wide.first() == std::optional<std::size_t>{129});
  CHECK(BitVector(70).none());
}
