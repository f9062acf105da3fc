#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zerograph/metrics.hpp"
#include "zerograph/table_json.hpp"

using namespace zerograph;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_one_line(img);
}

}  // namespace

TEST_CASE("faithful characters") {
  // S4: everything non-linear except the degree-2 row, whose kernel
  // contains the (2,2) class
  SnTable t4 = char_table_sn(4);
  auto faithful = faithful_characters(to_char_table(t4));
  std::vector<std::size_t> expect = {
      static_cast<std::size_t>(t4.row_index(Partition({3, 1}))),
      static_cast<std::size_t>(t4.row_index(Partition({2, 1, 1})))};
  std::sort(expect.begin(), expect.end());
  CHECK(faithful == expect);

  // S5: every character of degree > 1
  SnTable t5 = char_table_sn(5);
  auto f5 = faithful_characters(to_char_table(t5));
  std::vector<std::size_t> expect5;
  for (std::size_t r = 0; r < t5.rows.size(); ++r)
    if (t5.degrees[r] > 1) expect5.push_back(r);
  CHECK(f5 == expect5);

  // the trivial character is never faithful on a nontrivial group
  CharTable s3 = to_char_table(char_table_sn(3));
  for (std::size_t i : faithful_characters(s3)) CHECK(s3.characters[i].degree > 1);
}

TEST_CASE("metric distances on S3") {
  SnTable t = char_table_sn(3);
  int chi = t.row_index(Partition({2, 1}));
  Permutation id = Permutation::identity(3);
  Permutation transposition = Permutation::from_cycles(3, {{1, 2}});
  Permutation threecycle = Permutation::from_cycles(3, {{1, 2, 3}});
  CHECK(metric_sq_distance(t, chi, id, id) == 0);
  CHECK(metric_sq_distance(t, chi, id, transposition) == 4);
  CHECK(metric_sq_distance(t, chi, id, threecycle) == 6);
}

TEST_CASE("metric partition blocks") {
  CharTable s3 = to_char_table(char_table_sn(3));
  SnTable t3 = char_table_sn(3);
  MetricPartition p = metric_partition(s3, t3.row_index(Partition({2, 1})));
  CHECK(p.blocks.size() == 3);

  // S8: the zero block of chi^{(6,2)} contains (5,1,1,1) and (5,2,1)
  SnTable t8 = char_table_sn(8);
  CharTable s8 = to_char_table(t8);
  int chi = t8.row_index(Partition({6, 2}));
  MetricPartition p8 = metric_partition(s8, chi);
  int b1 = p8.block_of[t8.col_index(Partition({5, 1, 1, 1}))];
  int b2 = p8.block_of[t8.col_index(Partition({5, 2, 1}))];
  CHECK(b1 == b2);
  CHECK(p8.block_values[b1] == ExactValue(Int(20)));  // chi(1) - 0
}

TEST_CASE("pairwise non-equivalence of faithful metrics") {
  for (int n = 3; n <= 9; ++n) {
    VerificationReport rep = verify_theorem_6_1(char_table_sn(n));
    CHECK(rep.pass());
  }
  CHECK_THROWS_AS(verify_theorem_6_1(char_table_sn(2)), std::invalid_argument);
}

TEST_CASE("explicit separating permutations at n = 8") {
  SnTable t = char_table_sn(8);
  Permutation sigma1 = Permutation::from_cycles(8, {{1, 2, 3, 4, 5}});
  Permutation sigma2 = sigma1 * Permutation::from_cycles(8, {{6, 7}});
  CHECK(sigma1.cycle_type() == Partition({5, 1, 1, 1}));
  CHECK(sigma2.cycle_type() == Partition({5, 2, 1}));
  int c62 = t.row_index(Partition({6, 2}));
  int c611 = t.row_index(Partition({6, 1, 1}));
  CHECK(t.values[c62][t.col_index(sigma1.cycle_type())] == 0);
  CHECK(t.values[c62][t.col_index(sigma2.cycle_type())] == 0);
  CHECK(t.values[c611][t.col_index(sigma1.cycle_type())] == 1);
  CHECK(t.values[c611][t.col_index(sigma2.cycle_type())] == -1);

  CharTable ct = to_char_table(t);
  MetricPartition p62 = metric_partition(ct, c62);
  MetricPartition p611 = metric_partition(ct, c611);
  int k = t.col_index(sigma1.cycle_type()), l = t.col_index(sigma2.cycle_type());
  CHECK(p62.block_of[k] == p62.block_of[l]);
  CHECK(p611.block_of[k] != p611.block_of[l]);
}

TEST_CASE("bi-invariance and identity of indiscernibles") {
  std::mt19937_64 rng(23);
  for (int n : {4, 5}) {
    SnTable t = char_table_sn(n);
    CharTable ct = to_char_table(t);
    auto faithful = faithful_characters(ct);
    REQUIRE(!faithful.empty());
    int chi = static_cast<int>(faithful[0]);
    for (int rep = 0; rep < 60; ++rep) {
      Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
      Int d = metric_sq_distance(t, chi, a, b);
      CHECK(metric_sq_distance(t, chi, c * a, c * b) == d);
      CHECK(metric_sq_distance(t, chi, a * c, b * c) == d);
      CHECK(metric_sq_distance(t, chi, b, a) == d);
    }
  }
  // d(a,b) = 0 iff a = b, exhaustively over S4 for every faithful row
  SnTable t4 = char_table_sn(4);
  std::vector<Permutation> all;
  std::vector<int> img = {1, 2, 3, 4};
  do {
    all.push_back(Permutation::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  for (std::size_t chi : faithful_characters(to_char_table(t4)))
    for (const auto& a : all)
      for (const auto& b : all) {
        bool zero = metric_sq_distance(t4, static_cast<int>(chi), a, b) == 0;
        CHECK(zero == (a == b));
      }
}

TEST_CASE("triangle inequality via interval arithmetic") {
  // decidable toy cases first
  CHECK(sqrt_leq_sqrt_plus_sqrt(Rat(4), Rat(1), Rat(1)));        // 2 = 1 + 1 tie
  CHECK(sqrt_leq_sqrt_plus_sqrt(Rat(2), Rat(2), Rat(0)));        // tie with z = 0
  CHECK_FALSE(sqrt_leq_sqrt_plus_sqrt(Rat(9), Rat(1), Rat(1)));  // 3 > 2
  CHECK(sqrt_leq_sqrt_plus_sqrt(Rat(2), Rat(1), Rat(1)));

  std::mt19937_64 rng(29);
  for (int n : {5, 6}) {
    SnTable t = char_table_sn(n);
    auto faithful = faithful_characters(to_char_table(t));
    for (int rep = 0; rep < 40; ++rep) {
      Permutation a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
      for (std::size_t chi : faithful) {
        Rat x{metric_sq_distance(t, static_cast<int>(chi), a, b)};
        Rat y{metric_sq_distance(t, static_cast<int>(chi), a, c)};
        Rat z{metric_sq_distance(t, static_cast<int>(chi), c, b)};
        CHECK(sqrt_leq_sqrt_plus_sqrt(x, y, z));
      }
    }
  }
}
