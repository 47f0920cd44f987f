#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qcgeom/errors.hpp"
#include "qcgeom/families.hpp"
#include "qcgeom/stabilizer.hpp"
#include "test_support.hpp"

using namespace qcgeom;

TEST(symplectic_product, examples) {
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("XI"), PauliOperator::from_string("ZI")), 1);
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")), 0);
  for (const char* p : {"II", "XY", "ZZ", "YI"}) {
    EXPECT_EQ(symplectic_product(PauliOperator::from_string("II"), PauliOperator::from_string(p)), 0);
  }
  EXPECT_EQ(symplectic_product(PauliOperator::from_string("Y"), PauliOperator::from_string("Z")), 1);
}

TEST(symplectic_product, length_mismatch) {
  EXPECT_THROW(symplectic_product(PauliOperator::from_string("X"), PauliOperator::from_string("XZ")),
               DimensionMismatch);
}

TEST(pauli, support_and_weight) {
  const auto p = PauliOperator::from_string("IXIYZ");
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(p.to_string(), "IXIYZ");
  EXPECT_THROW(PauliOperator::from_string("XQ"), InputError);
}

TEST(logical_count, examples) {
  EXPECT_EQ(logical_count(StabilizerCode::from_strings(3, {"ZZI", "IZZ"})), 1u);
  EXPECT_EQ(logical_count(StabilizerCode(4, {})), 4u);
  EXPECT_EQ(logical_count(five_qubit_code()), 1u);
  // Duplicates and products do not raise the rank.
  EXPECT_EQ(logical_count(StabilizerCode::from_strings(3, {"ZZI", "IZZ", "ZIZ", "ZZI"})), 1u);
}

TEST(stabilizer_code, rejects_anticommuting_pair) {
  try {
    StabilizerCode::from_strings(3, {"ZZI", "XII", "IZZ"});
    FAIL() << "expected InvalidCode";
  } catch (const InvalidCode& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 1u);
  }
}

TEST(stabilizer_code, rejects_identity_and_wrong_length) {
  EXPECT_THROW(StabilizerCode::from_strings(2, {"II"}), InvalidCode);
  EXPECT_THROW(StabilizerCode::from_strings(3, {"ZZ"}), DimensionMismatch);
}

TEST(is_correctable, repetition_single_qubit_is_not) {
  const auto rep = repetition_code(3);
  EXPECT_FALSE(is_correctable(rep, {0}));
  EXPECT_TRUE(oracle::enumeration_is_correctable(rep, {0}) == false);
  const auto logical = logical_supported_on(rep, {0});
  ASSERT_TRUE(logical.has_value());
  EXPECT_TRUE(rep.commutes_with_all(*logical));
  EXPECT_FALSE(rep.contains(*logical));
}

TEST(is_correctable, empty_set) {
  EXPECT_TRUE(is_correctable(five_qubit_code(), {}));
  EXPECT_TRUE(is_correctable(repetition_code(4), {}));
}

TEST(is_correctable, five_qubit_pairs) {
  const auto code = five_qubit_code();
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = a + 1; b < 5; ++b) {
      EXPECT_TRUE(is_correctable(code, {a, b}));
      EXPECT_TRUE(oracle::enumeration_is_correctable(code, {a, b}));
    }
  }
}

TEST(is_correctable, out_of_range) {
  EXPECT_THROW(is_correctable(repetition_code(3), {3}), InputError);
}

TEST(min_distance, examples) {
  for (std::size_t n : {2u, 3u, 5u, 9u}) EXPECT_EQ(min_distance(repetition_code(n)).distance, 1u);
  const auto five = min_distance(five_qubit_code());
  EXPECT_EQ(five.distance, 3u);
  ASSERT_TRUE(five.witness_logical);
  EXPECT_LE(five.witness_logical->weight(), 3u);
  EXPECT_EQ(min_distance(surface_code(3)).distance, 3u);
}

TEST(min_distance, witness_is_first_lexicographic_set) {
  const auto r = min_distance(five_qubit_code());
  EXPECT_EQ(r.witness_set, (ErasureSet{0, 1, 2}));
  // 5 singletons + 10 pairs, then the first triple.
  EXPECT_EQ(r.sets_checked, 16u);
}

TEST(min_distance, cap_and_errors) {
  const auto capped = min_distance(five_qubit_code(), 2);
  EXPECT_TRUE(capped.exceeds_cap());
  EXPECT_EQ(capped.weight_cap, 2u);
  EXPECT_THROW(min_distance(StabilizerCode::from_strings(2, {"ZI", "IZ"})), NoLogicalQubits);
}

TEST(is_correctable_property, monotone_under_subsets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const auto code = fixtures::random_commuting_code(n, 1 + trial % n, rng);
    const auto big = fixtures::random_subset(n, rng, 0.6);
    std::vector<std::size_t> small;
    std::bernoulli_distribution coin(0.5);
    for (auto q : big) {
      if (coin(rng)) small.push_back(q);
    }
    if (is_correctable(code, big)) {
      EXPECT_TRUE(is_correctable(code, small)) << "trial " << trial;
    }
  }
}

TEST(is_correctable_property, agrees_with_enumeration_oracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto code = fixtures::random_commuting_code(n, 1 + trial % (n + 1), rng);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> e;
      for (std::size_t q = 0; q < n; ++q) {
        if (mask >> q & 1u) e.push_back(q);
      }
      ASSERT_EQ(is_correctable(code, e), oracle::enumeration_is_correctable(code, e))
          << "trial " << trial << " mask " << mask;
    }
  }
}

TEST(min_distance_property, invariant_under_generator_row_operations) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + trial % 4;
    const auto code = fixtures::random_commuting_code(n, n - 1, rng);
    if (code.num_logicals() == 0) continue;
    auto gens = code.generators();
    std::uniform_int_distribution<std::size_t> idx(0, gens.size() - 1);
    for (int op = 0; op < 10; ++op) {
      const auto a = idx(rng);
      const auto b = idx(rng);
      if (a == b) continue;
      PauliOperator next = gens[a];
      next *= gens[b];
      if (!next.is_identity()) gens[a] = next;
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    const StabilizerCode other(n, gens);
    ASSERT_EQ(other.rank(), code.rank());
    EXPECT_EQ(min_distance(code).distance, min_distance(other).distance) << "trial " << trial;
  }
}

TEST(min_distance_property, sets_below_distance_are_correctable) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 4;
    const auto code = fixtures::random_commuting_code(n, n - 1 - trial % 2, rng);
    if (code.num_logicals() == 0) continue;
    const std::size_t d = *min_distance(code).distance;
    bool some_bad_at_d = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> e;
      for (std::size_t q = 0; q < n; ++q) {
        if (mask >> q & 1u) e.push_back(q);
      }
      if (e.size() < d) {
        EXPECT_TRUE(is_correctable(code, e));
      }
      if (e.size() == d && !is_correctable(code, e)) some_bad_at_d = true;
    }
    EXPECT_TRUE(some_bad_at_d);
  }
}
