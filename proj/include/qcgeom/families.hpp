#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qcgeom/stabilizer.hpp"

namespace qcgeom {

// Z_i Z_{i+1} for i = 0 .. n-2.
StabilizerCode repetition_code(std::size_t n);

// Planar surface code with open boundaries on L^2 + (L-1)^2 qubits.
StabilizerCode surface_code(std::size_t L);

// [[5,1,3]] code generated by the cyclic shifts of XZZXI.
StabilizerCode five_qubit_code();

// `count` random weight-w generators, each inside a window of `window`
// consecutive qubits, rejection-sampled so they pairwise commute.
// Deterministic in `seed`. Throws GenerationFailure after 10^4 rejected
// draws for a single generator.
StabilizerCode random_local_1d(std::size_t n, std::size_t window, std::size_t weight,
                               std::size_t count, std::uint64_t seed);

inline constexpr std::size_t kRejectionBudget = 10000;

// Counter-based generator: output i is splitmix64(seed, i). Independent of
// the standard library's distribution implementations.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Family dispatch by name: "repetition", "surface", "five_qubit", "random_local_1d".
struct FamilySpec {
  std::string family;
  std::size_t size = 0;    // n, or L for the surface code
  std::size_t window = 0;  // random family only
  std::size_t weight = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

StabilizerCode make_family(const FamilySpec& spec);

}  // namespace qcgeom
