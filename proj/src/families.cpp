#include "qcgeom/families.hpp"

#include <vector>

#include "qcgeom/errors.hpp"

namespace qcgeom {

std::uint64_t CounterRng::next() {
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

StabilizerCode repetition_code(std::size_t n) {
  if (n < 2) throw InputError("repetition code needs n >= 2");
  std::vector<PauliOperator> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    PauliOperator g(n);
    g.set(i, 'Z');
    g.set(i + 1, 'Z');
    gens.push_back(std::move(g));
  }
  return StabilizerCode(n, std::move(gens));
}

StabilizerCode surface_code(std::size_t L) {
  if (L < 2) throw InputError("surface code needs L >= 2");
  // Sites (i, j) of a (2L-1) x (2L-1) board; data qubits where i + j is even,
  // X checks on even rows and Z checks on odd rows of the remaining sites.
  const std::size_t side = 2 * L - 1;
  std::vector<std::vector<std::size_t>> index(side, std::vector<std::size_t>(side, 0));
  std::size_t n = 0;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      if ((i + j) % 2 == 0) index[i][j] = n++;
    }
  }
  std::vector<PauliOperator> gens;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      if ((i + j) % 2 == 0) continue;
      const char kind = (i % 2 == 0) ? 'X' : 'Z';
      PauliOperator g(n);
      if (i > 0) g.set(index[i - 1][j], kind);
      if (i + 1 < side) g.set(index[i + 1][j], kind);
      if (j > 0) g.set(index[i][j - 1], kind);
      if (j + 1 < side) g.set(index[i][j + 1], kind);
      gens.push_back(std::move(g));
    }
  }
  return StabilizerCode(n, std::move(gens));
}

StabilizerCode five_qubit_code() {
  return StabilizerCode::from_strings(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
}

StabilizerCode random_local_1d(std::size_t n, std::size_t window, std::size_t weight,
                               std::size_t count, std::uint64_t seed) {
  if (!(1 <= weight && weight <= window && window <= n)) {
    throw InputError("random_local_1d needs 1 <= w <= l <= n");
  }
  if (count < 1) throw InputError("random_local_1d needs count >= 1");

  static constexpr char kPaulis[] = {'X', 'Y', 'Z'};
  CounterRng rng(seed);
  std::vector<PauliOperator> gens;
  for (std::size_t g = 0; g < count; ++g) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kRejectionBudget && !placed; ++attempt) {
      const std::size_t start = rng.below(n - window + 1);
      // Partial Fisher-Yates picks `weight` distinct offsets in the window.
      std::vector<std::size_t> offsets(window);
      for (std::size_t i = 0; i < window; ++i) offsets[i] = i;
      PauliOperator p(n);
      for (std::size_t i = 0; i < weight; ++i) {
        std::swap(offsets[i], offsets[i + rng.below(window - i)]);
        p.set(start + offsets[i], kPaulis[rng.below(3)]);
      }
      bool ok = true;
      for (const auto& q : gens) ok = ok && commute(p, q);
      if (ok) {
        gens.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) {
      throw GenerationFailure("random_local_1d: rejection budget exhausted for generator " +
                              std::to_string(g) + " after placing " + std::to_string(gens.size()) +
                              " of " + std::to_string(count));
    }
  }
  return StabilizerCode(n, std::move(gens));
}

StabilizerCode make_family(const FamilySpec& spec) {
  if (spec.family == "repetition") return repetition_code(spec.size);
  if (spec.family == "surface") return surface_code(spec.size);
  if (spec.family == "five_qubit") return five_qubit_code();
  if (spec.family == "random_local_1d") {
    return random_local_1d(spec.size, spec.window, spec.weight, spec.count, spec.seed);
  }
  throw InputError("unknown code family '" + spec.family + "'");
}

}  // namespace qcgeom
