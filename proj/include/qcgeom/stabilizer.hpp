#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "qcgeom/pauli.hpp"

namespace qcgeom {

// Stabilizer code given by a list of mutually commuting generators.
// Immutable after construction; safe to share between threads.
class StabilizerCode {
 public:
  // Throws InvalidCode if two generators anticommute or one is the identity,
  // DimensionMismatch if a generator is not on n qubits.
  StabilizerCode(std::size_t n, std::vector<PauliOperator> generators);

  static StabilizerCode from_strings(std::size_t n, std::initializer_list<const char*> generators);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return generators_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_logicals() const { return n_ - rank_; }

  // p lies in the stabilizer group (up to phase).
  bool contains(const PauliOperator& p) const;
  bool commutes_with_all(const PauliOperator& p) const;

 private:
  std::size_t n_;
  std::vector<PauliOperator> generators_;
  std::vector<BitVec> basis_;  // reduced symplectic rows spanning the group
  std::size_t rank_ = 0;
};

// First anticommuting pair (i < j) of the list, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_anticommuting_pair(
    const std::vector<PauliOperator>& generators);

// Subset of qubits, kept sorted and duplicate free.
class ErasureSet {
 public:
  ErasureSet() = default;
  ErasureSet(std::vector<std::size_t> qubits);  // NOLINT: implicit by intent
  ErasureSet(std::initializer_list<std::size_t> qubits)
      : ErasureSet(std::vector<std::size_t>(qubits)) {}

  const std::vector<std::size_t>& qubits() const { return qubits_; }
  std::size_t size() const { return qubits_.size(); }
  bool empty() const { return qubits_.empty(); }
  bool contains(std::size_t q) const;
  auto begin() const { return qubits_.begin(); }
  auto end() const { return qubits_.end(); }

  friend bool operator==(const ErasureSet&, const ErasureSet&) = default;

 private:
  std::vector<std::size_t> qubits_;
};

// k = n - rank of the generator matrix.
std::size_t logical_count(const StabilizerCode& code);

// True iff no logical operator (centralizer element outside the group) is
// supported inside e. Decided by rank arithmetic:
//   dim{Paulis on e commuting with S} = 2|e| - rank(S|e)
//   dim{elements of S supported on e} = rank(S) - rank(S|complement)
// and e is correctable iff the two agree.
bool is_correctable(const StabilizerCode& code, const ErasureSet& e);

// A logical operator supported inside e, or nullopt when e is correctable.
std::optional<PauliOperator> logical_supported_on(const StabilizerCode& code, const ErasureSet& e);

struct DistanceResult {
  std::optional<std::size_t> distance;  // nullopt: exceeds the cap
  ErasureSet witness_set;               // first non-correctable set found
  std::optional<PauliOperator> witness_logical;
  std::size_t weight_cap = 0;
  std::size_t sets_checked = 0;

  bool exceeds_cap() const { return !distance.has_value(); }
};

// Smallest non-correctable erasure set, scanning sets lexicographically in
// increasing cardinality up to weight_cap (0 means n). Throws NoLogicalQubits
// when k = 0.
DistanceResult min_distance(const StabilizerCode& code, std::size_t weight_cap = 0);

}  // namespace qcgeom
