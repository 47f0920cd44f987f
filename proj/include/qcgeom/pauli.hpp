#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qcgeom/bitvec.hpp"

namespace qcgeom {

// n-qubit Pauli operator up to phase, stored as its X and Z bit vectors.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
  PauliOperator(BitVec x_bits, BitVec z_bits);

  // Parses a string over {I, X, Y, Z}; lowercase is accepted.
  static PauliOperator from_string(std::string_view text);

  std::size_t num_qubits() const { return x_.size(); }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }

  bool x(std::size_t q) const { return x_.get(q); }
  bool z(std::size_t q) const { return z_.get(q); }
  char at(std::size_t q) const;
  void set(std::size_t q, char pauli);

  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  bool is_identity() const { return !x_.any() && !z_.any(); }

  // Tensor factor on the given qubits, in the order listed.
  PauliOperator restricted_to(const std::vector<std::size_t>& qubits) const;

  // Concatenated (x | z) vector of length 2n.
  BitVec symplectic_vector() const;

  std::string to_string() const;

  PauliOperator& operator*=(const PauliOperator& other);
  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  BitVec x_;
  BitVec z_;
};

// 0 iff p and q commute: sum_i p.x[i] q.z[i] + p.z[i] q.x[i] mod 2.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);

inline bool commute(const PauliOperator& p, const PauliOperator& q) {
  return symplectic_product(p, q) == 0;
}

}  // namespace qcgeom
