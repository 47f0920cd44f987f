#include "qcgeom/pauli.hpp"

#include <utility>

#include "qcgeom/errors.hpp"

namespace qcgeom {

PauliOperator::PauliOperator(BitVec x_bits, BitVec z_bits)
    : x_(std::move(x_bits)), z_(std::move(z_bits)) {
  if (x_.size() != z_.size()) {
    throw DimensionMismatch("x and z parts must have the same length");
  }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  PauliOperator p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p.set(q, text[q]);
  return p;
}

char PauliOperator::at(std::size_t q) const {
  static constexpr char kNames[] = {'I', 'X', 'Z', 'Y'};
  return kNames[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

void PauliOperator::set(std::size_t q, char pauli) {
  if (q >= num_qubits()) throw InputError("qubit index " + std::to_string(q) + " out of range");
  switch (pauli) {
    case 'I': case 'i': x_.set(q, false); z_.set(q, false); break;
    case 'X': case 'x': x_.set(q, true); z_.set(q, false); break;
    case 'Y': case 'y': x_.set(q, true); z_.set(q, true); break;
    case 'Z': case 'z': x_.set(q, false); z_.set(q, true); break;
    default:
      throw InputError(std::string("illegal Pauli character '") + pauli + "'");
  }
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    if (x(q) || z(q)) out.push_back(q);
  }
  return out;
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  const auto& xw = x_.words();
  const auto& zw = z_.words();
  for (std::size_t i = 0; i < xw.size(); ++i) w += std::popcount(xw[i] | zw[i]);
  return w;
}

PauliOperator PauliOperator::restricted_to(const std::vector<std::size_t>& qubits) const {
  PauliOperator out(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    out.x_.set(i, x(qubits[i]));
    out.z_.set(i, z(qubits[i]));
  }
  return out;
}

BitVec PauliOperator::symplectic_vector() const {
  const std::size_t n = num_qubits();
  BitVec v(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    if (x(q)) v.set(q);
    if (z(q)) v.set(n + q);
  }
  return v;
}

std::string PauliOperator::to_string() const {
  std::string s(num_qubits(), 'I');
  for (std::size_t q = 0; q < num_qubits(); ++q) s[q] = at(q);
  return s;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
  if (other.num_qubits() != num_qubits()) throw DimensionMismatch("Pauli length mismatch");
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionMismatch("symplectic product of Paulis on " + std::to_string(p.num_qubits()) +
                            " and " + std::to_string(q.num_qubits()) + " qubits");
  }
  return (p.x_bits().dot(q.z_bits()) ^ p.z_bits().dot(q.x_bits())) ? 1 : 0;
}

}  // namespace qcgeom
