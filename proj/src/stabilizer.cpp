#include "qcgeom/stabilizer.hpp"

#include <algorithm>
#include <string>

#include "qcgeom/errors.hpp"

namespace qcgeom {

namespace {

std::vector<BitVec> reduced_basis(const std::vector<PauliOperator>& generators, std::size_t n) {
  std::vector<BitVec> rows;
  for (const auto& g : generators) rows.push_back(g.symplectic_vector());
  std::vector<BitVec> basis;
  std::size_t next = 0;
  for (std::size_t col = 0; col < 2 * n && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
    }
    ++next;
  }
  rows.resize(next);
  return rows;
}

// Generator rows restricted to `qubits`, as (x|z) vectors of length 2|qubits|.
std::vector<BitVec> restricted_rows(const StabilizerCode& code, const std::vector<std::size_t>& qubits) {
  std::vector<BitVec> rows;
  rows.reserve(code.generators().size());
  const std::size_t m = qubits.size();
  for (const auto& g : code.generators()) {
    BitVec row(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      if (g.x(qubits[i])) row.set(i);
      if (g.z(qubits[i])) row.set(m + i);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_in_range(const StabilizerCode& code, const ErasureSet& e) {
  if (!e.empty() && e.qubits().back() >= code.num_qubits()) {
    throw InputError("erasure qubit " + std::to_string(e.qubits().back()) + " out of range for n=" +
                     std::to_string(code.num_qubits()));
  }
}

std::vector<std::size_t> complement(const ErasureSet& e, std::size_t n) {
  std::vector<std::size_t> out;
  out.reserve(n - e.size());
  auto it = e.begin();
  for (std::size_t q = 0; q < n; ++q) {
    if (it != e.end() && *it == q) {
      ++it;
    } else {
      out.push_back(q);
    }
  }
  return out;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_anticommuting_pair(
    const std::vector<PauliOperator>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commute(generators[i], generators[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

StabilizerCode::StabilizerCode(std::size_t n, std::vector<PauliOperator> generators)
    : n_(n), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].num_qubits() != n_) {
      throw DimensionMismatch("generator " + std::to_string(i) + " acts on " +
                              std::to_string(generators_[i].num_qubits()) + " qubits, expected " +
                              std::to_string(n_));
    }
    if (generators_[i].is_identity()) {
      throw InvalidCode("generator " + std::to_string(i) + " is the identity", i, i);
    }
  }
  if (auto bad = find_anticommuting_pair(generators_)) {
    throw InvalidCode("generators " + std::to_string(bad->first) + " and " +
                          std::to_string(bad->second) + " anticommute",
                      bad->first, bad->second);
  }
  basis_ = reduced_basis(generators_, n_);
  rank_ = basis_.size();
}

StabilizerCode StabilizerCode::from_strings(std::size_t n,
                                            std::initializer_list<const char*> generators) {
  std::vector<PauliOperator> gens;
  for (const char* g : generators) gens.push_back(PauliOperator::from_string(g));
  return StabilizerCode(n, std::move(gens));
}

bool StabilizerCode::contains(const PauliOperator& p) const {
  if (p.num_qubits() != n_) throw DimensionMismatch("Pauli length mismatch");
  std::vector<BitVec> rows = basis_;
  rows.push_back(p.symplectic_vector());
  return gf2_rank(std::move(rows)) == rank_;
}

bool StabilizerCode::commutes_with_all(const PauliOperator& p) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const PauliOperator& g) { return commute(g, p); });
}

ErasureSet::ErasureSet(std::vector<std::size_t> qubits) : qubits_(std::move(qubits)) {
  std::sort(qubits_.begin(), qubits_.end());
  qubits_.erase(std::unique(qubits_.begin(), qubits_.end()), qubits_.end());
}

bool ErasureSet::contains(std::size_t q) const {
  return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

std::size_t logical_count(const StabilizerCode& code) { return code.num_logicals(); }

bool is_correctable(const StabilizerCode& code, const ErasureSet& e) {
  check_in_range(code, e);
  if (e.empty()) return true;
  const std::size_t inside_rank = gf2_rank(restricted_rows(code, e.qubits()));
  const std::size_t outside_rank = gf2_rank(restricted_rows(code, complement(e, code.num_qubits())));
  const std::size_t centralizer_dim = 2 * e.size() - inside_rank;
  const std::size_t stabilizer_dim = code.rank() - outside_rank;
  return centralizer_dim == stabilizer_dim;
}

std::optional<PauliOperator> logical_supported_on(const StabilizerCode& code, const ErasureSet& e) {
  check_in_range(code, e);
  if (e.empty()) return std::nullopt;
  const std::size_t m = e.size();
  // Commuting with g|e under the symplectic form is orthogonality to g|e with
  // its x and z halves swapped.
  std::vector<BitVec> swapped;
  for (const auto& row : restricted_rows(code, e.qubits())) {
    BitVec s(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      if (row.get(i)) s.set(m + i);
      if (row.get(m + i)) s.set(i);
    }
    swapped.push_back(std::move(s));
  }
  for (const auto& v : gf2_nullspace(std::move(swapped), 2 * m)) {
    PauliOperator p(code.num_qubits());
    for (std::size_t i = 0; i < m; ++i) {
      const bool xb = v.get(i);
      const bool zb = v.get(m + i);
      p.set(e.qubits()[i], xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
    }
    if (!code.contains(p)) return p;
  }
  return std::nullopt;
}

DistanceResult min_distance(const StabilizerCode& code, std::size_t weight_cap) {
  if (code.num_logicals() == 0) {
    throw NoLogicalQubits("code encodes no logical qubits; distance is undefined");
  }
  const std::size_t n = code.num_qubits();
  if (weight_cap == 0 || weight_cap > n) weight_cap = n;

  DistanceResult result;
  result.weight_cap = weight_cap;
  std::vector<std::size_t> subset;
  for (std::size_t w = 1; w <= weight_cap; ++w) {
    subset.resize(w);
    for (std::size_t i = 0; i < w; ++i) subset[i] = i;
    while (true) {
      ++result.sets_checked;
      ErasureSet e(subset);
      if (!is_correctable(code, e)) {
        result.distance = w;
        result.witness_logical = logical_supported_on(code, e);
        result.witness_set = std::move(e);
        return result;
      }
      // Next combination in lexicographic order.
      std::size_t i = w;
      while (i > 0 && subset[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < w; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return result;
}

}  // namespace qcgeom
