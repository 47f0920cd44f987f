// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
// Usage: acceptance [path-to-qcgeom-cli]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qcgeom/certify.hpp"
#include "qcgeom/cli.hpp"
#include "qcgeom/code_file.hpp"
#include "qcgeom/errors.hpp"
#include "qcgeom/families.hpp"

using namespace qcgeom;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr double kPathBetaLow = 0.9;
constexpr double kPathBetaHigh = 1.1;
constexpr double kGridBetaLow = 1.5;
constexpr std::size_t kUnionInstances = 500;
constexpr std::size_t kRandomSeeds1 = 50;
constexpr std::size_t kRandomSeeds7 = 30;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::size_t> subset(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; ++q) {
    if (mask >> q & 1u) out.push_back(q);
  }
  return out;
}

Outcome oracle_equivalence() {
  std::vector<StabilizerCode> codes;
  for (std::size_t n = 2; n <= 6; ++n) codes.push_back(repetition_code(n));
  for (std::uint64_t seed = 0; seed < kRandomSeeds1; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const std::size_t window = std::min<std::size_t>(n, 2 + seed % 3);
    const std::size_t weight = 1 + seed % window;
    codes.push_back(random_local_1d(n, window, weight, 1 + seed % n, seed));
  }
  std::size_t sets = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& code = codes[i];
    const std::size_t n = code.num_qubits();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto e = subset(mask, n);
      ++sets;
      if (is_correctable(code, e) != oracle::enumeration_is_correctable(code, e)) {
        return {false, "code " + std::to_string(i) + " disagrees on mask " + std::to_string(mask)};
      }
    }
  }
  return {true, std::to_string(codes.size()) + " codes, " + std::to_string(sets) + " erasure sets, exact"};
}

Outcome distance_ground_truth() {
  struct Case {
    std::string name;
    StabilizerCode code;
    std::size_t expected;
  };
  const std::vector<Case> cases = {{"repetition(3)", repetition_code(3), 1},
                                   {"repetition(8)", repetition_code(8), 1},
                                   {"repetition(16)", repetition_code(16), 1},
                                   {"five_qubit", five_qubit_code(), 3},
                                   {"surface(2)", surface_code(2), 2},
                                   {"surface(3)", surface_code(3), 3}};
  std::string detail;
  for (const auto& c : cases) {
    const auto d = min_distance(c.code);
    if (d.distance != c.expected) {
      return {false, c.name + " gave " + (d.distance ? std::to_string(*d.distance) : "none")};
    }
    detail += (detail.empty() ? "" : " ") + c.name + "=" + std::to_string(*d.distance);
  }
  return {true, detail};
}

Outcome union_lemma_soundness() {
  std::mt19937_64 rng(2024);
  std::size_t instances = 0, issued = 0, multi = 0;
  for (std::uint64_t seed = 0; instances < kUnionInstances; ++seed) {
    const std::size_t n = 4 + seed % 7;
    StabilizerCode code = repetition_code(2);
    try {
      code = random_local_1d(n, 3, 1 + seed % 3, 1 + seed % (n - 1), seed);
    } catch (const GenerationFailure&) {
      continue;
    }
    const auto g = build_connectivity_graph(code);
    std::vector<VertexSet> family;
    std::uniform_int_distribution<Vertex> vertex(0, n - 1);
    for (int tries = 0; tries < 8; ++tries) {
      VertexSet s = ball(g, vertex(rng), static_cast<double>(rng() % 2));
      if (!is_correctable(code, ErasureSet(s))) continue;
      bool separated = true;
      for (const auto& t : family) separated = separated && Distance(2) <= set_distance(g, s, t);
      if (separated) family.push_back(std::move(s));
    }
    if (family.empty()) continue;
    ++instances;
    multi += family.size() > 1;
    const auto result = union_lemma_check(code, g, family);
    if (!result.certified()) continue;
    ++issued;
    if (!oracle::enumeration_is_correctable(code, result.certificate->union_set)) {
      return {false, "certificate contradicted by direct check at seed " + std::to_string(seed)};
    }
  }
  return {issued >= kUnionInstances, std::to_string(instances) + " instances (" + std::to_string(multi) +
                                          " with >1 set), " + std::to_string(issued) +
                                          " certificates, 0 discrepancies"};
}

Outcome bpt_tightness() {
  const auto code = five_qubit_code();
  const auto result = bpt_bound_check(code, build_connectivity_graph(code), {0, 1}, {2, 3}, {4});
  if (!result.certified()) return {false, result.violation->describe()};
  return {*result.k == 1 && result.a3_size == 1,
          "k=" + std::to_string(*result.k) + " <= |A3|=" + std::to_string(result.a3_size)};
}

Outcome path_closed_form() {
  const std::size_t n = 41;
  const auto g = path_graph(n);
  std::size_t checks = 0;
  for (std::size_t R = 1; R <= 10; ++R) {
    for (std::size_t r = 1; r < R; ++r) {
      for (Vertex c = R; c + R < n; ++c) {
        const auto got = covering_number(g, c, static_cast<double>(R), static_cast<double>(r));
        const auto want = oracle::path_cover_closed_form(R, r);
        ++checks;
        if (got != want) {
          return {false, "R=" + std::to_string(R) + " r=" + std::to_string(r) + " center " + std::to_string(c) +
                             ": " + std::to_string(got) + " != " + std::to_string(want)};
        }
      }
    }
  }
  return {true, std::to_string(checks) + " (R, r, center) triples, exact"};
}

Outcome dimension_separation() {
  const std::vector<ScalePair> schedule = {{4, 1}, {6, 2}, {8, 2}, {8, 4}};
  const double path_beta = assouad_fit(path_graph(64), 8, schedule).beta;
  const double grid_beta = assouad_fit(grid_graph(8, 8), 8, schedule).beta;
  std::ostringstream os;
  os << "P64 beta=" << path_beta << ", 8x8 grid beta=" << grid_beta;
  return {kPathBetaLow <= path_beta && path_beta <= kPathBetaHigh && grid_beta >= kGridBetaLow, os.str()};
}

Outcome end_to_end_soundness() {
  std::vector<std::pair<std::string, StabilizerCode>> codes;
  for (std::size_t n : {8u, 12u, 16u, 20u}) codes.emplace_back("repetition(" + std::to_string(n) + ")", repetition_code(n));
  std::size_t random_codes = 0;
  for (std::uint64_t seed = 0; random_codes < kRandomSeeds7 && seed < 1000; ++seed) {
    const std::size_t n = 8 + seed % 9;
    try {
      auto code = random_local_1d(n, 3 + seed % 2, 2 + seed % 2, n / 2 + seed % 4, seed);
      if (code.num_logicals() == 0) continue;
      codes.emplace_back("random_local_1d(seed " + std::to_string(seed) + ")", std::move(code));
      ++random_codes;
    } catch (const GenerationFailure&) {
    }
  }
  codes.emplace_back("five_qubit", five_qubit_code());
  codes.emplace_back("surface(3)", surface_code(3));

  std::size_t certified = 0, chain_checks = 0, not_found = 0;
  for (const auto& [name, code] : codes) {
    const auto outcome = certify_code(code, {.full = true});
    if (!outcome.report) {
      ++not_found;
      continue;
    }
    const auto& report = *outcome.report;
    ++certified;
    const double c = report.decomposition.constant;
    const std::size_t bmax = b_max(outcome.graph, 2 * c);
    const auto d = min_distance(code);
    if (!d.distance || *d.distance > bmax || bmax != report.nagata_bound) {
      return {false, name + ": d=" + (d.distance ? std::to_string(*d.distance) : "none") +
                         " b_max(2c)=" + std::to_string(bmax)};
    }
    if (report.envelope_covers_2c) {
      ++chain_checks;
      const auto formula = static_cast<std::size_t>(
          std::ceil(report.assouad->constant * std::pow(4 * c, report.assouad->beta) - 1e-9));
      if (bmax > formula) {
        return {false, name + ": b_max(2c)=" + std::to_string(bmax) + " > " + std::to_string(formula)};
      }
    }
  }
  return {certified > 0, std::to_string(codes.size()) + " instances, " + std::to_string(certified) +
                             " certified (" + std::to_string(not_found) + " not found), " +
                             std::to_string(chain_checks) + " envelope checks, 0 violations"};
}

Outcome one_dimensional_certification() {
  std::string detail;
  for (std::size_t n : {8u, 16u}) {
    const auto code = repetition_code(n);
    const auto g = build_connectivity_graph(code);
    const auto search = find_nagata_decomposition(g, 1, 2, 2);
    if (!search.found() || search.decomposition->constant != 1.0) {
      return {false, "repetition(" + std::to_string(n) + "): no decomposition at c=1"};
    }
    const auto d = min_distance(code);
    const auto report = nagata_distance_bound(code, g, *search.decomposition, d);
    if (report.bound_value != 5 || *d.distance != 1) {
      return {false, "repetition(" + std::to_string(n) + "): bound " + std::to_string(report.bound_value)};
    }
    detail += "repetition(" + std::to_string(n) + "): c=1 bound=5 >= d=1; ";
  }
  detail.pop_back();
  detail.pop_back();
  return {true, detail};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Outcome determinism(const std::string& cli) {
  const auto dir = fs::temp_directory_path() / "qcgeom_acceptance";
  fs::create_directories(dir);
  std::string detail;
  for (const auto& [name, code] : std::vector<std::pair<std::string, StabilizerCode>>{
           {"rep12", repetition_code(12)}, {"rl14", random_local_1d(14, 3, 2, 7, 5)}, {"surface3", surface_code(3)}}) {
    const auto file = (dir / (name + ".code")).string();
    write_code_file(file, code);
    const std::vector<std::string> args = {"certify", file, "--full", "--seed", "3"};
    std::ostringstream a, b, ea, eb;
    cli_dispatch(args, a, ea);
    cli_dispatch(args, b, eb);
    if (a.str() != b.str() || a.str().empty()) return {false, name + ": in-process runs differ"};
    if (!cli.empty()) {
      const std::string cmd = cli + " certify " + file + " --full --seed 3 2>/dev/null";
      const auto first = capture(cmd);
      const auto second = capture(cmd);
      if (first != second || first != a.str()) return {false, name + ": CLI runs differ"};
    }
  }
  fs::remove_all(dir);
  return {true, cli.empty() ? "3 codes, in-process runs identical" : "3 codes, CLI and in-process runs identical"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"distance ground truth", distance_ground_truth},
      {"union lemma soundness", union_lemma_soundness},
      {"BPT tightness", bpt_tightness},
      {"path covering closed form", path_closed_form},
      {"dimension separation", dimension_separation},
      {"end-to-end soundness", end_to_end_soundness},
      {"1D family certification", one_dimensional_certification},
      {"determinism", [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s %zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
