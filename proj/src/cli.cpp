#include "qcgeom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "qcgeom/code_file.hpp"
#include "qcgeom/errors.hpp"
#include "qcgeom/families.hpp"
#include "qcgeom/report.hpp"

namespace qcgeom {

namespace {

struct Loaded {
  std::string bytes;
  StabilizerCode code;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open code file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  StabilizerCode code = parse_code_file(bytes);
  return {std::move(bytes), std::move(code)};
}

double parse_radius(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash != std::string::npos) {
    const double num = std::stod(text.substr(0, slash), &used);
    const double den = std::stod(text.substr(slash + 1));
    return num / den;
  }
  const double v = std::stod(text, &used);
  if (used != text.size()) throw InputError("bad radius '" + text + "'");
  return v;
}

std::vector<ScalePair> parse_pairs(const std::string& text) {
  std::vector<ScalePair> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("pair '" + item + "' is not of the form R:r");
    try {
      pairs.push_back({parse_radius(item.substr(0, colon)), parse_radius(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw InputError("pair '" + item + "' is not of the form R:r");
    }
  }
  return pairs;
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw InputError(std::string("invalid ") + what + " '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  out << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + out_path + "'");
    file << text;
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity-graph geometry and distance bounds for stabilizer codes", "qcgeom"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::uint64_t seed = 0;

  auto* graph_cmd = app.add_subcommand("graph", "Connectivity graph statistics and edge list");
  graph_cmd->add_option("file", file, "Code file")->required();
  graph_cmd->add_option("--out", out_path, "Also write the report here");

  std::size_t cap = 8;
  auto* distance_cmd = app.add_subcommand("distance", "Brute-force code distance");
  distance_cmd->add_option("file", file, "Code file")->required();
  distance_cmd->add_option("--cap", cap, "Largest erasure size to search")->check(CLI::PositiveNumber);
  distance_cmd->add_option("--out", out_path, "Also write the report here");

  std::string pairs_text = "2:1,4:1,4:2,6:2,8:2,8:4";
  auto* dimension_cmd = app.add_subcommand("dimension", "Assouad dimension fit from ball covers");
  dimension_cmd->add_option("file", file, "Code file")->required();
  dimension_cmd->add_option("--pairs", pairs_text, "Scale pairs R:r,... (r may be a fraction like 1/2)");
  dimension_cmd->add_option("--seed", seed, "Seed for center sampling on large graphs");
  dimension_cmd->add_option("--out", out_path, "Also write the report here");

  double scale = 2;
  double c_max = 4;
  auto* decompose_cmd = app.add_subcommand("decompose", "Search for a Nagata decomposition with m = 1");
  decompose_cmd->add_option("file", file, "Code file")->required();
  decompose_cmd->add_option("--r", scale, "Separation scale r (>= 2)");
  decompose_cmd->add_option("--cmax", c_max, "Largest constant c tried");
  decompose_cmd->add_option("--out", out_path, "Also write the report here");

  bool full = false;
  auto* certify_cmd = app.add_subcommand("certify", "End-to-end distance bound certificate");
  certify_cmd->add_option("file", file, "Code file")->required();
  certify_cmd->add_flag("--full", full, "Cross-check against brute-force distance");
  certify_cmd->add_option("--seed", seed, "Seed recorded in the report");
  certify_cmd->add_option("--out", out_path, "Also write the report here");

  std::string family;
  std::vector<std::string> params;
  auto* family_cmd = app.add_subcommand("family", "Write a benchmark code file");
  family_cmd->add_option("name", family, "repetition | surface | five_qubit | random_local_1d")->required();
  family_cmd->add_option("params", params,
                         "repetition <n> | surface <L> | five_qubit | random_local_1d <n> <l> <w> <count> <seed>");
  family_cmd->add_option("-o,--output", out_path, "Output code file");

  std::vector<std::string> argv_storage{"qcgeom"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (*graph_cmd) {
      const auto in = load(file);
      const auto g = build_connectivity_graph(in.code);
      Json j = document_header(in.code, in.bytes, 0);
      j["graph"] = graph_stats_json(g, true);
      emit(dump(j), out_path, out);
      return kExitOk;
    }
    if (*distance_cmd) {
      const auto in = load(file);
      Json j = document_header(in.code, in.bytes, 0);
      j["distance"] = distance_json(min_distance(in.code, cap));
      emit(dump(j), out_path, out);
      return kExitOk;
    }
    if (*dimension_cmd) {
      const auto in = load(file);
      const auto pairs = parse_pairs(pairs_text);
      double max_radius = 0;
      for (const auto& p : pairs) max_radius = std::max(max_radius, p.outer);
      const auto g = build_connectivity_graph(in.code);
      Json j = document_header(in.code, in.bytes, seed);
      j["assouad"] = estimate_json(assouad_fit(g, max_radius, pairs, seed));
      emit(dump(j), out_path, out);
      return kExitOk;
    }
    if (*decompose_cmd) {
      const auto in = load(file);
      const auto g = build_connectivity_graph(in.code);
      const auto search = find_nagata_decomposition(g, 1, scale, c_max);
      Json j = document_header(in.code, in.bytes, 0);
      j["decomposition"] = search_json(search);
      emit(dump(j), out_path, out);
      if (!search.found()) {
        err << "not found (heuristic)\n";
        return kExitViolation;
      }
      return kExitOk;
    }
    if (*certify_cmd) {
      const auto in = load(file);
      CertifyOptions options;
      options.full = full;
      options.seed = seed;
      const auto outcome = certify_code(in.code, options);
      emit(dump(certify_document(in.code, in.bytes, options, outcome)), out_path, out);
      if (outcome.status != CertifyStatus::Certified) {
        err << to_string(outcome.status) << "\n";
        return kExitViolation;
      }
      return kExitOk;
    }
    if (*family_cmd) {
      FamilySpec spec;
      spec.family = family;
      auto need = [&](std::size_t count) {
        if (params.size() != count) {
          throw InputError("family " + family + " takes " + std::to_string(count) + " parameter(s)");
        }
      };
      if (family == "repetition" || family == "surface") {
        need(1);
        spec.size = parse_count(params[0], "size");
      } else if (family == "five_qubit") {
        need(0);
      } else if (family == "random_local_1d") {
        need(5);
        spec.size = parse_count(params[0], "n");
        spec.window = parse_count(params[1], "window");
        spec.weight = parse_count(params[2], "weight");
        spec.count = parse_count(params[3], "count");
        spec.seed = parse_count(params[4], "seed");
      } else {
        throw InputError("unknown code family '" + family + "'");
      }
      const std::string text = serialize_code_file(make_family(spec));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file_out(out_path, std::ios::binary);
        if (!file_out) throw InputError("cannot write '" + out_path + "'");
        file_out << text;
      }
      return kExitOk;
    }
  } catch (const NoLogicalQubits& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GenerationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qcgeom
