#include "qcgeom/code_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "qcgeom/errors.hpp"

namespace qcgeom {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

StabilizerCode parse_code_file(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<PauliOperator> gens;
  std::vector<std::size_t> lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!n) {
      if (line.substr(0, 2) != "n=") throw InputError(at_line(line_no) + "expected header 'n=<int>'");
      const auto digits = trim(line.substr(2));
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || value == 0) {
        throw InputError(at_line(line_no) + "invalid qubit count '" + std::string(digits) + "'");
      }
      n = value;
      continue;
    }
    if (line.size() != *n) {
      throw InputError(at_line(line_no) + "generator has length " + std::to_string(line.size()) +
                       ", expected " + std::to_string(*n));
    }
    for (char ch : line) {
      if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
        throw InputError(at_line(line_no) + "illegal character '" + std::string(1, ch) + "'");
      }
    }
    PauliOperator p = PauliOperator::from_string(line);
    if (p.is_identity()) throw InputError(at_line(line_no) + "generator is the identity");
    gens.push_back(std::move(p));
    lines.push_back(line_no);
  }
  if (!n) throw InputError("missing header 'n=<int>'");
  if (auto bad = find_anticommuting_pair(gens)) {
    throw InputError("generators on lines " + std::to_string(lines[bad->first]) + " and " +
                     std::to_string(lines[bad->second]) + " do not commute");
  }
  return StabilizerCode(*n, std::move(gens));
}

std::string serialize_code_file(const StabilizerCode& code) {
  std::string out = "n=" + std::to_string(code.num_qubits()) + "\n";
  for (const auto& g : code.generators()) out += g.to_string() + "\n";
  return out;
}

StabilizerCode read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open code file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_file(buf.str());
}

void write_code_file(const std::string& path, const StabilizerCode& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write code file '" + path + "'");
  out << serialize_code_file(code);
}

}  // namespace qcgeom
