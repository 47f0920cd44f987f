#pragma once

#include <string>
#include <string_view>

#include "qcgeom/stabilizer.hpp"

namespace qcgeom {

// Text format:
//   n=<int>
//   one generator per line over {I,X,Y,Z}, exactly n characters
// Lines starting with '#' and blank lines are ignored. Errors name the
// offending (1-based) line numbers.
StabilizerCode parse_code_file(std::string_view text);
std::string serialize_code_file(const StabilizerCode& code);

StabilizerCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const StabilizerCode& code);

}  // namespace qcgeom
