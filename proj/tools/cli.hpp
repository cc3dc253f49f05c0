// Command-line front end, callable in-process for tests.

#ifndef IWAHORI_TOOLS_CLI_HPP_
#define IWAHORI_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "iwahori/group.hpp"

namespace iwahori::cli {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kInputError = 2, kCapExceeded = 3, kNotFinite = 4 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "t=1,0 w=1,2 tor=0": lattice coordinates, 1-based finite word, torsion
// index. Omitted keys default to zero / empty.
ExtAffineElement parse_element_spec(const IwahoriWeylGroup& g, const std::string& spec);

// "1,2" -> {1, 2}; "" or "none" -> {}.
std::vector<int> parse_index_list(const std::string& text);

}  // namespace iwahori::cli

#endif  // IWAHORI_TOOLS_CLI_HPP_
