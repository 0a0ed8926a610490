#pragma once

// Command-line front end: request parsing, dispatch and output formatting.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgd/basep.hpp"
#include "cgd/decomp.hpp"

namespace cgd::cli {

enum class Format { Table, Json };

struct Request {
    std::string command;  // decompose | ytilt | char | quadruple | verify | ses
    Int p = 0;
    Int r = 0;
    Int s = -1;  // -1 when not given
    Int t = 0;
    Format format = Format::Table;
    Int bound = 40;
    std::string kind = "nabla";     // char: nabla | y | tilting | tensor
    std::string method = "solve";   // quadruple: solve | enumerate | recursive
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Set when parsing stopped because help was requested; `text` holds the help message.
struct HelpRequested {
    std::string text;
};

/// Parses argv-style arguments (without the program name). Throws UsageError.
Request parse_request(const std::vector<std::string>& args, HelpRequested* help = nullptr);

/// Exit status: 0 success, 1 verification failure, 2 usage or domain error.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// parse_request + run, with usage errors reported on `err`.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const Decomposition& d);
/// Rebuilds a Decomposition from to_json output; characters are recomputed from the sections.
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace cgd::cli
