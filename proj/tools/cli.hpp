#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gmac/infotheory.hpp"

namespace gmac::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 2 input validation, 3 resource guard, 4 internal error; errors are written
// to `err` as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct InfoQuery {
  bool mutual = false;  // I(a;b|given) when true, H(a|given) otherwise
  VarSet a, b, given;
};

// Parses "I(A;B|C)" or "H(A|B)"; lists are comma separated. InvalidInput on
// malformed text.
InfoQuery parse_info_query(const std::string& text);
double evaluate_info_query(const JointPMF& joint, const InfoQuery& query);

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace gmac::cli
