#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "topdiff/error.hpp"
#include "topdiff/metrics.hpp"
#include "topdiff/relation.hpp"

namespace topdiff::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDomain = 2;
inline constexpr int kCapacity = 3;

// A file that is not a well-formed document.
class document_error : public error {
 public:
  using error::error;
};

// {"elements":[...], "pairs":[[l,r],...], "reflexive":true}
// With "reflexive" true (the default) the diagonal is implied and omitted
// from "pairs".
Relation parse_relation(std::string_view text);
std::string serialize_relation(const Relation& r);

// Flat {"label": weight} map. Labels missing from the map get weight 1 and
// are listed in `defaulted`.
Measure parse_measure(std::string_view text, const GroundSet& ground,
                      std::vector<std::string>* defaulted = nullptr);

// Shortest decimal that reads back as the same double.
std::string format_number(double value);

// Runs one command line, arguments without the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace topdiff::cli
