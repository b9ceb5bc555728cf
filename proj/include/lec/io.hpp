#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lec/bipartite.hpp"
#include "lec/discharging.hpp"
#include "lec/solver.hpp"

namespace lec {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed input. `where` is "line:column" for syntax errors and a field
/// path such as "edges[3][1]" for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Reads a whole file; "-" reads stdin.
std::string read_text(const std::string& path);

/// Vertex ids may be any distinct integers; they are renumbered densely in
/// the order listed. Lists default to {1..Delta+t} when "lists" is absent.
ProblemInstance parse_instance(std::string_view text);
ProblemInstance instance_from_json(const json& doc);
ProblemInstance load_instance(const std::string& path);

json to_json(const ProblemInstance& instance);
std::string dump_instance(const ProblemInstance& instance);

/// {"format":1,"colouring":{edge-id:colour}}; unlisted edges stay uncoloured.
FullColouring parse_colouring(std::string_view text, int num_edges);
json to_json(const FullColouring& col);

json to_json(const SolveOutcome& outcome);
json to_json(const BipartiteOutcome& outcome);
json to_json(const Verdict& verdict);
json to_json(const AuditReport& report);

}  // namespace lec
