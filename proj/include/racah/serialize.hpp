#pragma once

// JSON (de)serialization of representations. Matrices are stored as 2-D
// arrays of exact rational strings "[-]p/q"; the file records the
// column-action convention explicitly.

#include "racah/daha_core.hpp"
#include "racah/racah_core.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace racah {

using Json = nlohmann::ordered_json;

struct RepFile {
  std::string kind;  // "racah" | "daha"
  Eigen::Index dim = 0;
  std::vector<std::pair<std::string, MatQ>> matrices;
  std::optional<ModuleSpec> meta;
};

RepFile to_repfile(const RacahRep& rep);
RepFile to_repfile(const DahaRep& rep);

// Throw std::invalid_argument when the kind or matrix names do not match.
RacahRep racah_from(const RepFile& f);
DahaRep daha_from(const RepFile& f);

Json spec_to_json(const ModuleSpec& spec);
ModuleSpec spec_from_json(const Json& j);

Json repfile_to_json(const RepFile& f);
// Validates the schema: kind, dim, convention, rational entries, sizes.
RepFile repfile_from_json(const Json& j);

void write_repfile(const std::string& path, const RepFile& f);
RepFile read_repfile(const std::string& path);  // throws std::runtime_error on I/O

}  // namespace racah
