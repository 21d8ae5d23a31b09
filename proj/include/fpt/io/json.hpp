#pragma once

#include "fpt/fock.hpp"
#include "fpt/functional.hpp"
#include "fpt/infdiv.hpp"
#include "fpt/limits.hpp"
#include "fpt/nc_partition.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>

namespace fpt::io {

using Json = nlohmann::ordered_json;

/// A functional file holds either kind.
using AnyFunctional = std::variant<MomentFunctional, CumulantFunctional>;

/// {"vars", "order", "kind", "table"} with words as space-separated names in
/// layout order and values as "p/q" strings. The empty word is omitted.
Json to_json(const MomentFunctional& mf);
Json to_json(const CumulantFunctional& cf);

/// Throws StructuralError on a missing or unknown word, a wrong kind, or a
/// malformed table; ValidationError on a bad rational.
AnyFunctional functional_from_json(const Json& j);
MomentFunctional moments_from_json(const Json& j);
CumulantFunctional cumulants_from_json(const Json& j);

/// Moments as-is, or cumulants transformed to moments (and vice versa).
MomentFunctional as_moments(const AnyFunctional& f);
CumulantFunctional as_cumulants(const AnyFunctional& f);

Json to_json(const ConvergenceReport& report);
Json to_json(const InfDivReport& report, const Alphabet& names);
Json to_json(const LevyReport& report);
Json fock_summary(const FockModel& model);
Json partitions_json(int n, const std::vector<NcPartition>& partitions);
Json mobius_json(int n, const PartitionTable& table);

/// Throws IoError when the file cannot be read or is not JSON.
Json read_json(const std::filesystem::path& path);
/// Writes the document followed by a newline. Throws IoError on failure.
void write_json(const std::filesystem::path& path, const Json& j);
std::string read_text(const std::filesystem::path& path);

}  // namespace fpt::io
