#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubemob/audit.hpp"
#include "cubemob/cache.hpp"
#include "cubemob/census.hpp"

namespace cubemob {

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& text);  // throws on unknown format

// A report carries its canonical JSON body plus a tabular projection for
// the csv and table modes. JSON output is key-sorted and byte-stable.
struct Report {
  std::string title;
  nlohmann::json body;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string emit(const Report& report, Format format);

Report faces_report(int n);
Report subalgebras_report(int n);
Report census_report(int n, const CensusOptions& options);
Report mobius_report(int n, Cache& cache);
Report derangements_report(int n, DerangementMethod method, int jobs);
Report audit_report(int n, const AuditOptions& options);

// JSON codecs for the structural values (External interface schemas).
nlohmann::json subalgebra_to_json(const MRSubalgebra& alg);
MRSubalgebra subalgebra_from_json(const nlohmann::json& j);
nlohmann::json locator_to_json(const LocatorPair& pair);
LocatorPair locator_from_json(const nlohmann::json& j);

// Integers are emitted as JSON numbers when they fit in 64 bits, otherwise
// as decimal strings.
nlohmann::json bigint_to_json(const BigInt& value);

}  // namespace cubemob
