#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"

#include "liftable/analysis.hpp"

namespace liftable::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

/// Runs one command line (args excludes the program name).  Exit codes: 0 success,
/// 1 usage error, 2 the input data set failed validation or could not be parsed.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string render_report(const AnalysisReport& report, const NormalizerPair* nc, Format format);

Json to_json(const DataSet& d);
Json to_json(const ValidationReport& v);
Json to_json(const Word& w, std::span<const std::string> names);
Json to_json(const Presentation& p);
Json to_json(const StabilizerReport& s);
Json to_json(const SubgroupPresentation& s);
Json to_json(const IrreducibleClass& c);
Json to_json(const NormalizerSpec& s);
Json to_json(const AnalysisReport& r, const NormalizerPair* nc);
Json to_json(const MatrixVerification& v);
Json to_json(const std::vector<TableRow>& rows);

}  // namespace liftable::cli
