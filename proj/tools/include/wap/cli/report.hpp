#pragma once

#include <string>

#include "json.hpp"
#include "wap/analysis.hpp"
#include "wap/deciders.hpp"
#include "wap/rational.hpp"
#include "wap/subshift.hpp"
#include "wap/words.hpp"

namespace wap::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { json, text };

/// Exact numbers only: rationals become "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const ParikhVector& v);
Json to_json(const WitnessReport& w);
Json to_json(const MorphismMatrix& m);
Json to_json(const WapCertificate& c);
Json to_json(const BoundedWapVerdict& v);
Json to_json(const OrbitLevel& level);

/// A fresh report carrying the schema version and the command name.
Json make_report(const std::string& command);

/// JSON is pretty-printed; text flattens the tree into "path: value" lines.
std::string render(const Json& report, ReportFormat format);

}  // namespace wap::cli
