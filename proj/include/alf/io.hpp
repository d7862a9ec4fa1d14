#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "alf/classification.hpp"
#include "alf/error.hpp"
#include "alf/pair.hpp"

namespace alf::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "alf-report/1";

/// Reads a pair description. Throws ParseError with a JSON-pointer location.
PairDescription parse_description(std::string_view text);
PairDescription description_from_json(const Json& doc);

/// Normal form: all four top-level keys, classes in basis order, a bare name
/// for unit classes, "step" only when non-zero.
Json description_to_json(const PairDescription& d);
std::string emit_pair(const PairDescription& d);

/// parse_description followed by build_pair; construction errors are
/// rethrown as ParseError whose cause() is the original kind.
LogPair parse_pair(std::string_view text);

/// {"Z": "1/1", "F": "-2/1", ...} over the full basis, plus "text".
Json class_json(const SurfaceModel& surface, const DivisorClass& d);
Json vector_json(std::span<const Rational> v);

Json aa_report(const LogPair& pair, const Verdict& verdict);
Json classify_report(const LogPair& pair, const Verdict& verdict);
Json verify_report(const VerificationReport& report);
Json error_report(const Error& e);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& doc);

}  // namespace alf::io
