#ifndef GRSC_REPORT_JSON_HPP
#define GRSC_REPORT_JSON_HPP

#include <string>

#include "json.hpp"

#include "grsc/conditions.hpp"
#include "grsc/geometry.hpp"
#include "grsc/presentation.hpp"
#include "grsc/solver.hpp"

namespace grsc {

using Json = nlohmann::ordered_json;

/// The stable report envelope every CLI run emits: schema version, tool
/// version, the full run config, a timestamp, and the payload. Reports are
/// byte-identical across runs up to the timestamp field.
Json report_envelope(const std::string& subcommand, Json config, Json report);

Json json_of(const Rational& r);
Json json_of(const Alphabet& a, const Word& w);
Json json_of(const Alphabet& a, const ConditionReport& r);
Json json_of(const Alphabet& a, const PieceReport& r);
Json json_of(const Presentation& p);
Json json_of(const Alphabet& a, const Classification& c);
Json json_of(const Presentation& p, const WordVerdict& v);
Json json_of(const EmbeddingReport& r);
Json json_of(const SparseCheckResult& r);
Json json_of(const LacunaryReport& r);
Json json_of(const DiagramReport& r);

}  // namespace grsc

#endif
