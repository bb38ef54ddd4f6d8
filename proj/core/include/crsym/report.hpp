#pragma once

#include <json.hpp>

#include "crsym/equivalence.hpp"
#include "crsym/symmetry.hpp"

namespace crsym {

using Json = nlohmann::ordered_json;

// Machine-readable report fragments (schema "crsym-report/1"). Field order
// is fixed so identical inputs produce byte-identical documents.
Json report_terms(const WeightedSeries& s);
Json report_invariants(const Hypersurface& M);
Json report_map(const HoloMapPair& m);
Json report_initial_data(const InitialData& d);
Json report_symmetry(const SymmetryGroup& g);
Json report_certificate(const EquivalenceCertificate& c);

Json report_envelope(const std::string& command, int truncation);

// Plain-text rendering of a report document.
std::string render_text(const Json& report);

}  // namespace crsym
