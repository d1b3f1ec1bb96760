#pragma once

#include "cliffspec/geometry.hpp"
#include "cliffspec/pauli.hpp"
#include "cliffspec/witness.hpp"

#include <string>

namespace cliffspec {

/// Parses the strict triple format: an object with exactly the keys
/// "A1", "A2", "A3", each a 2x2 array of {"re": number, "im": number}.
/// Extra keys, missing keys and non-finite numbers are validation errors;
/// malformed JSON reports line and column.
HermitianTriple parse_triple_json(const std::string& text);

/// Reads and parses a triple file; errors mention the path.
HermitianTriple load_triple(const std::string& path);

std::string triple_to_json(const HermitianTriple& t);

// Report serializers used by the command line front end (two-space
// indented, stable field names).
std::string decompose_report_json(const HermitianTriple& t, const CanonicalParams& p);
std::string witness_report_json(const WitnessResult& w);
std::string classification_report_json(const SpectrumClassification& c, const Vec3& center);

} // namespace cliffspec
