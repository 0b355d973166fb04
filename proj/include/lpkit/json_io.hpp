#ifndef LPKIT_JSON_IO_HPP
#define LPKIT_JSON_IO_HPP

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "lpkit/cyclic.hpp"
#include "lpkit/lamperti.hpp"
#include "lpkit/laurent.hpp"
#include "lpkit/specconf.hpp"

namespace lpkit::io {

using json = nlohmann::json;

// All readers throw SchemaError on malformed documents.
json read_file(const std::string& path);

// [re, im] or a bare real number.
Complex parse_complex(const json& j);
json to_json(Complex z);

// Number of turns, or an exact fraction written as "p/q".
Angle parse_angle(const json& j);

// {"n": 2, "xi": [[1, 0], [0, 1]]}; n is optional but must match.
CyclicElement parse_cyclic(const json& j);
json to_json(const CyclicElement& x);

// {"terms": [{"m": 0, "a": [1, 0]}, ...]}
LaurentPolynomial parse_laurent(const json& j);
json to_json(const LaurentPolynomial& f);

// {"finite": {"2": {"points": [0, 0.5], "arcs": [[a, b]], "full": false}},
//  "infinity": "empty" | "full", "tail": "none" | "full" | "roots"}
// An arc [a, b] runs counterclockwise from a to b.
ArcSet parse_arcset(const json& j);
json to_json(const ArcSet& s);
SpectralConfiguration parse_configuration(const json& j);
json to_json(const SpectralConfiguration& s);

// {"weights": [..], "h": [[re, im], ..], "T": [..], "aperiodic": false}
SpatialIsometry parse_isometry(const json& j);
json to_json(const SpatialIsometry& v);

// {"matrix": [[[re, im], ...], ...] (rows), "weights": [..] (optional, default 1)}
std::pair<CMatrix, AtomicSpace> parse_matrix(const json& j);

json to_json(const NormEstimate& e);
json to_json(const PeriodDecomposition& d);

}  // namespace lpkit::io

#endif  // LPKIT_JSON_IO_HPP
