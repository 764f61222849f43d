#ifndef DAVISFORGE_TOOLS_JSON_IO_HPP_
#define DAVISFORGE_TOOLS_JSON_IO_HPP_

#include <json.hpp>

#include <string>

#include "davisforge/chain_complex.hpp"
#include "davisforge/coxeter.hpp"
#include "davisforge/group_action.hpp"
#include "davisforge/pi1.hpp"
#include "davisforge/simplicial_complex.hpp"

// The JSON document formats spoken by the command-line tool.  nlohmann's
// default json type keeps object keys sorted, so every document we emit is
// already canonical; dumping the same data twice gives identical bytes.
namespace dfcli {

using json = nlohmann::json;

// { "vertices": [...], "maximal_simplices": [[...], ...] }
// Readers apply face closure; writers list maximal simplices in canonical
// (dimension, then lexicographic) order.
json complex_to_json(const davisforge::SimplicialComplex& x);
davisforge::SimplicialComplex complex_from_json(const json& j);

// { "group_generators": { name: { vertex: image, ... }, ... } }
// Generators are applied in name order when rebuilding the group.
json action_to_json(const davisforge::SimplicialAction& act);
davisforge::SimplicialAction action_from_json(davisforge::SimplicialComplex complex,
                                              const json& j, long limit);

// { "domain_size": n, "generator_images": { s: [image list], ... } }
// with one image per Coxeter generator, keyed by nerve vertex name.
json quotient_to_json(const davisforge::FiniteQuotient& q);
davisforge::FiniteQuotient quotient_from_json(const davisforge::CoxeterSystem& sys,
                                              const json& j, long limit);

// { "ambient": <complex>, "parts": [ { "name": ..., "complex": <complex> }, ... ] }
davisforge::Cover cover_from_json(const json& j);

// { "generators": [...], "relators": [["a","B","a"], ...] }
// A letter is a generator name; the name with its letters uppercased
// denotes the inverse.
davisforge::Presentation presentation_from_json(const json& j);

// { "betti": b, "torsion": [d1, d2, ...] }.  Torsion orders that fit in 64
// bits are numbers; larger ones are decimal strings.
json group_to_json(const davisforge::GroupSummary& g);

// One entry per degree of the stored range:
// [ { "betti": b, "degree": k, "group": "Z^2 + Z/3", "torsion": [...] }, ... ]
json summary_to_json(const davisforge::HomologySummary& h);

json face_vector_to_json(const davisforge::SimplicialComplex& x);

json parse_file(const std::string& path);  // PARSE_ERROR on bad JSON or I/O
void write_file(const std::string& path, const std::string& bytes);

}  // namespace dfcli

#endif
