#include "json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "davisforge/errors.hpp"

namespace dfcli {

using davisforge::errc;
using davisforge::fail;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(errc::parse_error, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const json& j, const char* where) {
  if (!j.is_string()) fail(errc::parse_error, std::string(where) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_array(const json& j, const char* where) {
  if (!j.is_array()) fail(errc::parse_error, std::string(where) + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(as_string(item, where));
  return out;
}

json bigint_to_json(const davisforge::bigint& d) {
  static const davisforge::bigint lo(std::numeric_limits<long long>::min());
  static const davisforge::bigint hi(std::numeric_limits<long long>::max());
  if (d >= lo && d <= hi) return json(d.convert_to<long long>());
  return json(d.str());
}

}  // namespace

json complex_to_json(const davisforge::SimplicialComplex& x) {
  json j;
  j["vertices"] = x.vertex_names();
  j["maximal_simplices"] = json::array();
  for (const std::vector<std::string>& s : x.maximal_simplices())
    j["maximal_simplices"].push_back(s);
  return j;
}

davisforge::SimplicialComplex complex_from_json(const json& j) {
  std::vector<std::string> vertices = string_array(field(j, "vertices"), "vertices");
  const json& maximal = field(j, "maximal_simplices");
  if (!maximal.is_array())
    fail(errc::parse_error, "maximal_simplices must be an array of simplices");
  std::vector<std::vector<std::string>> simplices;
  simplices.reserve(maximal.size());
  for (const json& s : maximal)
    simplices.push_back(string_array(s, "a simplex"));
  return davisforge::SimplicialComplex::from_maximal(std::move(vertices), simplices);
}

json action_to_json(const davisforge::SimplicialAction& act) {
  const davisforge::FiniteGroup& g = act.group();
  const davisforge::SimplicialComplex& x = act.complex();
  json gens = json::object();
  for (int i = 0; i < g.generator_count(); ++i) {
    const davisforge::Permutation& p = g.permutation(g.generator_element(i));
    json images = json::object();
    for (davisforge::VertexIx v = 0; v < x.vertex_count(); ++v)
      images[x.vertex_name(v)] = x.vertex_name(p[v]);
    gens[g.generator_name(i)] = std::move(images);
  }
  json j;
  j["group_generators"] = std::move(gens);
  return j;
}

davisforge::SimplicialAction action_from_json(davisforge::SimplicialComplex complex,
                                              const json& j, long limit) {
  const json& gens = field(j, "group_generators");
  if (!gens.is_object())
    fail(errc::parse_error, "group_generators must be an object");
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> generators;
  for (const auto& item : gens.items()) {
    if (!item.value().is_object())
      fail(errc::parse_error, "a generator must map vertex names to vertex names");
    std::map<std::string, std::string> vertex_map;
    for (const auto& entry : item.value().items())
      vertex_map[entry.key()] = as_string(entry.value(), "a vertex image");
    generators.emplace_back(item.key(), std::move(vertex_map));
  }
  return davisforge::SimplicialAction::from_generators(std::move(complex), generators,
                                                       limit);
}

json quotient_to_json(const davisforge::FiniteQuotient& q) {
  const davisforge::CoxeterSystem& sys = q.system();
  json images = json::object();
  for (davisforge::VertexIx s = 0; s < sys.generator_count(); ++s) {
    const davisforge::Permutation& p = q.permutation(q.generator_element(s));
    images[sys.generator_name(s)] = p;
  }
  json j;
  j["domain_size"] = q.domain_size();
  j["generator_images"] = std::move(images);
  return j;
}

davisforge::FiniteQuotient quotient_from_json(const davisforge::CoxeterSystem& sys,
                                              const json& j, long limit) {
  const json& size = field(j, "domain_size");
  if (!size.is_number_integer() || size.get<long>() <= 0)
    fail(errc::parse_error, "domain_size must be a positive integer");
  long domain = size.get<long>();
  const json& images = field(j, "generator_images");
  if (!images.is_object())
    fail(errc::parse_error, "generator_images must be an object");
  for (const auto& item : images.items())
    if (sys.nerve().index_of(item.key()) < 0)
      fail(errc::invalid_input, "generator_images names \"" + item.key() +
                                    "\", which is not a Coxeter generator");
  std::vector<davisforge::Permutation> perms;
  perms.reserve(static_cast<std::size_t>(sys.generator_count()));
  for (davisforge::VertexIx s = 0; s < sys.generator_count(); ++s) {
    const std::string& name = sys.generator_name(s);
    if (!images.contains(name))
      fail(errc::invalid_input, "generator_images is missing \"" + name + "\"");
    const json& arr = images.at(name);
    if (!arr.is_array() || static_cast<long>(arr.size()) != domain)
      fail(errc::parse_error,
           "the image of \"" + name + "\" must list " + std::to_string(domain) +
               " points");
    davisforge::Permutation p(static_cast<std::size_t>(domain));
    std::vector<bool> seen(static_cast<std::size_t>(domain), false);
    for (long i = 0; i < domain; ++i) {
      const json& entry = arr.at(static_cast<std::size_t>(i));
      if (!entry.is_number_integer())
        fail(errc::parse_error, "permutation entries must be integers");
      long v = entry.get<long>();
      if (v < 0 || v >= domain || seen[static_cast<std::size_t>(v)])
        fail(errc::invalid_input,
             "the image of \"" + name + "\" is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
      p[static_cast<std::size_t>(i)] = static_cast<int>(v);
    }
    perms.push_back(std::move(p));
  }
  return davisforge::quotient_from_permutations(sys, perms, limit);
}

davisforge::Cover cover_from_json(const json& j) {
  davisforge::SimplicialComplex ambient = complex_from_json(field(j, "ambient"));
  const json& parts = field(j, "parts");
  if (!parts.is_array()) fail(errc::parse_error, "parts must be an array");
  std::vector<std::pair<std::string, davisforge::SimplicialComplex>> named;
  named.reserve(parts.size());
  for (const json& part : parts)
    named.emplace_back(as_string(field(part, "name"), "a part name"),
                       complex_from_json(field(part, "complex")));
  return davisforge::Cover::checked(std::move(ambient), std::move(named));
}

davisforge::Presentation presentation_from_json(const json& j) {
  davisforge::Presentation pres;
  pres.generators = string_array(field(j, "generators"), "generators");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    if (!index.emplace(pres.generators[i], static_cast<int>(i) + 1).second)
      fail(errc::parse_error, "duplicate generator \"" + pres.generators[i] + "\"");
  }
  const json& relators = field(j, "relators");
  if (!relators.is_array()) fail(errc::parse_error, "relators must be an array");
  for (const json& word : relators) {
    if (!word.is_array()) fail(errc::parse_error, "a relator must be an array of letters");
    std::vector<int> letters;
    letters.reserve(word.size());
    for (const json& item : word) {
      std::string letter = as_string(item, "a letter");
      auto hit = index.find(letter);
      if (hit != index.end()) {
        letters.push_back(hit->second);
        continue;
      }
      std::string lowered = letter;
      for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      hit = index.find(lowered);
      if (hit == index.end() || lowered == letter)
        fail(errc::parse_error, "unknown letter \"" + letter + "\"");
      letters.push_back(-hit->second);
    }
    pres.relators.push_back(std::move(letters));
  }
  return pres;
}

json group_to_json(const davisforge::GroupSummary& g) {
  json torsion = json::array();
  for (const davisforge::bigint& d : g.torsion) torsion.push_back(bigint_to_json(d));
  json j;
  j["betti"] = g.betti;
  j["torsion"] = std::move(torsion);
  return j;
}

json summary_to_json(const davisforge::HomologySummary& h) {
  json degrees = json::array();
  for (int k = h.lowest(); k <= h.highest(); ++k) {
    davisforge::GroupSummary g = h.at(k);
    json entry = group_to_json(g);
    entry["degree"] = k;
    entry["group"] = davisforge::group_to_string(g);
    degrees.push_back(std::move(entry));
  }
  return degrees;
}

json face_vector_to_json(const davisforge::SimplicialComplex& x) {
  return json(x.face_vector());
}

json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::invalid_input, "cannot write " + path);
  out << bytes;
  out.close();
  if (!out) fail(errc::invalid_input, "cannot write " + path);
}

}  // namespace dfcli
