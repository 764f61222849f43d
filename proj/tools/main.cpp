#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "davisforge/chain_complex.hpp"
#include "davisforge/coxeter.hpp"
#include "davisforge/davis.hpp"
#include "davisforge/errors.hpp"
#include "davisforge/gallery.hpp"
#include "davisforge/group_action.hpp"
#include "davisforge/pi1.hpp"
#include "davisforge/simplicial_complex.hpp"
#include "json_io.hpp"

namespace {

using davisforge::errc;
using davisforge::fail;
using dfcli::json;

// Resource limits, overridable via DAVIS_FORGE_CAPS="ghat=..,simplices=..,cosets=..".
struct Caps {
  long ghat = davisforge::kQuotientCap;
  long long simplices = davisforge::kDavisSimplexCap;
  long cosets = davisforge::kDefaultCosetLimit;
};

Caps caps_from_env() {
  Caps caps;
  const char* env = std::getenv("DAVIS_FORGE_CAPS");
  if (env == nullptr) return caps;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(errc::invalid_input, "DAVIS_FORGE_CAPS entries must look like key=value");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(errc::invalid_input, "bad cap value in DAVIS_FORGE_CAPS: " + item);
    }
    if (value <= 0) fail(errc::invalid_input, "caps must be positive: " + item);
    if (key == "ghat") caps.ghat = static_cast<long>(value);
    else if (key == "simplices") caps.simplices = value;
    else if (key == "cosets") caps.cosets = static_cast<long>(value);
    else fail(errc::invalid_input, "unknown cap \"" + key + "\" in DAVIS_FORGE_CAPS");
  }
  return caps;
}

struct Output {
  std::string format = "json";
  std::string path;
};

// The text format is a deterministic flattening of the JSON report: one
// "dotted.path = value" line per leaf, in key order.
void flatten(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& item : j.items())
      flatten(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j.at(i), prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + " = " + j.dump() + "\n";
  }
}

void emit(const json& report, const Output& out) {
  std::string bytes;
  if (out.format == "text") flatten(report, "", bytes);
  else bytes = report.dump(2) + "\n";
  if (out.path.empty()) std::cout << bytes;
  else dfcli::write_file(out.path, bytes);
}

davisforge::Coefficients parse_coefficients(const std::string& spec) {
  if (spec == "Z" || spec == "z") return davisforge::Coefficients::integers();
  long p = 0;
  try {
    std::size_t used = 0;
    p = std::stol(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    fail(errc::invalid_input, "--coeff expects Z or a prime number, got " + spec);
  }
  return davisforge::Coefficients::mod(p);
}

// A quotient spec is a built-in name or a path to a quotient JSON file.
davisforge::FiniteQuotient quotient_from_spec(const davisforge::CoxeterSystem& sys,
                                              const std::string& spec, long limit) {
  if (spec == "abelianization") return davisforge::abelianization_quotient(sys, limit);
  if (spec == "parity") return davisforge::parity_quotient(sys);
  if (spec == "trivial") return davisforge::trivial_quotient(sys);
  return dfcli::quotient_from_json(sys, dfcli::parse_file(spec), limit);
}

int run_homology(const std::string& complex_path, const std::string& rel_path,
                 const std::string& coeff, bool cohomology_variant, bool reduced,
                 const Output& out) {
  davisforge::SimplicialComplex x = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  davisforge::Coefficients k = parse_coefficients(coeff);
  json report;
  davisforge::ChainComplex c = davisforge::ChainComplex::zero();
  if (!rel_path.empty()) {
    if (reduced) fail(errc::invalid_input, "--reduced applies to absolute homology only");
    davisforge::SimplicialComplex a = dfcli::complex_from_json(dfcli::parse_file(rel_path));
    c = davisforge::relative_chain_complex(x, a);
    report["kind"] = "relative";
  } else {
    c = davisforge::chain_complex_of(x, reduced);
    report["kind"] = "absolute";
  }
  davisforge::HomologySummary h =
      cohomology_variant ? davisforge::cohomology(c, k) : davisforge::homology(c, k);
  report["coefficients"] = k.label();
  report["degrees"] = dfcli::summary_to_json(h);
  report["reduced"] = reduced;
  report["variant"] = cohomology_variant ? "cohomology" : "homology";
  emit(report, out);
  return 0;
}

int run_flag(const std::string& complex_path, const Output& out) {
  davisforge::SimplicialComplex x = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  bool flag = davisforge::is_flag(x);
  json report;
  report["f_vector"] = dfcli::face_vector_to_json(x);
  report["flag"] = flag;
  report["flag_no_square"] = flag ? json(davisforge::is_flag_no_square(x)) : json(nullptr);
  emit(report, out);
  return 0;
}

int run_subdivide(const std::string& complex_path, const Output& out) {
  davisforge::SimplicialComplex x = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  emit(dfcli::complex_to_json(davisforge::barycentric_subdivision(x).complex), out);
  return 0;
}

int run_davis(const std::string& complex_path, const std::string& quotient_spec,
              const std::string& emit_complex, const Caps& caps, const Output& out) {
  davisforge::SimplicialComplex l = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  davisforge::CoxeterSystem sys = davisforge::coxeter_from_flag(l);
  davisforge::FiniteQuotient q = quotient_from_spec(sys, quotient_spec, caps.ghat);
  davisforge::DavisQuotientComplex davis = davisforge::davis_quotient(q, caps.simplices);
  const davisforge::SimplicialComplex& cx = davis.complex();
  json report;
  report["dimension"] = cx.dimension();
  report["f_vector"] = dfcli::face_vector_to_json(cx);
  report["homology"] = dfcli::summary_to_json(davisforge::homology(
      davisforge::chain_complex_of(cx, false), davisforge::Coefficients::integers()));
  report["quotient_order"] = q.order();
  report["simplex_count"] = cx.simplex_count();
  report["sing_f_vector"] = dfcli::face_vector_to_json(davisforge::sing_subcomplex(davis));
  report["type_count"] = davis.type_count();
  report["vertex_count"] = cx.vertex_count();
  if (!emit_complex.empty())
    dfcli::write_file(emit_complex, dfcli::complex_to_json(cx).dump(2) + "\n");
  emit(report, out);
  return 0;
}

json optional_group_to_json(const std::optional<davisforge::GroupSummary>& g) {
  if (!g.has_value()) return json(nullptr);
  json entry = dfcli::group_to_json(*g);
  entry["group"] = davisforge::group_to_string(*g);
  return entry;
}

int run_certify(const std::string& complex_path, const std::string& action_path,
                const std::string& quotient_spec, const Caps& caps, const Output& out) {
  davisforge::SimplicialComplex l = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  davisforge::SimplicialAction action =
      action_path.empty()
          ? davisforge::SimplicialAction::trivial(l)
          : dfcli::action_from_json(l, dfcli::parse_file(action_path), caps.ghat);
  davisforge::CoxeterSystem sys = davisforge::coxeter_from_flag(l);
  davisforge::FiniteQuotient q = quotient_from_spec(sys, quotient_spec, caps.ghat);
  davisforge::Theorem1Certificate cert =
      davisforge::theorem1_certificate(l, action, q, caps.simplices);

  std::string n = std::to_string(cert.n);
  std::string n1 = std::to_string(cert.n + 1);
  json lower;
  lower["cone_pair_matches"] = cert.cone_pair_matches;
  lower["h_cone_pair"] = dfcli::group_to_json(cert.h_cone_pair);
  lower["h_cone_pair"]["group"] = davisforge::group_to_string(cert.h_cone_pair);
  lower["h_davis_pair"] = dfcli::group_to_json(cert.h_davis_pair);
  lower["h_davis_pair"]["group"] = davisforge::group_to_string(cert.h_davis_pair);
  lower["h_nerve_pair"] = dfcli::group_to_json(cert.h_nerve_pair);
  lower["h_nerve_pair"]["group"] = davisforge::group_to_string(cert.h_nerve_pair);
  lower["nonzero"] = cert.nerve_pair_nonzero;
  lower["splitting_verified"] = cert.splitting_verified;
  lower["statement"] = "H^" + n1 + " of the pair (Davis quotient, family-singular part) "
                       "contains H^" + n + "(L, L_sing) as a direct summand";
  lower["vacuous"] = !cert.nerve_pair_nonzero;

  json upper;
  upper["davis_dimension"] = cert.davis_dimension;
  upper["deleted_vertex"] =
      cert.deleted_vertex.empty() ? json(nullptr) : json(cert.deleted_vertex);
  upper["deleted_vertex_witness"] = optional_group_to_json(cert.deleted_vertex_witness);
  upper["full_singular_witness"] = optional_group_to_json(cert.full_singular_witness);
  upper["statement"] = "the group acts properly on a contractible complex of dimension " +
                       std::to_string(cert.davis_dimension);

  bool verified = cert.cone_pair_matches &&
                  (cert.splitting_verified || !cert.nerve_pair_nonzero);
  json report;
  report["group_order"] = cert.group_order;
  report["l_acyclic"] = cert.l_acyclic;
  report["lower_bound"] = std::move(lower);
  report["n"] = cert.n;
  report["quotient_order"] = cert.quotient_order;
  report["upper_bound"] = std::move(upper);
  report["verified"] = verified;
  emit(report, out);
  return verified ? 0 : 1;
}

int run_splitting_check(const std::string& complex_path, const std::string& quotient_spec,
                        const std::string& sub_path, const Caps& caps, const Output& out) {
  davisforge::SimplicialComplex l = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  davisforge::CoxeterSystem sys = davisforge::coxeter_from_flag(l);
  davisforge::FiniteQuotient q = quotient_from_spec(sys, quotient_spec, caps.ghat);
  davisforge::DavisQuotientComplex davis = davisforge::davis_quotient(q, caps.simplices);
  davisforge::SplittingMaps maps =
      sub_path.empty()
          ? davisforge::splitting_maps(davis)
          : davisforge::relative_splitting_maps(
                davis, dfcli::complex_from_json(dfcli::parse_file(sub_path)));
  json degrees = json::array();
  for (int k = maps.domain.lowest(); k <= maps.domain.highest(); ++k) {
    json entry;
    entry["degree"] = k;
    entry["domain_dim"] = maps.domain.dim(k);
    entry["target_dim"] = maps.target.dim(k);
    degrees.push_back(std::move(entry));
  }
  json report;
  report["degrees"] = std::move(degrees);
  report["mode"] = sub_path.empty() ? "absolute" : "relative";
  report["quotient_order"] = q.order();
  report["verified"] = true;  // construction verifies both chain maps and phi.psi = id
  emit(report, out);
  return 0;
}

int run_singular(const std::string& complex_path, const std::string& action_path,
                 const std::string& emit_complex, const Caps& caps, const Output& out) {
  davisforge::SimplicialComplex x = dfcli::complex_from_json(dfcli::parse_file(complex_path));
  davisforge::SimplicialAction action =
      dfcli::action_from_json(x, dfcli::parse_file(action_path), caps.ghat);
  davisforge::SimplicialComplex sing = davisforge::singular_subcomplex(action);
  json report;
  report["complex"] = dfcli::complex_to_json(sing);
  report["f_vector"] = dfcli::face_vector_to_json(sing);
  report["full_subcomplex"] = davisforge::is_full_subcomplex(x, sing);
  report["group_order"] = action.group().order();
  if (!emit_complex.empty())
    dfcli::write_file(emit_complex, dfcli::complex_to_json(sing).dump(2) + "\n");
  emit(report, out);
  return 0;
}

int run_nerve(const std::string& cover_path, const Output& out) {
  davisforge::Cover cover = dfcli::cover_from_json(dfcli::parse_file(cover_path));
  davisforge::NerveComparison comparison = davisforge::nerve_homology_comparison(cover);
  json report;
  report["agree"] = true;  // nerve_homology_comparison throws on disagreement
  report["cover_homology"] = dfcli::summary_to_json(comparison.cover_homology);
  report["nerve"] = dfcli::complex_to_json(comparison.nerve);
  report["nerve_homology"] = dfcli::summary_to_json(comparison.nerve_homology);
  emit(report, out);
  return 0;
}

int run_pi1(const std::string& input_path, long max_cosets, const Output& out) {
  json j = dfcli::parse_file(input_path);
  davisforge::Presentation pres;
  std::string source;
  if (j.is_object() && j.contains("generators")) {
    pres = dfcli::presentation_from_json(j);
    source = "presentation";
  } else {
    pres = davisforge::presentation_from_two_complex(dfcli::complex_from_json(j));
    source = "complex";
  }
  long order = davisforge::todd_coxeter(pres, {}, max_cosets);
  json report;
  report["generator_count"] = pres.generators.size();
  report["order"] = order;
  report["relator_count"] = pres.relators.size();
  report["source"] = source;
  emit(report, out);
  return 0;
}

// "poincare" names the flagship instance; everything else is looked up in
// the gallery directly.
std::string resolve_example_name(const std::string& name) {
  if (name == "poincare") return "poincare-parity";
  return name;
}

int run_example(std::vector<std::string> args, const std::string& dir, const Output& out) {
  if (!args.empty() && args.front() == "export") args.erase(args.begin());
  if (args.size() != 1)
    fail(errc::invalid_input, "example expects a single instance name");
  const std::string& name = args.front();

  if (name == "list") {
    json names = json::array();
    for (const davisforge::GalleryInstance& inst : davisforge::gallery())
      names.push_back(inst.name);
    json report;
    report["names"] = std::move(names);
    emit(report, out);
    return 0;
  }

  const davisforge::GalleryInstance& inst =
      davisforge::gallery_instance(resolve_example_name(name));
  std::string stem = dir.empty() ? name : dir + "/" + name;
  std::vector<std::pair<std::string, json>> files = {
      {stem + ".complex.json", dfcli::complex_to_json(inst.complex)},
      {stem + ".action.json", dfcli::action_to_json(inst.action)},
      {stem + ".quotient.json", dfcli::quotient_to_json(inst.quotient)},
  };
  json written = json::array();
  for (const auto& [path, doc] : files) {
    dfcli::write_file(path, doc.dump(2) + "\n");
    written.push_back(path);
  }
  json report;
  report["files"] = std::move(written);
  report["name"] = name;
  emit(report, out);
  return 0;
}

int run_export(const std::string& complex_path, const Output& out) {
  emit(dfcli::complex_to_json(dfcli::complex_from_json(dfcli::parse_file(complex_path))), out);
  return 0;
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::verification_failed:
    case errc::constraint_violated:
      return 1;
    case errc::quotient_too_large:
    case errc::coset_limit_exceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"davisforge: homology of finite simplicial complexes, right-angled "
               "Coxeter quotients of Davis complexes, and certified cohomological "
               "dimension bounds"};
  app.require_subcommand(1);

  int rc = 0;
  Output out;
  auto add_common = [&out](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", out.path, "Write the report to a file");
  };

  std::string complex_path, rel_path, action_path, quotient_spec, sub_path;
  std::string cover_path, input_path, emit_complex, dir;
  std::string coeff = "Z";
  bool cohomology_variant = false;
  bool reduced = false;
  std::vector<std::string> example_args;

  Caps caps;  // filled from the environment after parsing, before dispatch

  CLI::App* homology = app.add_subcommand(
      "homology", "Homology or cohomology of a complex or a pair");
  homology->add_option("complex", complex_path, "Complex JSON file")->required();
  homology->add_option("subcomplex", rel_path, "Subcomplex JSON file (relative pair)");
  homology->add_option("--coeff", coeff, "Coefficients: Z or a prime p")
      ->capture_default_str();
  homology->add_flag("--cohomology", cohomology_variant, "Compute cohomology");
  homology->add_flag("--reduced", reduced, "Use the augmented chain complex");
  add_common(homology);
  homology->callback([&] {
    rc = run_homology(complex_path, rel_path, coeff, cohomology_variant, reduced, out);
  });

  CLI::App* flag = app.add_subcommand("flag", "Flag and no-empty-square tests");
  flag->add_option("complex", complex_path, "Complex JSON file")->required();
  add_common(flag);
  flag->callback([&] { rc = run_flag(complex_path, out); });

  CLI::App* subdivide = app.add_subcommand("subdivide", "Barycentric subdivision");
  subdivide->add_option("complex", complex_path, "Complex JSON file")->required();
  add_common(subdivide);
  subdivide->callback([&] { rc = run_subdivide(complex_path, out); });

  CLI::App* davis = app.add_subcommand(
      "davis", "Quotient of the Davis complex by the kernel of a finite quotient");
  davis->add_option("complex", complex_path, "Flag nerve JSON file")->required();
  davis->add_option("--quotient", quotient_spec,
                    "abelianization | parity | trivial | quotient JSON file")
      ->required();
  davis->add_option("--emit-complex", emit_complex, "Also write the quotient complex");
  add_common(davis);
  davis->callback([&] {
    rc = run_davis(complex_path, quotient_spec, emit_complex, caps, out);
  });

  CLI::App* certify = app.add_subcommand(
      "certify", "Certificate for the cohomological dimension bounds of one instance");
  certify->add_option("complex", complex_path, "Flag nerve JSON file")->required();
  certify->add_option("--action", action_path, "Action JSON file (default: trivial)");
  certify->add_option("--quotient", quotient_spec,
                      "abelianization | parity | trivial | quotient JSON file")
      ->required();
  add_common(certify);
  certify->callback([&] {
    rc = run_certify(complex_path, action_path, quotient_spec, caps, out);
  });

  CLI::App* splitting = app.add_subcommand(
      "splitting-check", "Verify the cone-pair splitting through the Davis quotient");
  splitting->add_option("complex", complex_path, "Flag nerve JSON file")->required();
  splitting->add_option("--quotient", quotient_spec,
                        "abelianization | parity | trivial | quotient JSON file")
      ->required();
  splitting->add_option("--sub", sub_path, "Nerve subcomplex JSON file (relative form)");
  add_common(splitting);
  splitting->callback([&] {
    rc = run_splitting_check(complex_path, quotient_spec, sub_path, caps, out);
  });

  CLI::App* singular = app.add_subcommand(
      "singular", "Points with nontrivial stabilizer under an admissible action");
  singular->add_option("complex", complex_path, "Complex JSON file")->required();
  singular->add_option("--action", action_path, "Action JSON file")->required();
  singular->add_option("--emit-complex", emit_complex, "Also write the singular part");
  add_common(singular);
  singular->callback([&] {
    rc = run_singular(complex_path, action_path, emit_complex, caps, out);
  });

  CLI::App* nerve = app.add_subcommand(
      "nerve", "Nerve of a cover, with the homology comparison the nerve lemma asserts");
  nerve->add_option("cover", cover_path, "Cover JSON file")->required();
  add_common(nerve);
  nerve->callback([&] { rc = run_nerve(cover_path, out); });

  long max_cosets = 0;  // 0 = use the cap default
  CLI::App* pi1 = app.add_subcommand(
      "pi1", "Order of the group presented by a presentation or a complex");
  pi1->add_option("input", input_path, "Presentation or complex JSON file")->required();
  pi1->add_option("--max-cosets", max_cosets, "Coset table limit");
  add_common(pi1);
  pi1->callback([&] {
    rc = run_pi1(input_path, max_cosets > 0 ? max_cosets : caps.cosets, out);
  });

  CLI::App* example = app.add_subcommand(
      "example", "Write a gallery instance as complex/action/quotient files");
  example->add_option("name", example_args, "Instance name, or list")
      ->expected(1, 2);
  example->add_option("--dir", dir, "Output directory (default: current)");
  add_common(example);
  example->callback([&] { rc = run_example(example_args, dir, out); });

  CLI::App* export_cmd = app.add_subcommand(
      "export", "Re-emit a complex file in canonical form");
  export_cmd->add_option("complex", complex_path, "Complex JSON file")->required();
  add_common(export_cmd);
  export_cmd->callback([&] { rc = run_export(complex_path, out); });

  try {
    caps = caps_from_env();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const davisforge::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
