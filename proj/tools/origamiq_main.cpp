#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "CLI11.hpp"
#include "origamiq/covering.hpp"
#include "origamiq/oracle.hpp"

namespace {

using namespace origamiq;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

IntVec parse_direction(const std::string& text) {
  IntVec out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    Rat r = parse_rational(part);
    if (denominator(r) != 1) throw MalformedRational("direction entries must be integers");
    out.push_back(numerator(r));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<Int, Int> parse_mode_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw MalformedRational("mode range must look like lo..hi, got \"" + text + "\"");
  Rat lo = parse_rational(text.substr(0, dots));
  Rat hi = parse_rational(text.substr(dots + 2));
  if (denominator(lo) != 1 || denominator(hi) != 1)
    throw MalformedRational("mode bounds must be integers");
  return {numerator(lo), numerator(hi)};
}

std::string tag_to_string(const RegionTag& tag, const DelzantPolytope& p) {
  switch (tag.kind) {
    case RegionKind::Face: {
      const Face& f = p.face_lattice()[static_cast<std::size_t>(tag.face)];
      std::string s = "face dim=" + std::to_string(f.dim) + " facets={";
      for (std::size_t i = 0; i < f.facets.size(); ++i)
        s += (i ? "," : "") + std::to_string(f.facets[i]);
      return s + "}";
    }
    case RegionKind::FoldBand:
      return "fold-band fold=" + std::to_string(tag.fold);
    case RegionKind::Crack:
      return "crack fold=" + std::to_string(tag.fold) + " facet=" + std::to_string(tag.facet);
  }
  return "?";
}

ordered_json points_json(const std::vector<IntVec>& points) {
  ordered_json arr = ordered_json::array();
  for (const IntVec& p : points) {
    ordered_json jp = ordered_json::array();
    for (const Int& c : p) jp.push_back(c.convert_to<long long>());
    arr.push_back(std::move(jp));
  }
  return arr;
}

int run_validate(const std::string& file) {
  OrigamiTemplate t = load_template(file);
  ValidationReport rep = validate_template(t);
  std::cout << "template: " << t.polytopes().size() << " polytopes, " << t.folds().size()
            << (t.folds().size() == 1 ? " fold" : " folds") << ", dimension " << t.dimension()
            << "\n"
            << rep.to_text();
  return rep.accepted ? kExitPass : kExitCheckFailed;
}

int run_rr(const std::string& file, bool as_json) {
  OrigamiTemplate t = load_template(file);
  RRResult rr = danilov_template(t);
  if (!as_json) {
    std::cout << "character: " << rr.character.to_string() << "\n"
              << "dimension: " << rr.character.dimension() << "\n";
    return kExitPass;
  }
  ordered_json doc;
  doc["character"] = rr.character.to_string();
  doc["dimension"] = rr.character.dimension().convert_to<long long>();
  doc["per_polytope"] = ordered_json::array();
  for (std::size_t i = 0; i < rr.per_polytope.size(); ++i) {
    ordered_json jp;
    jp["name"] = t.polytopes()[i].name;
    jp["sign"] = t.polytopes()[i].sign > 0 ? "+" : "-";
    jp["character"] = rr.per_polytope[i].to_string();
    jp["dimension"] = rr.per_polytope[i].dimension().convert_to<long long>();
    doc["per_polytope"].push_back(std::move(jp));
  }
  doc["per_face"] = ordered_json::array();
  for (const FaceContribution& fc : rr.per_face) {
    ordered_json jf;
    jf["polytope"] = fc.polytope;
    jf["sign"] = fc.sign > 0 ? "+" : "-";
    jf["dim"] = fc.face.dim;
    jf["facets"] = fc.face.facets;
    jf["points"] = points_json(fc.points);
    jf["character"] = fc.character.to_string();
    doc["per_face"].push_back(std::move(jf));
  }
  std::cout << doc.dump(2) << "\n";
  return kExitPass;
}

int run_oracle(const std::string& file, const std::string& direction) {
  OrigamiTemplate t = load_template(file);
  IntVec dir;
  if (!direction.empty()) dir = parse_direction(direction);
  OracleReport rep = oracle_check_template(t, dir);
  std::cout << "direction: " << vec_to_string(rep.direction) << "\n";
  if (rep.integral_mode) {
    std::cout << "fixed-point sum: " << rep.fixed_point_sum.to_string() << "\n"
              << "lattice sum:     " << rep.lattice_sum.to_string() << "\n";
  } else {
    std::cout << "lattice sum: " << rep.lattice_sum.to_string() << "\n"
              << "note: " << rep.detail << "\n";
  }
  std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? kExitPass : kExitCheckFailed;
}

int run_covering(const std::string& file, const std::string& epsilon, bool as_json) {
  OrigamiTemplate t = load_template(file);
  BuiltTemplate bt = build_template(t);
  EpsilonBound bound = max_admissible_epsilon(bt);
  CoveringParams params;
  params.epsilon = epsilon.empty() ? bound.suggested : parse_rational(epsilon);

  AuditReport rep = audit_localization(bt, params);
  Covering cov = build_covering(bt, params, /*strict=*/false);

  if (as_json) {
    ordered_json doc;
    doc["epsilon"] = rational_to_string(params.epsilon);
    doc["admissible"] = rep.admissible;
    if (bound.constrained)
      doc["max_admissible_epsilon_sq"] = rational_to_string(bound.min_distance_sq);
    else
      doc["max_admissible_epsilon_sq"] = nullptr;
    doc["suggested_epsilon"] = rational_to_string(bound.suggested);
    doc["assignment"] = ordered_json::array();
    for (std::size_t pi = 0; pi < cov.per_polytope.size(); ++pi) {
      ordered_json jp;
      jp["polytope"] = bt.names[pi];
      jp["points"] = ordered_json::array();
      for (const PointAssignment& pa : cov.per_polytope[pi]) {
        ordered_json ja;
        ja["point"] = points_json({pa.point})[0];
        ja["region"] = tag_to_string(pa.tag, bt.polytopes[pi]);
        if (pa.ambiguous) ja["ambiguous"] = true;
        jp["points"].push_back(std::move(ja));
      }
      doc["assignment"].push_back(std::move(jp));
    }
    doc["fold_band_points"] = rep.fold_band_points;
    doc["crack_points"] = rep.crack_points;
    doc["reassembled"] = rep.reassembled.to_string();
    doc["expected"] = rep.expected.to_string();
    doc["paired_all_zero"] = rep.paired_all_zero;
    doc["fold_normal_index"] = rep.fold_normal_certificate.index;
    doc["failures"] = rep.failures;
    doc["pass"] = rep.pass;
    std::cout << doc.dump(2) << "\n";
    return rep.pass ? kExitPass : kExitCheckFailed;
  }

  std::cout << "epsilon: " << rational_to_string(params.epsilon) << "\n";
  if (bound.constrained)
    std::cout << "admissible: " << (rep.admissible ? "yes" : "no") << " (epsilon^2 bound "
              << rational_to_string(bound.min_distance_sq) << ", suggested epsilon "
              << rational_to_string(bound.suggested) << ")\n";
  else
    std::cout << "admissible: yes (unconstrained)\n";
  std::cout << "assignment:\n";
  for (std::size_t pi = 0; pi < cov.per_polytope.size(); ++pi) {
    std::cout << "polytope " << bt.names[pi] << ":\n";
    for (const PointAssignment& pa : cov.per_polytope[pi])
      std::cout << "  " << vec_to_string(pa.point) << " -> "
                << tag_to_string(pa.tag, bt.polytopes[pi]) << (pa.ambiguous ? " (ambiguous)" : "")
                << "\n";
  }
  std::cout << "fold band points: " << rep.fold_band_points << "\n"
            << "crack points: " << rep.crack_points << "\n"
            << "reassembled: " << rep.reassembled.to_string() << "\n"
            << "expected:    " << rep.expected.to_string() << "\n"
            << "fold normal model index: " << rep.fold_normal_certificate.index << "\n";
  for (const std::string& f : rep.failures) std::cout << "failure: " << f << "\n";
  std::cout << "audit: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? kExitPass : kExitCheckFailed;
}

int run_cylinder(const std::string& t_text, const std::string& modes_text, bool as_json) {
  Rat t = t_text.empty() ? Rat(0) : parse_rational(t_text);
  Int lo = -5, hi = 5;
  if (!modes_text.empty()) std::tie(lo, hi) = parse_mode_range(modes_text);
  if (lo > hi) throw MalformedRational("mode range is empty: " + modes_text);
  KernelReport rep = kernel_dimension(t, lo, hi);

  if (as_json) {
    ordered_json doc;
    doc["t"] = rational_to_string(rep.t);
    doc["modes"] = ordered_json::array({rep.mode_lo.convert_to<long long>(),
                                        rep.mode_hi.convert_to<long long>()});
    doc["kernel_plus"] = rep.kernel_dim_plus;
    doc["kernel_minus"] = rep.kernel_dim_minus;
    doc["index"] = rep.index;
    doc["mode_certificates"] = ordered_json::array();
    for (const ModeCertificate& mc : rep.modes) {
      ordered_json jm;
      jm["m"] = mc.m.convert_to<long long>();
      jm["w_plus_rate_to_plus_inf"] = rational_to_string(mc.w_plus_slope_plus);
      jm["w_plus_rate_to_minus_inf"] = rational_to_string(mc.w_plus_slope_minus);
      jm["w_minus_rate_to_plus_inf"] = rational_to_string(mc.w_minus_slope_plus);
      jm["w_minus_rate_to_minus_inf"] = rational_to_string(mc.w_minus_slope_minus);
      jm["w_plus_l2"] = mc.w_plus_l2;
      jm["w_minus_l2"] = mc.w_minus_l2;
      doc["mode_certificates"].push_back(std::move(jm));
    }
    doc["tail_certificate"] = rep.tail_certificate;
    doc["pass"] = rep.pass;
    std::cout << doc.dump(2) << "\n";
    return rep.pass ? kExitPass : kExitCheckFailed;
  }

  std::cout << "t: " << rational_to_string(rep.t) << "\n"
            << "modes: " << rep.mode_lo << ".." << rep.mode_hi << "\n";
  for (const ModeCertificate& mc : rep.modes)
    std::cout << "m=" << mc.m << ": W+ rates (" << rational_to_string(mc.w_plus_slope_plus)
              << " toward +inf, " << rational_to_string(mc.w_plus_slope_minus)
              << " toward -inf) " << (mc.w_plus_l2 ? "L2" : "not L2") << "; W- rates ("
              << rational_to_string(mc.w_minus_slope_plus) << ", "
              << rational_to_string(mc.w_minus_slope_minus) << ") "
              << (mc.w_minus_l2 ? "L2" : "not L2") << "\n";
  std::cout << "tail: " << rep.tail_certificate << "\n"
            << "kernel W+: " << rep.kernel_dim_plus << "\n"
            << "kernel W-: " << rep.kernel_dim_minus << "\n"
            << "index: " << rep.index << "\n"
            << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return rep.pass ? kExitPass : kExitCheckFailed;
}

int run_enumerate(const std::string& file, bool as_json) {
  OrigamiTemplate t = load_template(file);
  BuiltTemplate bt = build_template(t);
  if (as_json) {
    ordered_json doc = ordered_json::array();
    for (std::size_t i = 0; i < bt.polytopes.size(); ++i) {
      ordered_json jp;
      jp["name"] = bt.names[i];
      jp["sign"] = bt.signs[i] > 0 ? "+" : "-";
      jp["points"] = points_json(lattice_points(bt.polytopes[i]));
      doc.push_back(std::move(jp));
    }
    std::cout << doc.dump(2) << "\n";
    return kExitPass;
  }
  for (std::size_t i = 0; i < bt.polytopes.size(); ++i) {
    std::cout << "polytope " << bt.names[i] << " (sign " << (bt.signs[i] > 0 ? "+" : "-")
              << "):\n";
    for (const IntVec& pt : lattice_points(bt.polytopes[i]))
      std::cout << "  " << vec_to_string(pt) << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant Riemann-Roch characters of toric origami templates"};
  app.require_subcommand(1);

  std::string file, direction, epsilon, t_text, modes_text;
  bool json_rr = false, json_cov = false, json_cyl = false, json_enum = false;

  CLI::App* validate = app.add_subcommand("validate", "check a template file");
  validate->add_option("file", file, "template JSON file")->required();

  CLI::App* rr = app.add_subcommand("rr", "compute the equivariant character");
  rr->add_option("file", file, "template JSON file")->required();
  rr->add_flag("--json", json_rr, "emit the full per-face breakdown as JSON");

  CLI::App* oracle = app.add_subcommand("oracle", "verify against the vertex fixed-point sum");
  oracle->add_option("file", file, "template JSON file")->required();
  oracle->add_option("--direction", direction,
                     "comma-separated integer direction (chosen automatically when omitted)");

  CLI::App* covering = app.add_subcommand("covering", "build and audit the localization covering");
  covering->add_option("file", file, "template JSON file")->required();
  covering->add_option("--epsilon", epsilon,
                       "slab half-width as a rational (defaults to a suggested admissible value)");
  covering->add_flag("--json", json_cov, "emit the report as JSON");

  CLI::App* cylinder = app.add_subcommand("cylinder", "certify the folded-cylinder model index");
  cylinder->add_option("--t", t_text, "deformation parameter, rational >= 0 (default 0)");
  cylinder->add_option("--modes", modes_text, "Fourier mode range lo..hi (default -5..5)");
  cylinder->add_flag("--json", json_cyl, "emit the certificates as JSON");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list lattice points per polytope");
  enumerate_cmd->add_option("file", file, "template JSON file")->required();
  enumerate_cmd->add_flag("--json", json_enum, "emit the points as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(file);
    if (rr->parsed()) return run_rr(file, json_rr);
    if (oracle->parsed()) return run_oracle(file, direction);
    if (covering->parsed()) return run_covering(file, epsilon, json_cov);
    if (cylinder->parsed()) return run_cylinder(t_text, modes_text, json_cyl);
    if (enumerate_cmd->parsed()) return run_enumerate(file, json_enum);
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedRational& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownPolytopeName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonGenericDirection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NegativeT& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
