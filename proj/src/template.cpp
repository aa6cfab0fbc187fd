#include "origamiq/template.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace origamiq {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

DelzantPolytope SignedPolytope::build() const {
  return DelzantPolytope::from_halfspaces(dimension, halfspaces);
}

OrigamiTemplate::OrigamiTemplate(int dimension, std::vector<SignedPolytope> polytopes,
                                 std::vector<FoldSpec> folds)
    : dimension_(dimension), polytopes_(std::move(polytopes)), folds_(std::move(folds)) {
  if (dimension_ < 1) throw SyntaxError("template dimension must be at least 1");
  if (polytopes_.empty()) throw SyntaxError("template needs at least one polytope");
  std::set<std::string> names;
  for (const SignedPolytope& p : polytopes_) {
    if (p.name.empty()) throw SyntaxError("polytope name must be nonempty");
    if (!names.insert(p.name).second)
      throw SyntaxError("duplicate polytope name \"" + p.name + "\"");
    if (p.sign != 1 && p.sign != -1)
      throw SyntaxError("polytope \"" + p.name + "\" has invalid sign");
    if (p.dimension != dimension_)
      throw DimensionMismatch("polytope \"" + p.name + "\" has dimension " +
                              std::to_string(p.dimension) + ", template has " +
                              std::to_string(dimension_));
    for (const Halfspace& h : p.halfspaces)
      if (h.normal.size() != static_cast<std::size_t>(dimension_))
        throw DimensionMismatch("polytope \"" + p.name + "\": normal " +
                                vec_to_string(h.normal) + " has wrong length");
  }
  std::set<std::pair<std::string, int>> used_facets;
  for (const FoldSpec& f : folds_) {
    for (const FoldSide* side : {&f.a, &f.b}) {
      std::size_t pi = index_of(side->polytope);
      if (side->facet < 0 ||
          side->facet >= static_cast<int>(polytopes_[pi].halfspaces.size()))
        throw SyntaxError("fold facet index " + std::to_string(side->facet) +
                          " out of range for polytope \"" + side->polytope + "\"");
      if (!used_facets.insert({side->polytope, side->facet}).second)
        throw SyntaxError("facet " + std::to_string(side->facet) + " of polytope \"" +
                          side->polytope + "\" appears in more than one fold");
    }
    if (f.a.polytope == f.b.polytope)
      throw SyntaxError("fold joins polytope \"" + f.a.polytope +
                        "\" to itself; use two template entries");
  }
}

std::size_t OrigamiTemplate::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < polytopes_.size(); ++i)
    if (polytopes_[i].name == name) return i;
  throw UnknownPolytopeName("unknown polytope \"" + name + "\"");
}

namespace {

Rat json_rational(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
  if (v.is_number())
    throw MalformedRational(where + ": floating-point numbers are not accepted, use \"p/q\"");
  throw SyntaxError(where + ": expected an integer or a rational string");
}

Int json_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SyntaxError(where + ": expected an integer");
  return Int(v.get<long long>());
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SyntaxError(where + ": missing key \"" + key + "\"");
  return *it;
}

FoldSide parse_side(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2)
    throw SyntaxError(where + ": expected [\"polytope\", facet_index]");
  if (!v[0].is_string()) throw SyntaxError(where + ": polytope name must be a string");
  if (!v[1].is_number_integer()) throw SyntaxError(where + ": facet index must be an integer");
  return FoldSide{v[0].get<std::string>(), v[1].get<int>()};
}

}  // namespace

OrigamiTemplate parse_template(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("template is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("template root must be an object");

  const json& jdim = require_key(doc, "dimension", "template");
  if (!jdim.is_number_integer() || jdim.get<long long>() < 1)
    throw SyntaxError("\"dimension\" must be a positive integer");
  int dim = jdim.get<int>();

  const json& jpolys = require_key(doc, "polytopes", "template");
  if (!jpolys.is_array() || jpolys.empty())
    throw SyntaxError("\"polytopes\" must be a nonempty array");

  std::vector<SignedPolytope> polys;
  for (const json& jp : jpolys) {
    if (!jp.is_object()) throw SyntaxError("polytope entries must be objects");
    SignedPolytope sp;
    const json& jname = require_key(jp, "name", "polytope");
    if (!jname.is_string()) throw SyntaxError("polytope \"name\" must be a string");
    sp.name = jname.get<std::string>();
    const std::string where = "polytope \"" + sp.name + "\"";
    const json& jsign = require_key(jp, "sign", where);
    if (!jsign.is_string() || (jsign != "+" && jsign != "-"))
      throw SyntaxError(where + ": \"sign\" must be \"+\" or \"-\"");
    sp.sign = jsign == "+" ? +1 : -1;
    sp.dimension = dim;
    const json& jhs = require_key(jp, "halfspaces", where);
    if (!jhs.is_array() || jhs.empty())
      throw SyntaxError(where + ": \"halfspaces\" must be a nonempty array");
    for (const json& jh : jhs) {
      if (!jh.is_object()) throw SyntaxError(where + ": halfspace entries must be objects");
      const json& jnorm = require_key(jh, "normal", where);
      if (!jnorm.is_array()) throw SyntaxError(where + ": \"normal\" must be an array");
      if (jnorm.size() != static_cast<std::size_t>(dim))
        throw DimensionMismatch(where + ": normal has " + std::to_string(jnorm.size()) +
                                " entries, expected " + std::to_string(dim));
      IntVec normal;
      for (const json& je : jnorm) normal.push_back(json_integer(je, where + " normal entry"));
      Rat offset = json_rational(require_key(jh, "offset", where), where + " offset");
      sp.halfspaces.emplace_back(std::move(normal), std::move(offset));
    }
    polys.push_back(std::move(sp));
  }

  std::vector<FoldSpec> folds;
  if (auto it = doc.find("folds"); it != doc.end()) {
    if (!it->is_array()) throw SyntaxError("\"folds\" must be an array");
    for (const json& jf : *it) {
      if (!jf.is_object()) throw SyntaxError("fold entries must be objects");
      FoldSpec f;
      f.a = parse_side(require_key(jf, "a", "fold"), "fold side \"a\"");
      f.b = parse_side(require_key(jf, "b", "fold"), "fold side \"b\"");
      folds.push_back(std::move(f));
    }
  }

  return OrigamiTemplate(dim, std::move(polys), std::move(folds));
}

OrigamiTemplate load_template(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open template file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_template(buf.str());
}

std::string render_template(const OrigamiTemplate& t) {
  ordered_json doc;
  doc["dimension"] = t.dimension();
  doc["polytopes"] = ordered_json::array();
  for (const SignedPolytope& p : t.polytopes()) {
    ordered_json jp;
    jp["name"] = p.name;
    jp["sign"] = p.sign > 0 ? "+" : "-";
    jp["halfspaces"] = ordered_json::array();
    for (const Halfspace& h : p.halfspaces) {
      ordered_json jh;
      jh["normal"] = ordered_json::array();
      for (const Int& x : h.normal) jh["normal"].push_back(x.convert_to<long long>());
      jh["offset"] = rational_to_string(h.offset);
      jp["halfspaces"].push_back(std::move(jh));
    }
    doc["polytopes"].push_back(std::move(jp));
  }
  doc["folds"] = ordered_json::array();
  for (const FoldSpec& f : t.folds()) {
    ordered_json jf;
    jf["a"] = ordered_json::array({f.a.polytope, f.a.facet});
    jf["b"] = ordered_json::array({f.b.polytope, f.b.facet});
    doc["folds"].push_back(std::move(jf));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::set<std::vector<Rat>> vertex_point_set(const DelzantPolytope& p,
                                            const std::vector<int>& vertex_ids) {
  std::set<RatVec> out;
  for (int v : vertex_ids) out.insert(p.vertices()[static_cast<std::size_t>(v)]);
  return out;
}

const Face* find_facet_face(const DelzantPolytope& p, int facet) {
  for (const Face& f : p.face_lattice())
    if (f.facets.size() == 1 && f.facets[0] == facet) return &f;
  return nullptr;
}

// True when the intersection of the two polytopes contains a lattice point;
// used only for the same-sign overlap warning.
bool share_lattice_point(const DelzantPolytope& a, const DelzantPolytope& b) {
  for (const IntVec& pt : lattice_points(a))
    if (b.contains(to_rat_vec(pt))) return true;
  return false;
}

}  // namespace

ValidationReport validate_template(const OrigamiTemplate& t) {
  ValidationReport rep;
  std::map<std::string, const DelzantPolytope*> built;
  std::vector<DelzantPolytope> storage;
  storage.reserve(t.polytopes().size());

  for (const SignedPolytope& sp : t.polytopes()) {
    PolytopeCheck pc;
    pc.name = sp.name;
    try {
      storage.push_back(sp.build());
      pc.built = true;
      pc.report = storage.back().delzant_report();
      pc.delzant = pc.report.accepted;
      if (!pc.delzant)
        for (const std::string& issue : pc.report.issues)
          rep.errors.push_back("polytope \"" + sp.name + "\": " + issue);
      built[sp.name] = &storage.back();
    } catch (const Error& e) {
      pc.build_error = e.what();
      rep.errors.push_back("polytope \"" + sp.name + "\": " + pc.build_error);
    }
    rep.polytopes.push_back(std::move(pc));
  }

  for (std::size_t fi = 0; fi < t.folds().size(); ++fi) {
    const FoldSpec& f = t.folds()[fi];
    FoldCheck fc;
    fc.fold = static_cast<int>(fi);
    auto ia = built.find(f.a.polytope);
    auto ib = built.find(f.b.polytope);
    const SignedPolytope& spa = t.polytopes()[t.index_of(f.a.polytope)];
    const SignedPolytope& spb = t.polytopes()[t.index_of(f.b.polytope)];
    fc.signs_opposite = spa.sign != spb.sign;
    if (!fc.signs_opposite)
      rep.errors.push_back("fold " + std::to_string(fi) + ": polytopes \"" + f.a.polytope +
                           "\" and \"" + f.b.polytope + "\" carry the same sign");
    if (ia == built.end() || ib == built.end()) {
      rep.folds.push_back(fc);
      continue;  // construction failures already reported
    }
    const DelzantPolytope& pa = *ia->second;
    const DelzantPolytope& pb = *ib->second;
    const Halfspace& ha = pa.halfspaces()[static_cast<std::size_t>(f.a.facet)];
    const Halfspace& hb = pb.halfspaces()[static_cast<std::size_t>(f.b.facet)];
    if (ha.normal == hb.normal && ha.offset == hb.offset) {
      fc.hyperplanes_match = true;
      fc.same_side = true;
    } else if (ha.normal == negated(hb.normal) && ha.offset == -hb.offset) {
      fc.hyperplanes_match = true;
      fc.same_side = false;
    } else {
      rep.errors.push_back("fold " + std::to_string(fi) +
                           ": facet hyperplanes differ (normal " + vec_to_string(ha.normal) +
                           ", offset " + rational_to_string(ha.offset) + " vs normal " +
                           vec_to_string(hb.normal) + ", offset " + rational_to_string(hb.offset) +
                           ")");
    }

    const Face* fa = pa.is_simple() ? find_facet_face(pa, f.a.facet) : nullptr;
    const Face* fb = pb.is_simple() ? find_facet_face(pb, f.b.facet) : nullptr;
    if (fa && fb) {
      fc.facets_equal = vertex_point_set(pa, fa->vertices) == vertex_point_set(pb, fb->vertices);
      if (!fc.facets_equal)
        rep.errors.push_back("fold " + std::to_string(fi) +
                             ": fold facets are not the same polytope");
    } else {
      rep.errors.push_back("fold " + std::to_string(fi) + ": fold facet is not a facet");
    }

    if (fc.facets_equal) {
      // Local agreement: every face of the shared fold facet must see the
      // same set of supporting hyperplanes from both sides.
      fc.local_agreement = true;
      for (const Face& ga : pa.face_lattice()) {
        if (!std::binary_search(ga.facets.begin(), ga.facets.end(), f.a.facet)) continue;
        auto pts_a = vertex_point_set(pa, ga.vertices);
        const Face* gb_match = nullptr;
        for (const Face& gb : pb.face_lattice()) {
          if (!std::binary_search(gb.facets.begin(), gb.facets.end(), f.b.facet)) continue;
          if (vertex_point_set(pb, gb.vertices) == pts_a) {
            gb_match = &gb;
            break;
          }
        }
        std::set<std::pair<IntVec, Rat>> hyp_a, hyp_b;
        for (int fid : ga.facets)
          hyp_a.insert(hyperplane_key(pa.halfspaces()[static_cast<std::size_t>(fid)]));
        if (gb_match)
          for (int fid : gb_match->facets)
            hyp_b.insert(hyperplane_key(pb.halfspaces()[static_cast<std::size_t>(fid)]));
        if (!gb_match || hyp_a != hyp_b) {
          fc.local_agreement = false;
          rep.errors.push_back(
              "fold " + std::to_string(fi) +
              ": polytopes disagree near the fold at the face with vertices " + [&] {
                std::string s;
                for (const auto& v : pts_a) s += vec_to_string(v);
                return s;
              }());
          break;
        }
      }
    }
    rep.folds.push_back(fc);
  }

  // Fold graph connectivity over polytope names.
  {
    std::map<std::string, std::vector<std::string>> adj;
    for (const SignedPolytope& p : t.polytopes()) adj[p.name];
    for (const FoldSpec& f : t.folds()) {
      adj[f.a.polytope].push_back(f.b.polytope);
      adj[f.b.polytope].push_back(f.a.polytope);
    }
    std::set<std::string> seen;
    std::vector<std::string> stack{t.polytopes()[0].name};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      for (const std::string& nxt : adj[cur]) stack.push_back(nxt);
    }
    rep.fold_graph_connected = seen.size() == t.polytopes().size();
    if (!rep.fold_graph_connected)
      rep.errors.push_back("fold graph is disconnected: only " + std::to_string(seen.size()) +
                           " of " + std::to_string(t.polytopes().size()) +
                           " polytopes are reachable");
  }

  // Overlapping same-sign polytopes double-count lattice points; warn.
  for (std::size_t i = 0; i < t.polytopes().size(); ++i) {
    for (std::size_t j = i + 1; j < t.polytopes().size(); ++j) {
      const SignedPolytope& a = t.polytopes()[i];
      const SignedPolytope& b = t.polytopes()[j];
      if (a.sign != b.sign) continue;
      auto ba = built.find(a.name);
      auto bb = built.find(b.name);
      if (ba == built.end() || bb == built.end()) continue;
      if (share_lattice_point(*ba->second, *bb->second))
        rep.warnings.push_back("polytopes \"" + a.name + "\" and \"" + b.name +
                               "\" share lattice points and carry the same sign; "
                               "their contributions add up");
    }
  }

  bool folds_ok = true;
  for (const FoldCheck& fc : rep.folds) folds_ok = folds_ok && fc.ok();
  bool polys_ok = true;
  for (const PolytopeCheck& pc : rep.polytopes) polys_ok = polys_ok && pc.built && pc.delzant;
  rep.accepted = polys_ok && folds_ok && rep.fold_graph_connected;
  return rep;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const PolytopeCheck& pc : polytopes) {
    os << "polytope " << pc.name << ": ";
    if (!pc.built)
      os << "rejected (" << pc.build_error << ")\n";
    else if (!pc.delzant)
      os << "not Delzant\n";
    else
      os << "delzant ok (" << pc.report.vertices.size() << " vertices, all unimodular)\n";
  }
  for (const FoldCheck& fc : folds) {
    os << "fold " << fc.fold << ": ";
    if (!fc.hyperplanes_match)
      os << "hyperplane mismatch";
    else
      os << "hyperplane match (" << (fc.same_side ? "same-side" : "mirrored") << ")";
    os << ", facets " << (fc.facets_equal ? "equal" : "differ") << ", local agreement "
       << (fc.local_agreement ? "ok" : "violated") << ", signs "
       << (fc.signs_opposite ? "opposite" : "equal") << "\n";
  }
  os << "fold graph " << (fold_graph_connected ? "connected" : "disconnected") << "\n";
  for (const std::string& w : warnings) os << "warning: " << w << "\n";
  for (const std::string& e : errors) os << "error: " << e << "\n";
  os << "result: " << (accepted ? "ACCEPTED" : "REJECTED") << "\n";
  return os.str();
}

std::size_t BuiltTemplate::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw UnknownPolytopeName("unknown polytope \"" + name + "\"");
}

BuiltTemplate build_template(const OrigamiTemplate& t) {
  ValidationReport rep = validate_template(t);
  if (!rep.accepted) {
    std::string msg = "template failed validation";
    for (const std::string& e : rep.errors) msg += "; " + e;
    throw InvalidTemplate(msg);
  }
  BuiltTemplate bt;
  bt.dimension = t.dimension();
  for (const SignedPolytope& sp : t.polytopes()) {
    bt.names.push_back(sp.name);
    bt.signs.push_back(sp.sign);
    bt.polytopes.push_back(sp.build());
  }
  bt.folds = t.folds();
  return bt;
}

DelzantPolytope gen_simplex(int n, const Rat& size) {
  if (n < 1) throw DimensionMismatch("simplex dimension must be at least 1");
  if (size <= 0) throw Error("simplex size must be positive");
  std::vector<Halfspace> hs;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    hs.emplace_back(std::move(e), Rat(0));
  }
  hs.emplace_back(IntVec(static_cast<std::size_t>(n), -1), size);
  return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

OrigamiTemplate gen_sphere_template(int n, const Rat& size) {
  DelzantPolytope half = gen_simplex(n, size / 2);
  SignedPolytope plus{"plus", +1, n, half.halfspaces()};
  SignedPolytope minus{"minus", -1, n, half.halfspaces()};
  FoldSpec fold;
  fold.a = FoldSide{"plus", n};  // the diagonal facet comes last in gen_simplex
  fold.b = FoldSide{"minus", n};
  return OrigamiTemplate(n, {std::move(plus), std::move(minus)}, {std::move(fold)});
}

DelzantPolytope gen_product(const DelzantPolytope& a, const DelzantPolytope& b) {
  int n = a.dimension() + b.dimension();
  std::vector<Halfspace> hs;
  for (const Halfspace& h : a.halfspaces()) {
    IntVec normal = h.normal;
    normal.resize(static_cast<std::size_t>(n), 0);
    hs.emplace_back(std::move(normal), h.offset);
  }
  for (const Halfspace& h : b.halfspaces()) {
    IntVec normal(static_cast<std::size_t>(a.dimension()), 0);
    normal.insert(normal.end(), h.normal.begin(), h.normal.end());
    hs.emplace_back(std::move(normal), h.offset);
  }
  return DelzantPolytope::from_halfspaces(n, std::move(hs));
}

DelzantPolytope gen_hirzebruch(int a, const Rat& width, const Rat& height) {
  if (a < 0) throw Error("hirzebruch twist must be nonnegative");
  if (width <= 0 || height <= 0) throw Error("hirzebruch sides must be positive");
  std::vector<Halfspace> hs;
  hs.emplace_back(IntVec{1, 0}, Rat(0));
  hs.emplace_back(IntVec{0, 1}, Rat(0));
  hs.emplace_back(IntVec{0, -1}, height);
  hs.emplace_back(IntVec{-1, -Int(a)}, width + Rat(a) * height);
  return DelzantPolytope::from_halfspaces(2, std::move(hs));
}

OrigamiTemplate gen_double_template(const DelzantPolytope& p, int fold_facet) {
  if (fold_facet < 0 || fold_facet >= static_cast<int>(p.halfspaces().size()))
    throw Error("fold facet index out of range");
  SignedPolytope plus{"plus", +1, p.dimension(), p.halfspaces()};
  SignedPolytope minus{"minus", -1, p.dimension(), p.halfspaces()};
  FoldSpec fold;
  fold.a = FoldSide{"plus", fold_facet};
  fold.b = FoldSide{"minus", fold_facet};
  return OrigamiTemplate(p.dimension(), {std::move(plus), std::move(minus)}, {std::move(fold)});
}

OrigamiTemplate gen_single_template(const DelzantPolytope& p, const std::string& name, int sign) {
  SignedPolytope sp{name, sign, p.dimension(), p.halfspaces()};
  return OrigamiTemplate(p.dimension(), {std::move(sp)}, {});
}

}  // namespace origamiq
