#include "isoprod/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isoprod {

nlohmann::json RunConfig::to_json() const {
  return nlohmann::json{{"characters", characters},
                        {"collection", collection},
                        {"command", command},
                        {"format", format},
                        {"phantom_a", phantom_a},
                        {"phantom_b", phantom_b},
                        {"preset", preset},
                        {"scan_bound", scan_bound},
                        {"surface_file", surface_file},
                        {"window", window}};
}

namespace {

std::vector<std::int64_t> parse_ints(const std::string& s, char sep) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

}  // namespace

ProductQuotientSurface parse_surface_description(const std::string& text) {
  std::optional<FinAbGroup> group;
  struct CurveBlock {
    std::string name;
    std::int64_t genus = -1;
    std::vector<Orbit> orbits;
  };
  std::vector<CurveBlock> curves;

  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "group") {
      std::vector<std::int64_t> orders;
      std::int64_t n;
      while (ls >> n) orders.push_back(n);
      group = FinAbGroup(orders);
    } else if (word == "curve") {
      CurveBlock cb;
      std::string kw;
      if (!(ls >> cb.name >> kw >> cb.genus) || kw != "genus")
        throw std::invalid_argument("expected: curve NAME genus G");
      curves.push_back(std::move(cb));
    } else if (word == "orbit") {
      if (!group) throw std::invalid_argument("orbit before group line");
      if (curves.empty()) throw std::invalid_argument("orbit before curve line");
      std::string label;
      ls >> label;
      std::vector<std::int64_t> coords;
      std::int64_t v;
      while (ls >> v) coords.push_back(v);
      curves.back().orbits.push_back(Orbit{label, group_reduce(*group, coords), 0});
    } else {
      throw std::invalid_argument("unrecognized directive: " + word);
    }
  }
  if (!group) throw std::invalid_argument("missing group line");
  if (curves.size() != 2) throw std::invalid_argument("expected exactly two curve blocks");
  CurveWithAction c(curves[0].name, curves[0].genus, *group, curves[0].orbits, 0);
  CurveWithAction d(curves[1].name, curves[1].genus, *group, curves[1].orbits, 0);
  return ProductQuotientSurface(std::move(c), std::move(d));
}

ProductQuotientSurface load_surface(const RunConfig& cfg) {
  if (!cfg.surface_file.empty()) {
    std::ifstream f(cfg.surface_file);
    if (!f) throw std::invalid_argument("cannot open surface file: " + cfg.surface_file);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_surface_description(os.str());
  }
  if (cfg.preset.empty()) throw std::invalid_argument("no preset or surface file given");
  return make_preset(cfg.preset);
}

std::vector<EquivariantLineBundle> default_quadruple(const ProductQuotientSurface& s) {
  if (s.classes_c().orbit_count() < 2 || s.classes_d().orbit_count() < 2)
    throw std::invalid_argument("the default quadruple needs two orbits on each curve");
  auto cc = [&](std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> v(s.classes_c().orbit_count(), 0);
    v[0] = a;
    v[1] = b;
    return s.classes_c().from_coeffs(v);
  };
  auto dd = [&](std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> v(s.classes_d().orbit_count(), 0);
    v[0] = a;
    v[1] = b;
    return s.classes_d().from_coeffs(v);
  };
  const Character triv = trivial_character(s.group());
  return {EquivariantLineBundle{cc(0, 0), dd(0, 0), triv},
          EquivariantLineBundle{cc(-2, 1), dd(0, 0), triv},
          EquivariantLineBundle{cc(0, 0), dd(-2, 1), triv},
          EquivariantLineBundle{cc(-2, 1), dd(-2, 1), triv}};
}

std::vector<EquivariantLineBundle> parse_collection(const std::string& spec,
                                                    const ProductQuotientSurface& s) {
  std::vector<EquivariantLineBundle> out;
  std::istringstream is(spec);
  std::string member;
  while (std::getline(is, member, ';')) {
    if (member.empty()) continue;
    std::string coeffs = member;
    Character chi = trivial_character(s.group());
    if (auto at = member.find('@'); at != std::string::npos) {
      coeffs = member.substr(0, at);
      chi = character_reduce(s.group(), parse_ints(member.substr(at + 1), ','));
    }
    auto v = parse_ints(coeffs, ',');
    if (v.size() != 4)
      throw std::invalid_argument("collection member needs 4 coefficients (a,b over E1,E2; c,d over F1,F2)");
    std::vector<std::int64_t> cvec(s.classes_c().orbit_count(), 0);
    cvec[0] = v[0];
    cvec[1] = v[1];
    std::vector<std::int64_t> dvec(s.classes_d().orbit_count(), 0);
    dvec[0] = v[2];
    dvec[1] = v[3];
    out.push_back(EquivariantLineBundle{s.classes_c().from_coeffs(cvec), s.classes_d().from_coeffs(dvec), chi});
  }
  if (out.empty()) throw std::invalid_argument("empty collection spec");
  return out;
}

namespace {

nlohmann::json class_group_json(const DivisorClassGroup& g) {
  AbGroupDescriptor d{g.base().free_rank(), g.base().torsion()};
  nlohmann::json orbits = nlohmann::json::array();
  for (std::size_t i = 0; i + 1 < g.generator_labels().size(); ++i)
    orbits.push_back(nlohmann::json{{"degree", g.degree_map()[i]}, {"label", g.generator_labels()[i]}});
  // relation rows and the transform that diagonalizes them, so normal-form
  // reductions in this report can be replayed by an external checker
  nlohmann::json relations = nlohmann::json::array();
  const IntMatrix& rel = g.base().relations();
  for (std::int64_t r = 0; r < rel.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::int64_t c = 0; c < rel.cols; ++c) row.push_back(rel.at(r, c));
    relations.push_back(std::move(row));
  }
  nlohmann::json right = nlohmann::json::array();
  const IntMatrix& v = g.base().snf().right;
  for (std::int64_t r = 0; r < v.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::int64_t c = 0; c < v.cols; ++c) row.push_back(v.at(r, c));
    right.push_back(std::move(row));
  }
  return nlohmann::json{{"group", d},
                        {"invariant_factors", g.base().snf().invariant_factors},
                        {"snf_diagonal", g.base().snf().diagonal},
                        {"relations", relations},
                        {"right_transform", right},
                        {"orbits", orbits},
                        {"fiber_degree", g.group_order()},
                        {"canonical_class", g.canonical()}};
}

std::vector<EquivariantLineBundle> resolve_collection(const RunConfig& cfg,
                                                      const ProductQuotientSurface& s) {
  std::vector<EquivariantLineBundle> coll =
      cfg.collection.empty() ? default_quadruple(s) : parse_collection(cfg.collection, s);
  if (cfg.characters != "trivial" && cfg.characters != "all") {
    // explicit character list, one weight tuple per member
    std::istringstream is(cfg.characters);
    std::string item;
    std::size_t i = 0;
    while (std::getline(is, item, ';')) {
      if (i >= coll.size()) throw std::invalid_argument("more characters than members");
      coll[i].character = character_reduce(s.group(), parse_ints(item, ','));
      ++i;
    }
    if (i != coll.size()) throw std::invalid_argument("character list length mismatch");
  }
  return coll;
}

void summarize_cert(Report& r, const ExceptionalCertificate& cert) {
  if (cert.valid) {
    ++r.pass;
  } else if (cert.undetermined) {
    ++r.undetermined;
  } else {
    ++r.fail;
  }
}

}  // namespace

Report cmd_describe(const RunConfig& cfg) {
  Report r;
  ProductQuotientSurface s = load_surface(cfg);
  SurfaceInvariants inv = noether_invariants(s);
  r.results["surface"] = nlohmann::json{
      {"genus_c", s.curve_c().genus()},
      {"genus_d", s.curve_d().genus()},
      {"group", s.group().cyclic_orders()},
      {"group_order", s.group_order()},
      {"free_action", freeness_check(s.curve_c(), s.curve_d()).free},
      {"canonical_bidegree", s.canonical_bidegree()}};
  r.results["invariants"] = inv;
  r.results["class_group_c"] = class_group_json(s.classes_c());
  r.results["class_group_d"] = class_group_json(s.classes_d());
  r.results["max_length"] = max_length(s);
  r.results["hh_dims"] = hkr_homology(s);
  ++r.pass;
  return r;
}

Report cmd_verify(const RunConfig& cfg) {
  Report r;
  ProductQuotientSurface s = load_surface(cfg);
  std::vector<EquivariantLineBundle> coll = resolve_collection(cfg, s);

  ExceptionalCertificate cert = verify_exceptional_sequence(coll, s);
  r.results["exceptional"] = cert;
  summarize_cert(r, cert);

  if (cfg.characters == "all") {
    // Sweep all difference-character choices; the first member keeps its
    // character (twisting everything is verdict-invariant).
    const auto chars = characters(s.group());
    std::int64_t combos = 1;
    for (std::size_t i = 1; i < coll.size(); ++i) {
      combos = checked_mul(combos, static_cast<std::int64_t>(chars.size()));
      if (combos > 1000000) throw std::invalid_argument("character sweep too large");
    }
    std::int64_t valid = 0, invalid = 0, open = 0;
    std::vector<std::size_t> pick(coll.size(), 0);
    while (true) {
      std::vector<EquivariantLineBundle> tw = coll;
      for (std::size_t i = 1; i < tw.size(); ++i) tw[i].character = chars[pick[i]];
      ExceptionalCertificate c2 = verify_exceptional_sequence(tw, s);
      if (c2.valid) ++valid;
      else if (c2.undetermined) ++open;
      else ++invalid;
      std::size_t i = 1;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < chars.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size() || pick.size() <= 1) break;
    }
    r.results["character_sweep"] =
        nlohmann::json{{"combinations", combos}, {"valid", valid}, {"invalid", invalid}, {"undetermined", open}};
    if (invalid > 0) ++r.fail;
    else if (open > 0) ++r.undetermined;
    else ++r.pass;
  }

  if (cert.valid) {
    r.results["heights"] = height_conclusion(coll, s);
    r.results["hochschild"] = quasiphantom_verdict(cert, s);
    if (coll.size() == 4) {
      r.results["formality"] = formality_certificate(coll, s);
      r.results["deformation"] = deformation_invariance_certificate(s);
    }
  }

  r.exit_code = r.fail > 0 ? 1 : (r.undetermined > 0 ? 3 : 0);
  return r;
}

Report cmd_search(const RunConfig& cfg) {
  Report r;
  ProductQuotientSurface s = load_surface(cfg);
  SearchWindow w;
  w.lo = -cfg.window;
  w.hi = cfg.window;
  w.sweep_characters = cfg.characters == "all";
  SearchResult res = search_sequences(w, s);
  r.results["search"] = res;
  r.pass = static_cast<std::int64_t>(res.found.size());
  r.undetermined = static_cast<std::int64_t>(res.undetermined.size());
  r.exit_code = 0;
  return r;
}

Report cmd_height(const RunConfig& cfg) {
  Report r;
  ProductQuotientSurface s = load_surface(cfg);
  std::vector<EquivariantLineBundle> coll = resolve_collection(cfg, s);
  ExceptionalCertificate cert = verify_exceptional_sequence(coll, s);
  HeightReport rep = height_conclusion(coll, s);
  r.results["heights"] = rep;
  const bool hard_failure = (!cert.valid && !cert.undetermined) ||
                            rep.hom_free.verdict == CheckVerdict::fail || rep.cyclic.connected;
  if (rep.height_value) {
    ++r.pass;
    r.exit_code = 0;
  } else if (hard_failure) {
    ++r.fail;
    r.exit_code = 1;
  } else {
    ++r.undetermined;
    r.exit_code = 3;
  }
  return r;
}

Report cmd_nogo(const RunConfig& cfg) {
  Report r;
  NoGoReport rep;
  if (cfg.preset == "z2^3")
    rep = no_go_z2_cubed(cfg.scan_bound > 0 ? cfg.scan_bound : 100);
  else if (cfg.preset == "z2^4")
    rep = no_go_z2_fourth(cfg.scan_bound > 0 ? cfg.scan_bound : 200);
  else
    throw std::invalid_argument("nogo needs --preset z2^3 or z2^4");
  r.results["nogo"] = rep;
  if (rep.unsatisfiable && rep.scan_agrees) {
    ++r.pass;
    r.exit_code = 0;
  } else {
    ++r.fail;
    r.exit_code = 1;
  }
  return r;
}

Report cmd_phantom_pair(const RunConfig& cfg) {
  Report r;
  PhantomVerdict v = phantom_pairing(cfg.phantom_a, cfg.phantom_b);
  r.results["phantom"] = v;
  if (v.phantom) {
    ++r.pass;
    r.exit_code = 0;
  } else {
    ++r.undetermined;
    r.exit_code = 3;
  }
  return r;
}

Report run_command(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (cfg.command == "describe") r = cmd_describe(cfg);
    else if (cfg.command == "verify") r = cmd_verify(cfg);
    else if (cfg.command == "search") r = cmd_search(cfg);
    else if (cfg.command == "height") r = cmd_height(cfg);
    else if (cfg.command == "nogo") r = cmd_nogo(cfg);
    else if (cfg.command == "phantom-pair") r = cmd_phantom_pair(cfg);
    else throw std::invalid_argument("unknown command: " + cfg.command);
  } catch (const std::exception& e) {
    r = Report{};
    r.results["error"] = e.what();
    r.fail = 1;
    r.exit_code = 2;
  }
  r.command = cfg.command;
  r.config = cfg.to_json();
  r.config_hash = fnv1a_hex(r.config.dump());
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::string profile_line(const nlohmann::json& p) {
  auto cell = [](const nlohmann::json& c) -> std::string {
    if (c.contains("exact")) return c["exact"].dump();
    if (c.contains("value")) return c["value"].dump();
    if (c.contains("range")) return c["range"][0].dump() + ".." + c["range"][1].dump();
    return c.dump();
  };
  std::ostringstream os;
  os << "total (" << cell(p["total"][0]) << ", " << cell(p["total"][1]) << ", " << cell(p["total"][2])
     << ")  invariant (" << cell(p["invariant"][0]) << ", " << cell(p["invariant"][1]) << ", "
     << cell(p["invariant"][2]) << ")  chi_S = " << p["chi_s"].dump();
  return os.str();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  if (r.results.contains("error")) {
    os << "error: " << r.results["error"].get<std::string>() << "\n";
    return os.str();
  }
  if (r.results.contains("surface")) {
    const auto& s = r.results["surface"];
    os << "surface: |G| = " << s["group_order"] << ", g_C = " << s["genus_c"]
       << ", g_D = " << s["genus_d"] << ", free action: " << s["free_action"] << "\n";
    const auto& inv = r.results["invariants"];
    os << "invariants: chi(O) = " << inv["chi_o"] << ", K^2 = " << inv["k_squared"]
       << ", chi_top = " << inv["chi_top"] << ", b2 = " << inv["b2"] << "\n";
    if (inv.contains("pic")) os << "Pic(S) = " << inv["pic"]["shape"].get<std::string>() << "\n";
    if (inv.contains("k_group")) os << "K(S) = " << inv["k_group"]["shape"].get<std::string>() << "\n";
    if (inv.contains("h1")) os << "H_1(S) = " << inv["h1"]["shape"].get<std::string>() << "\n";
    for (const char* key : {"class_group_c", "class_group_d"}) {
      const auto& cg = r.results[key];
      os << key << ": " << cg["group"]["shape"].get<std::string>() << " ("
         << cg["orbits"].size() << " ramification orbits)\n";
    }
    os << "max exceptional length: " << r.results["max_length"] << "\n";
  }
  if (r.results.contains("exceptional")) {
    const auto& c = r.results["exceptional"];
    os << "collection of " << c["collection"].size() << ": valid = " << c["valid"]
       << ", undetermined = " << c["undetermined"] << ", maximal = " << c["maximal"] << "\n";
    for (const auto& p : c["pairs"])
      os << "  Ext(L" << p["later"].get<int>() + 1 << " -> L" << p["earlier"].get<int>() + 1
         << "): " << profile_line(p["profile"]) << "  [" << p["verdict"].get<std::string>() << "]\n";
    if (c.contains("failure"))
      os << "  failure witness: pair (L" << c["failure"]["later"].get<int>() + 1 << " -> L"
         << c["failure"]["earlier"].get<int>() + 1 << ")\n";
  }
  if (r.results.contains("character_sweep")) {
    const auto& cs = r.results["character_sweep"];
    os << "character sweep: " << cs["combinations"] << " combinations, valid " << cs["valid"]
       << ", invalid " << cs["invalid"] << ", undetermined " << cs["undetermined"] << "\n";
  }
  if (r.results.contains("heights")) {
    const auto& h = r.results["heights"];
    os << "heights: hom-free = " << h["hom_free"]["hom_free"] << ", cyclically Ext1-connected = "
       << h["cyclic_ext1"]["connected"] << ", h0(2K) = " << h["h0_two_canonical"] << "\n";
    if (h.contains("pseudoheight")) os << "pseudoheight = " << h["pseudoheight"] << ", height = " << h["height"] << "\n";
    os << "restriction: ";
    for (const auto& row : h["restriction"]["table"])
      os << "HH^" << row["degree"] << " " << row["status"].get<std::string>() << "; ";
    os << "\n";
  }
  if (r.results.contains("hochschild")) {
    const auto& q = r.results["hochschild"];
    os << "hochschild: HH(S) total = " << q["hh_total"] << ", complement = " << q["hh_complement"].dump();
    if (q.contains("k_complement")) os << ", K(A) = " << q["k_complement"]["shape"].get<std::string>();
    os << ", quasiphantom = " << q["quasiphantom"] << "\n";
  }
  if (r.results.contains("formality"))
    os << "formality: certified = " << r.results["formality"]["certified"] << "\n";
  if (r.results.contains("deformation"))
    os << "deformation invariance: certified = " << r.results["deformation"]["certified"] << "\n";
  if (r.results.contains("search")) {
    const auto& s = r.results["search"];
    os << "search: " << s["distinct_bundles"] << " bundles, " << s["candidates_considered"]
       << " candidates, " << s["found_count"] << " valid sequences, " << s["undetermined_count"]
       << " undetermined\n";
    for (const auto& f : s["found"]) {
      os << "  sequence:";
      for (const auto& m : f["collection"]) {
        os << " (";
        const auto& cc = m["c"]["coeffs"];
        const auto& dc = m["d"]["coeffs"];
        for (std::size_t i = 0; i + 1 < cc.size(); ++i) os << (i ? "," : "") << cc[i].get<std::int64_t>();
        os << " | ";
        for (std::size_t i = 0; i + 1 < dc.size(); ++i) os << (i ? "," : "") << dc[i].get<std::int64_t>();
        os << ")";
      }
      os << (f["maximal"].get<bool>() ? "  [maximal]" : "") << "\n";
    }
  }
  if (r.results.contains("nogo")) {
    const auto& n = r.results["nogo"];
    os << "no-go " << n["label"].get<std::string>() << ": obstruction " << n["obstruction"].get<std::string>()
       << ", lattice " << n["lattice"] << "Z\n";
    for (const auto& st : n["residue_proof"])
      os << "  - " << st["statement"].get<std::string>() << " [" << (st["verified"].get<bool>() ? "ok" : "FAILED")
         << "]\n";
    os << "  verdict: " << (n["unsatisfiable"].get<bool>() ? "UNSATISFIABLE" : "satisfiable")
       << "; bounded scan (" << n["tuples_scanned"] << " tuples, bound " << n["scan_bound"]
       << "): " << n["solutions"] << " solutions\n";
    os << "  scope: " << n["scope"].get<std::string>() << "\n";
  }
  if (r.results.contains("phantom")) {
    const auto& p = r.results["phantom"];
    os << "phantom pairing: gcd(" << p["torsion_a"] << ", " << p["torsion_b"] << ") = " << p["gcd"]
       << " -> " << p["verdict"].get<std::string>() << "\n";
  }
  os << "summary: pass " << r.pass << ", fail " << r.fail << ", undetermined " << r.undetermined
     << " (exit " << r.exit_code << ")\n";
  return os.str();
}

}  // namespace isoprod
