#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcfw/cad.hpp"
#include "rcfw/errors.hpp"
#include "rcfw/formula.hpp"
#include "rcfw/param.hpp"
#include "rcfw/pl.hpp"
#include "rcfw/polyparse.hpp"
#include "rcfw/sa.hpp"
#include "rcfw/schemas.hpp"
#include "rcfw/topo.hpp"

using namespace rcfw;
using nlohmann::json;

namespace {

constexpr long kMaxSearchBudget = 10000000;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

std::vector<Rat> parse_rat_vector(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    auto r = rat_parse(cur);
    if (!r) throw std::invalid_argument("bad rational '" + cur + "'");
    out.push_back(*r);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return out;
}

std::string point_str(const std::vector<AlgReal>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

json point_json(const std::vector<AlgReal>& p) {
  json a = json::array();
  for (const AlgReal& c : p) a.push_back(c.str());
  return a;
}

const SaDescription& pick_set(const std::vector<NamedSet>& sets, const std::string& name) {
  for (const NamedSet& s : sets)
    if (s.name == name) return s.desc;
  throw std::invalid_argument("no set named '" + name + "' in the input");
}

ParamPoint param_from_json(const std::string& text) {
  json j = json::parse(text);
  ParamPoint a;
  a.n = j.at("n").get<int>();
  a.p = j.at("p").get<unsigned>();
  a.q = j.at("q").get<unsigned>();
  a.selector = Int(j.at("selector").get<std::string>());
  for (const json& blk : j.at("blocks")) {
    std::vector<Rat> b;
    for (const json& v : blk) {
      auto r = rat_parse(v.get<std::string>());
      if (!r) throw std::invalid_argument("bad rational in parameter blocks");
      b.push_back(*r);
    }
    a.blocks.push_back(std::move(b));
  }
  return a;
}

json param_to_json(const ParamPoint& a) {
  json j;
  j["n"] = a.n;
  j["p"] = a.p;
  j["q"] = a.q;
  j["selector"] = a.selector.get_str();
  json blocks = json::array();
  for (const auto& b : a.blocks) {
    json blk = json::array();
    for (const Rat& r : b) blk.push_back(rat_str(r));
    blocks.push_back(std::move(blk));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

json set_to_json(const SaDescription& d) {
  json j;
  j["ambient"] = d.ambient;
  json cs = json::array();
  for (const auto& conj : d.conjuncts) {
    json cj = json::array();
    for (const SignCond& a : conj)
      cj.push_back({{"poly", a.poly.str()}, {"rel", rel_str(a.rel)}});
    cs.push_back(std::move(cj));
  }
  j["conjuncts"] = std::move(cs);
  return j;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rcfw: a workbench for semialgebraic sets over the rationals.\n"
      "Sets are given in the `set S in R^n := { ... }` text form; exact\n"
      "cylindrical decomposition backs the geometric queries."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success/accept/true, 1 reject/false, 2 capacity or\n"
      "unsupported input, 3 usage or parse error.\n\n"
      "Hard limits: quantified variables per component <= 3; polynomial\n"
      "degree <= 32; prepared polynomials per level <= 160; schema\n"
      "dimension n <= 8; parameter blocks p <= 8; facet size <= 20\n"
      "vertices; search budget <= 10000000. RCFW_THREADS caps the OpenMP\n"
      "workers used by decomposition and batch membership.");

  bool as_json = false;
  int rc = 0;
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "machine-readable output"); };

  // describe
  std::string desc_in = "-";
  auto* sc_describe = app.add_subcommand("describe", "complexity measures of a set file");
  sc_describe->add_option("input", desc_in, "set file, - for stdin");
  add_json(sc_describe);
  sc_describe->callback([&] {
    std::vector<NamedSet> sets = parse_sets(read_input(desc_in));
    if (as_json) {
      json j;
      j["sets"] = json::array();
      for (const NamedSet& s : sets) {
        Complexity c = complexity_of(s.desc);
        j["sets"].push_back({{"name", s.name}, {"n", s.desc.ambient}, {"p", c.p}, {"q", c.q}});
      }
      emit_json(j);
    } else if (sets.size() == 1) {
      Complexity c = complexity_of(sets[0].desc);
      std::cout << "n=" << sets[0].desc.ambient << " p=" << c.p << " q=" << c.q << "\n";
    } else {
      for (const NamedSet& s : sets) {
        Complexity c = complexity_of(s.desc);
        std::cout << s.name << ": n=" << s.desc.ambient << " p=" << c.p << " q=" << c.q << "\n";
      }
    }
  });

  // encode
  std::string enc_in = "-";
  unsigned enc_p = 0, enc_q = 0;
  auto* sc_encode = app.add_subcommand("encode", "encode one set as a parameter-space point");
  sc_encode->add_option("input", enc_in, "set file, - for stdin");
  auto* enc_po = sc_encode->add_option("-p", enc_p, "blocks (default: measured atom count)");
  auto* enc_qo = sc_encode->add_option("-q", enc_q, "degree bound (default: measured)");
  add_json(sc_encode);
  sc_encode->callback([&] {
    SaDescription d = parse_description(read_input(enc_in));
    Complexity c = complexity_of(d);
    ParamPoint a = encode(d, enc_po->count() ? enc_p : c.p, enc_qo->count() ? enc_q : c.q);
    if (as_json)
      emit_json(param_to_json(a));
    else
      std::cout << write_param(a);
  });

  // decode
  std::string dec_in = "-";
  auto* sc_decode = app.add_subcommand("decode", "decode a parameter-space point into a set");
  sc_decode->add_option("input", dec_in, "param file (text or JSON), - for stdin");
  add_json(sc_decode);
  sc_decode->callback([&] {
    std::string text = read_input(dec_in);
    std::size_t i = text.find_first_not_of(" \t\r\n");
    ParamPoint a = (i != std::string::npos && text[i] == '{') ? param_from_json(text)
                                                              : read_param_text(text);
    SaDescription d = decode(a);
    if (as_json)
      emit_json(set_to_json(d));
    else
      std::cout << print_description(d) << "\n";
  });

  // emit
  auto* sc_emit = app.add_subcommand("emit", "compile predicate schemas to formulas");
  sc_emit->require_subcommand(1);
  auto put_formula = [&](const FormulaPtr& f) {
    if (as_json)
      emit_json(json{{"formula", serialize(f)}});
    else
      std::cout << serialize(f) << "\n";
  };

  std::string sub_in = "-";
  int sub_m = 0, sub_r = 0, sub_nash_l = 0;
  auto* sc_sub = sc_emit->add_subcommand("submanifold", "local graph predicate for one set");
  sc_sub->add_option("input", sub_in, "set file, - for stdin");
  sc_sub->add_option("--m", sub_m, "graph dimension")->required();
  sc_sub->add_option("--r", sub_r, "0 = continuity, 1 = first differentiability");
  auto* sub_nash = sc_sub->add_option("--nash", sub_nash_l, "smooth reading with threshold l");
  add_json(sc_sub);
  sc_sub->callback([&] {
    SaDescription d = parse_description(read_input(sub_in));
    PredicateInstance inst;
    inst.schema = SchemaId::Submanifold;
    inst.n = d.ambient;
    inst.m = sub_m;
    inst.r = sub_r;
    if (sub_nash->count()) {
      inst.nash = true;
      inst.nash_l = sub_nash_l;
    }
    inst.set = bind_set(d);
    put_formula(compile_submanifold(inst));
  });

  std::string bd_in = "-", bd_set = "S", bd_piece = "T";
  int bd_m = 0, bd_r = 0, bd_nash_l = 0;
  auto* sc_bd = sc_emit->add_subcommand("boundary", "interior plus boundary predicate");
  sc_bd->add_option("input", bd_in, "file with the subject and the boundary piece");
  sc_bd->add_option("--m", bd_m, "graph dimension of the interior")->required();
  sc_bd->add_option("--r", bd_r, "0 = continuity, 1 = first differentiability");
  auto* bd_nash = sc_bd->add_option("--nash", bd_nash_l, "smooth reading with threshold l");
  sc_bd->add_option("--set", bd_set, "subject set name");
  sc_bd->add_option("--piece", bd_piece, "boundary piece name");
  add_json(sc_bd);
  sc_bd->callback([&] {
    std::vector<NamedSet> sets = parse_sets(read_input(bd_in));
    const SaDescription& S = pick_set(sets, bd_set);
    const SaDescription& T = pick_set(sets, bd_piece);
    PredicateInstance inst;
    inst.schema = SchemaId::Boundary;
    inst.n = S.ambient;
    inst.m = bd_m;
    inst.r = bd_r;
    if (bd_nash->count()) {
      inst.nash = true;
      inst.nash_l = bd_nash_l;
    }
    inst.set = bind_set(S);
    put_formula(compile_boundary(inst, bind_set(T)));
  });

  //   homeo and collapse share their option shape
  struct MapOpts {
    std::string in = "-", from = "X", to = "Y", graph = "G";
    bool symbolic = false;
    int n = 0;
  };
  MapOpts ho, co;
  auto add_map_opts = [&](CLI::App* s, MapOpts& o) {
    s->add_option("input", o.in, "file with the two sets and the graph relation");
    s->add_option("--from", o.from, "domain set name");
    s->add_option("--to", o.to, "codomain set name");
    s->add_option("--graph", o.graph, "graph relation name (ambient 2n)");
    s->add_flag("--symbolic", o.symbolic, "free coefficient families instead of sets");
    s->add_option("--n", o.n, "ambient dimension (symbolic mode)");
    add_json(s);
  };
  auto map_bindings = [&](const MapOpts& o) {
    std::vector<NamedSet> sets = parse_sets(read_input(o.in));
    const SaDescription& X = pick_set(sets, o.from);
    const SaDescription& Y = pick_set(sets, o.to);
    const SaDescription& G = pick_set(sets, o.graph);
    if (Y.ambient != X.ambient || G.ambient != 2 * X.ambient)
      throw std::invalid_argument("expected matching ambients: X, Y in R^n and G in R^2n");
    return std::tuple<Binding, Binding, Binding, int>{bind_set(X), bind_set(Y), bind_set(G),
                                                      X.ambient};
  };
  auto* sc_ho = sc_emit->add_subcommand("homeo", "graph-of-homeomorphism predicate");
  add_map_opts(sc_ho, ho);
  sc_ho->callback([&] {
    if (ho.symbolic) {
      put_formula(compile_homeomorphism(ho.from, ho.to, ho.graph, ho.n));
      return;
    }
    auto [X, Y, G, n] = map_bindings(ho);
    put_formula(compile_homeomorphism(X, Y, G, n));
  });
  auto* sc_co = sc_emit->add_subcommand("collapse", "elementary collapse predicate");
  add_map_opts(sc_co, co);
  sc_co->callback([&] {
    if (co.symbolic) {
      put_formula(compile_collapse(co.from, co.to, co.graph, co.n));
      return;
    }
    auto [X, Y, G, n] = map_bindings(co);
    put_formula(compile_collapse(X, Y, G, n));
  });

  // decide
  std::string d_sentence, d_file;
  bool d_sexpr = false;
  auto* sc_decide = app.add_subcommand("decide", "exact truth of a closed sentence");
  sc_decide->add_option("sentence", d_sentence, "e.g. 'forall x. x^2+1>0'");
  auto* d_fo = sc_decide->add_option("-f,--file", d_file, "read the sentence from a file");
  sc_decide->add_flag("--sexpr", d_sexpr, "input is serialized s-expression form");
  add_json(sc_decide);
  sc_decide->callback([&] {
    std::string text = d_fo->count() ? read_input(d_file) : d_sentence;
    if (text.empty()) throw std::invalid_argument("no sentence given");
    FormulaPtr f = d_sexpr ? parse_formula_sexpr(text) : parse_formula(text);
    std::set<std::string> fv = free_vars(f);
    if (!fv.empty()) {
      std::string names;
      for (const std::string& v : fv) names += (names.empty() ? "" : ", ") + v;
      throw std::invalid_argument("the sentence has free variables: " + names);
    }
    bool value = decide(f);
    if (as_json)
      emit_json(json{{"value", value}});
    else
      std::cout << (value ? "true" : "false") << "\n";
    rc = value ? 0 : 1;
  });

  // cad
  std::string cad_in = "-", cad_equal, cad_locate;
  bool cad_cells = false, cad_empty = false;
  unsigned cad_cap = kMaxCadDegree;
  auto* sc_cad = app.add_subcommand("cad", "decompose a set and query its geometry");
  sc_cad->add_option("input", cad_in, "set file, - for stdin");
  sc_cad->add_flag("--cells", cad_cells, "list every cell of the decomposition");
  auto* cad_eo = sc_cad->add_flag("--empty", cad_empty, "report emptiness only");
  auto* cad_qo = sc_cad->add_option("--equal", cad_equal, "compare against a second set file");
  sc_cad->add_option("--locate", cad_locate, "rational point to place, e.g. '1/2, 0'");
  sc_cad->add_option("--degree-cap", cad_cap, "reject inputs above this degree");
  cad_eo->excludes(cad_qo);
  add_json(sc_cad);
  sc_cad->callback([&] {
    if (cad_cap > kMaxCadDegree)
      throw CapacityError("cad: --degree-cap above the hard limit " +
                          std::to_string(kMaxCadDegree));
    SaDescription d = parse_description(read_input(cad_in));
    for (const Poly& f : distinct_polys(d))
      if (f.degree() > cad_cap)
        throw CapacityError("cad: input degree " + std::to_string(f.degree()) +
                            " above the requested cap " + std::to_string(cad_cap));
    if (cad_qo->count()) {
      bool eq = sets_equal(d, parse_description(read_input(cad_equal)));
      if (as_json)
        emit_json(json{{"equal", eq}});
      else
        std::cout << "equal=" << (eq ? "true" : "false") << "\n";
      rc = eq ? 0 : 1;
      return;
    }
    if (cad_empty) {
      bool em = is_empty(d);
      if (as_json)
        emit_json(json{{"empty", em}});
      else
        std::cout << "empty=" << (em ? "true" : "false") << "\n";
      rc = em ? 0 : 1;
      return;
    }
    CadTree t = decompose_for(d);
    std::vector<int> sel = set_cells(t, d);
    std::vector<char> in_set(t.cells.size(), 0);
    int dim = -1;
    for (int i : sel) {
      in_set[i] = 1;
      dim = std::max(dim, t.cells[i].dim);
    }
    if (!cad_locate.empty()) {
      std::vector<Rat> pt = parse_rat_vector(cad_locate);
      if ((int)pt.size() != d.ambient)
        throw std::invalid_argument("locate point must have " + std::to_string(d.ambient) +
                                    " coordinates");
      int cell = locate(t, pt);
      if (as_json)
        emit_json(json{{"cell", cell}, {"member", in_set[cell] != 0}});
      else
        std::cout << "cell=" << cell << " member=" << (in_set[cell] ? "true" : "false") << "\n";
      return;
    }
    int comps = d.ambient <= 2 ? connected_components(d) : -1;
    if (as_json) {
      json j{{"cells", t.cells.size()}, {"selected", sel.size()}, {"dim", dim}};
      if (comps >= 0) j["components"] = comps;
      if (cad_cells) {
        json cl = json::array();
        for (std::size_t i = 0; i < t.cells.size(); ++i)
          cl.push_back({{"dim", t.cells[i].dim},
                        {"in", in_set[i] != 0},
                        {"sample", point_json(t.cells[i].sample)}});
        j["cell_list"] = std::move(cl);
      }
      emit_json(j);
    } else {
      std::cout << "cells=" << t.cells.size() << " selected=" << sel.size() << " dim=" << dim;
      if (comps >= 0) std::cout << " components=" << comps;
      std::cout << "\n";
      if (cad_cells)
        for (std::size_t i = 0; i < t.cells.size(); ++i)
          std::cout << "cell " << i << " dim=" << t.cells[i].dim << " in=" << int(in_set[i])
                    << " sample=" << point_str(t.cells[i].sample) << "\n";
    }
  });

  // check
  auto* sc_check = app.add_subcommand("check", "verified topology of low-dimensional sets");
  sc_check->require_subcommand(1);

  std::string mf_in = "-";
  auto* sc_mf = sc_check->add_subcommand("manifold", "classify a curve as a manifold");
  sc_mf->add_option("input", mf_in, "set file, - for stdin");
  add_json(sc_mf);
  sc_mf->callback([&] {
    ManifoldVerdict v = check_curve_manifold(parse_description(read_input(mf_in)));
    using K = ManifoldVerdict::Kind;
    if (as_json) {
      json j;
      j["kind"] = v.kind == K::NoBoundary     ? "no-boundary"
                  : v.kind == K::WithBoundary ? "with-boundary"
                  : v.kind == K::NotManifold  ? "not-manifold"
                                              : "unsupported";
      if (v.kind == K::WithBoundary) {
        json b = json::array();
        for (const auto& p : v.boundary) b.push_back(point_json(p));
        j["boundary"] = std::move(b);
      }
      if (v.kind == K::NotManifold) j["witness"] = point_json(v.witness);
      if (v.kind == K::Unsupported) j["reason"] = v.reason;
      emit_json(j);
    } else if (v.kind == K::NoBoundary) {
      std::cout << "manifold without boundary\n";
    } else if (v.kind == K::WithBoundary) {
      std::cout << "manifold with boundary\n";
      for (const auto& p : v.boundary) std::cout << "boundary " << point_str(p) << "\n";
    } else if (v.kind == K::NotManifold) {
      std::cout << "not a manifold: witness " << point_str(v.witness) << "\n";
    } else {
      std::cout << "unsupported: " << v.reason << "\n";
    }
    rc = v.kind == K::NotManifold ? 1 : v.kind == K::Unsupported ? 2 : 0;
  });

  std::string rg_in = "-", rg_poly;
  auto* sc_rg = sc_check->add_subcommand("regular", "gradient regularity on a zero set");
  sc_rg->add_option("input", rg_in, "set file, - for stdin");
  sc_rg->add_option("--poly", rg_poly, "defining polynomial, e.g. 'x*y'")->required();
  add_json(sc_rg);
  sc_rg->callback([&] {
    SaDescription d = parse_description(read_input(rg_in));
    Poly f = parse_poly(rg_poly, ambient_vars(d.ambient));
    RegularityVerdict v = regularity_check(f, d);
    if (as_json) {
      json j{{"pass", v.pass}};
      if (!v.pass) j["witness"] = point_json(v.witness);
      emit_json(j);
    } else if (v.pass) {
      std::cout << "regular\n";
    } else {
      std::cout << "singular at " << point_str(v.witness) << "\n";
    }
    rc = v.pass ? 0 : 1;
  });

  std::string cp_in = "-";
  auto* sc_cp = sc_check->add_subcommand("compact", "closedness and boundedness");
  sc_cp->add_option("input", cp_in, "set file, - for stdin");
  add_json(sc_cp);
  sc_cp->callback([&] {
    CompactnessVerdict v = compactness_check(parse_description(read_input(cp_in)));
    bool compact = v.closed && v.bounded;
    if (as_json)
      emit_json(json{{"closed", v.closed}, {"bounded", v.bounded}, {"compact", compact}});
    else
      std::cout << "closed=" << (v.closed ? "true" : "false")
                << " bounded=" << (v.bounded ? "true" : "false")
                << " compact=" << (compact ? "true" : "false") << "\n";
    rc = compact ? 0 : 1;
  });

  std::string hm_in = "-", hm_from = "X", hm_to = "Y", hm_graph = "G";
  auto* sc_hm = sc_check->add_subcommand("homeo", "is G the graph of a homeomorphism X -> Y");
  sc_hm->add_option("input", hm_in, "file with the sets X, Y and the graph G");
  sc_hm->add_option("--from", hm_from, "domain set name");
  sc_hm->add_option("--to", hm_to, "codomain set name");
  sc_hm->add_option("--graph", hm_graph, "graph relation name");
  add_json(sc_hm);
  sc_hm->callback([&] {
    std::vector<NamedSet> sets = parse_sets(read_input(hm_in));
    HomeoVerdict v = verify_homeo(pick_set(sets, hm_from), pick_set(sets, hm_to),
                                  pick_set(sets, hm_graph));
    using K = HomeoVerdict::Kind;
    if (as_json) {
      json j;
      j["kind"] = v.kind == K::Accept ? "accepted" : v.kind == K::Reject ? "rejected" : "unsupported";
      if (v.kind != K::Accept) j["reason"] = v.reason;
      emit_json(j);
    } else if (v.kind == K::Accept) {
      std::cout << "accepted\n";
    } else if (v.kind == K::Reject) {
      std::cout << "rejected: " << v.reason << "\n";
    } else {
      std::cout << "unsupported: " << v.reason << "\n";
    }
    rc = v.kind == K::Accept ? 0 : v.kind == K::Reject ? 1 : 2;
  });

  std::string cb_in = "-", cb_total = "M", cb_lower = "M0", cb_upper = "M1";
  auto* sc_cb = sc_check->add_subcommand("cobordism", "does M run between M0 and M1");
  sc_cb->add_option("input", cb_in, "file with the sets M, M0 and M1");
  sc_cb->add_option("--total", cb_total, "cobordism set name");
  sc_cb->add_option("--lower", cb_lower, "one end");
  sc_cb->add_option("--upper", cb_upper, "the other end");
  add_json(sc_cb);
  sc_cb->callback([&] {
    std::vector<NamedSet> sets = parse_sets(read_input(cb_in));
    CobordismVerdict v = check_cobordism(pick_set(sets, cb_total), pick_set(sets, cb_lower),
                                         pick_set(sets, cb_upper));
    if (as_json) {
      json j{{"accept", v.accept}};
      if (!v.accept) j["reason"] = v.reason;
      emit_json(j);
    } else if (v.accept) {
      std::cout << "accepted\n";
    } else {
      std::cout << "rejected: " << v.reason << "\n";
    }
    rc = v.accept ? 0 : 1;
  });

  // pl
  auto* sc_pl = app.add_subcommand("pl", "simplicial complexes and collapse certificates");
  sc_pl->require_subcommand(1);

  std::string plf_in = "-";
  auto* sc_plf = sc_pl->add_subcommand("free", "list the free face pairs");
  sc_plf->add_option("input", plf_in, "facet list file, - for stdin");
  add_json(sc_plf);
  sc_plf->callback([&] {
    auto pairs = free_faces(parse_complex(read_input(plf_in)));
    if (as_json) {
      json j = json::array();
      for (const auto& [s, t] : pairs) j.push_back({s, t});
      emit_json(json{{"free", j}});
    } else {
      for (const auto& [s, t] : pairs) std::cout << s << " " << t << "\n";
    }
  });

  std::string plc_in = "-", plc_steps;
  auto* sc_plc = sc_pl->add_subcommand("collapse", "replay a step list against a complex");
  sc_plc->add_option("input", plc_in, "facet list file, - for stdin");
  sc_plc->add_option("--steps", plc_steps, "step file, lines 'C sigma tau' / 'E sigma tau'")
      ->required();
  add_json(sc_plc);
  sc_plc->callback([&] {
    SimplicialComplex cur = parse_complex(read_input(plc_in));
    std::vector<CollapseStep> steps = parse_steps(read_input(plc_steps));
    for (std::size_t i = 0; i < steps.size(); ++i) {
      try {
        cur = steps[i].kind == StepKind::Collapse ? apply_collapse(cur, steps[i])
                                                  : apply_expansion(cur, steps[i]);
      } catch (const std::invalid_argument& e) {
        if (as_json)
          emit_json(json{{"accept", false}, {"step", i}, {"reason", e.what()}});
        else
          std::cout << "rejected at step " << i << ": " << e.what() << "\n";
        rc = 1;
        return;
      }
    }
    if (as_json)
      emit_json(json{{"accept", true}, {"complex", print_complex(cur)}});
    else
      std::cout << print_complex(cur) << "\n";
  });

  std::string pls_in = "-", pls_target;
  long pls_budget = 100000;
  auto* sc_pls = sc_pl->add_subcommand("search", "find a collapse sequence down to a target");
  sc_pls->add_option("input", pls_in, "facet list file, - for stdin");
  sc_pls->add_option("--target", pls_target, "target subcomplex as inline facets, e.g. 'a'")
      ->required();
  sc_pls->add_option("--budget", pls_budget, "max states to expand");
  add_json(sc_pls);
  sc_pls->callback([&] {
    if (pls_budget < 0 || pls_budget > kMaxSearchBudget)
      throw CapacityError("pl search: budget above the hard limit " +
                          std::to_string(kMaxSearchBudget));
    SimplicialComplex k = parse_complex(read_input(pls_in));
    SearchResult r = collapse_search(k, parse_complex(pls_target), pls_budget);
    if (as_json) {
      json j;
      j["status"] = r.status == SearchStatus::Found     ? "found"
                    : r.status == SearchStatus::Budget  ? "exhausted-budget"
                                                        : "exhausted-complete";
      j["expanded"] = r.expanded;
      if (r.status == SearchStatus::Found) {
        json st = json::array();
        for (const CollapseStep& s : r.cert.steps)
          st.push_back({s.kind == StepKind::Collapse ? "C" : "E", s.sigma, s.tau});
        j["steps"] = std::move(st);
      }
      emit_json(j);
    } else if (r.status == SearchStatus::Found) {
      std::cout << print_steps(r.cert.steps);
    } else {
      std::cout << "exhausted "
                << (r.status == SearchStatus::Budget ? "budget" : "complete")
                << " expanded=" << r.expanded << "\n";
    }
    rc = r.status == SearchStatus::Found ? 0 : 2;
  });

  std::string plv_in = "-", plv_steps, plv_target, plv_fixed;
  auto* sc_plv = sc_pl->add_subcommand("verify", "replay and check a collapse certificate");
  sc_plv->add_option("input", plv_in, "base complex facet file, - for stdin");
  sc_plv->add_option("--steps", plv_steps, "step file")->required();
  sc_plv->add_option("--target", plv_target, "declared final complex, inline facets")->required();
  sc_plv->add_option("--fixed", plv_fixed, "rel subcomplex left untouched, inline facets");
  add_json(sc_plv);
  sc_plv->callback([&] {
    HomotopyCertificate cert;
    cert.base = parse_complex(read_input(plv_in));
    cert.fixed = parse_complex(plv_fixed);
    cert.steps = parse_steps(read_input(plv_steps));
    cert.target = parse_complex(plv_target);
    VerifyResult v = verify_certificate(cert);
    if (as_json) {
      json j{{"accept", v.accept}};
      if (!v.accept) {
        j["step"] = v.step;
        j["reason"] = v.reason;
      }
      emit_json(j);
    } else if (v.accept) {
      std::cout << "accepted\n";
    } else if (v.step < 0) {
      std::cout << "rejected: " << v.reason << "\n";
    } else {
      std::cout << "rejected at step " << v.step << ": " << v.reason << "\n";
    }
    rc = v.accept ? 0 : 1;
  });

  // collar
  std::string col_pt, col_lambda;
  auto* sc_col = app.add_subcommand("collar", "cone/collar reparametrization of a simplex");
  sc_col->add_option("point", col_pt, "barycentric coordinates, e.g. '0, 1/2, 1/2'")->required();
  auto* col_lo = sc_col->add_option("--lambda", col_lambda, "collar parameter in [0, 1]");
  add_json(sc_col);
  sc_col->callback([&] {
    std::vector<Rat> x = parse_rat_vector(col_pt);
    std::vector<Rat> out;
    if (col_lo->count()) {
      auto l = rat_parse(col_lambda);
      if (!l) throw std::invalid_argument("bad rational '" + col_lambda + "'");
      out = collar_cone_map(x, *l);
    } else {
      out = collar_cone_map(x);
    }
    if (as_json) {
      json a = json::array();
      for (const Rat& c : out) a.push_back(rat_str(c));
      emit_json(json{{"point", a}});
    } else {
      for (std::size_t i = 0; i < out.size(); ++i)
        std::cout << (i ? ", " : "") << rat_str(out[i]);
      std::cout << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 3;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
