#include "rcfw/pl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rcfw/errors.hpp"

namespace rcfw {

namespace {

// Subset enumeration is exponential in facet size, so cap it well above
// anything a collapse problem needs.
constexpr size_t kMaxFacetVerts = 20;

bool is_vertex_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool proper_subset(const Simplex& a, const Simplex& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// tau covers sigma: one extra vertex, everything else shared.
bool covers(const Simplex& sigma, const Simplex& tau) {
  return tau.size() == sigma.size() + 1 &&
         std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end());
}

void add_with_faces(std::set<Simplex>& out, const Simplex& s) {
  if (s.size() > kMaxFacetVerts)
    throw CapacityError("complex: facet " + s + " has more than " +
                        std::to_string(kMaxFacetVerts) + " vertices");
  const size_t n = s.size();
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    Simplex f;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) f.push_back(s[i]);
    out.insert(std::move(f));
  }
}

std::string validate_collapse(const SimplicialComplex& k, const SimplicialComplex& y,
                              const CollapseStep& s) {
  if (!k.faces.count(s.sigma)) return "the face " + s.sigma + " is absent";
  if (!k.faces.count(s.tau)) return "the coface " + s.tau + " is absent";
  if (!covers(s.sigma, s.tau))
    return "the coface " + s.tau + " does not cover " + s.sigma;
  for (const Simplex& f : k.faces)
    if (f != s.tau && proper_subset(s.sigma, f))
      return "the face " + s.sigma + " is not free";
  if (y.faces.count(s.sigma) || y.faces.count(s.tau))
    return "the step removes a simplex of the fixed subcomplex";
  return {};
}

std::string validate_expansion(const SimplicialComplex& k, const CollapseStep& s) {
  if (k.faces.count(s.sigma)) return "the face " + s.sigma + " is already present";
  if (k.faces.count(s.tau)) return "the coface " + s.tau + " is already present";
  if (!covers(s.sigma, s.tau))
    return "the coface " + s.tau + " does not cover " + s.sigma;
  if (s.tau.size() > kMaxFacetVerts)
    return "the coface " + s.tau + " exceeds the supported facet size";
  const size_t n = s.tau.size();
  for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
    Simplex f;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) f.push_back(s.tau[i]);
    if (f != s.sigma && !k.faces.count(f))
      return "the boundary of " + s.tau + " is missing " + f;
  }
  return {};
}

struct Token {
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
    } else {
      Token t{{}, line, col};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
        t.text.push_back(text[i]);
        ++i;
        ++col;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Sorted vertex string from a facet token, with positions for diagnostics.
Simplex simplex_from_token(const Token& t) {
  for (size_t j = 0; j < t.text.size(); ++j)
    if (!is_vertex_char(t.text[j]))
      throw SyntaxError("facet vertices must be alphanumeric", t.line, t.col + (int)j);
  Simplex s = t.text;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw SyntaxError("duplicate vertex in a facet", t.line, t.col);
  return s;
}

}  // namespace

Simplex make_simplex(const std::string& verts) {
  if (verts.empty()) throw std::invalid_argument("empty facet");
  for (char c : verts)
    if (!is_vertex_char(c))
      throw std::invalid_argument("facet vertices must be alphanumeric");
  Simplex s = verts;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("duplicate vertex in a facet");
  return s;
}

SimplicialComplex complex_from_facets(const std::vector<std::string>& facets) {
  SimplicialComplex k;
  for (const std::string& f : facets) add_with_faces(k.faces, make_simplex(f));
  return k;
}

SimplicialComplex parse_complex(const std::string& text) {
  SimplicialComplex k;
  for (const Token& t : tokenize(text)) add_with_faces(k.faces, simplex_from_token(t));
  return k;
}

std::vector<Simplex> facets_of(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (const Simplex& f : k.faces) {
    bool maximal = true;
    for (const Simplex& g : k.faces)
      if (proper_subset(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::string print_complex(const SimplicialComplex& k) {
  std::string out;
  for (const Simplex& f : facets_of(k)) {
    if (!out.empty()) out.push_back(' ');
    out += f;
  }
  return out;
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (const Simplex& f : k.faces) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

int complex_dim(const SimplicialComplex& k) {
  int d = -1;
  for (const Simplex& f : k.faces) d = std::max(d, (int)f.size() - 1);
  return d;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& k) {
  return std::includes(k.faces.begin(), k.faces.end(), sub.faces.begin(), sub.faces.end());
}

std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& k) {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (const Simplex& sigma : k.faces) {
    const Simplex* coface = nullptr;
    int count = 0;
    for (const Simplex& tau : k.faces) {
      if (!proper_subset(sigma, tau)) continue;
      coface = &tau;
      if (++count > 1) break;
    }
    if (count == 1) out.emplace_back(sigma, *coface);
  }
  return out;
}

SimplicialComplex apply_collapse(const SimplicialComplex& k, const CollapseStep& s) {
  std::string err = validate_collapse(k, SimplicialComplex{}, s);
  if (!err.empty()) throw std::invalid_argument("apply_collapse: " + err);
  SimplicialComplex out = k;
  out.faces.erase(s.sigma);
  out.faces.erase(s.tau);
  return out;
}

SimplicialComplex apply_expansion(const SimplicialComplex& k, const CollapseStep& s) {
  std::string err = validate_expansion(k, s);
  if (!err.empty()) throw std::invalid_argument("apply_expansion: " + err);
  SimplicialComplex out = k;
  out.faces.insert(s.sigma);
  out.faces.insert(s.tau);
  return out;
}

SearchResult collapse_search(const SimplicialComplex& k, const SimplicialComplex& y,
                             long budget) {
  if (!is_subcomplex(y, k))
    throw std::invalid_argument("collapse_search: the target is not a subcomplex of the start");
  SearchResult out;
  std::set<std::string> seen;
  std::vector<CollapseStep> trail;
  bool hit_budget = false;
  std::function<bool(const SimplicialComplex&)> dfs = [&](const SimplicialComplex& cur) {
    if (cur == y) return true;
    if (!seen.insert(print_complex(cur)).second) return false;
    if (out.expanded >= budget) {
      hit_budget = true;
      return false;
    }
    ++out.expanded;
    for (const auto& [sigma, tau] : free_faces(cur)) {
      if (y.faces.count(sigma) || y.faces.count(tau)) continue;
      SimplicialComplex next = cur;
      next.faces.erase(sigma);
      next.faces.erase(tau);
      trail.push_back({StepKind::Collapse, sigma, tau});
      if (dfs(next)) return true;
      trail.pop_back();
      if (hit_budget) return false;
    }
    return false;
  };
  if (dfs(k)) {
    out.status = SearchStatus::Found;
    out.cert = {k, y, trail, y};
  } else {
    out.status = hit_budget ? SearchStatus::Budget : SearchStatus::Complete;
  }
  return out;
}

VerifyResult verify_certificate(const HomotopyCertificate& cert) {
  VerifyResult out;
  if (!is_subcomplex(cert.fixed, cert.base)) {
    out.reason = "the fixed subcomplex is not contained in the base";
    return out;
  }
  SimplicialComplex cur = cert.base;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const CollapseStep& s = cert.steps[i];
    std::string err = s.kind == StepKind::Collapse ? validate_collapse(cur, cert.fixed, s)
                                                   : validate_expansion(cur, s);
    if (!err.empty()) {
      out.step = (int)i;
      out.reason = err;
      return out;
    }
    if (s.kind == StepKind::Collapse) {
      cur.faces.erase(s.sigma);
      cur.faces.erase(s.tau);
    } else {
      cur.faces.insert(s.sigma);
      cur.faces.insert(s.tau);
    }
  }
  if (!(cur == cert.target)) {
    out.step = (int)cert.steps.size();
    out.reason = "the final complex differs from the declared target";
    return out;
  }
  out.accept = true;
  return out;
}

std::vector<CollapseStep> parse_steps(const std::string& text) {
  std::vector<CollapseStep> out;
  std::vector<Token> toks = tokenize(text);
  size_t i = 0;
  while (i < toks.size()) {
    int line = toks[i].line;
    size_t j = i;
    while (j < toks.size() && toks[j].line == line) ++j;
    if (j - i != 3)
      throw SyntaxError("expected a step of the form C/E sigma tau", line, toks[i].col);
    CollapseStep s;
    if (toks[i].text == "C")
      s.kind = StepKind::Collapse;
    else if (toks[i].text == "E")
      s.kind = StepKind::Expansion;
    else
      throw SyntaxError("step kind must be C or E", line, toks[i].col);
    s.sigma = simplex_from_token(toks[i + 1]);
    s.tau = simplex_from_token(toks[i + 2]);
    out.push_back(std::move(s));
    i = j;
  }
  return out;
}

std::string print_steps(const std::vector<CollapseStep>& steps) {
  std::string out;
  for (const CollapseStep& s : steps) {
    out += s.kind == StepKind::Collapse ? "C " : "E ";
    out += s.sigma;
    out.push_back(' ');
    out += s.tau;
    out.push_back('\n');
  }
  return out;
}

namespace {

void check_barycentric(const std::vector<Rat>& x) {
  if (x.empty()) throw std::invalid_argument("collar_cone_map: empty coordinate vector");
  Rat sum = 0;
  for (const Rat& c : x) {
    if (c < 0) throw std::invalid_argument("collar_cone_map: negative barycentric coordinate");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("collar_cone_map: coordinates must sum to 1");
}

}  // namespace

std::vector<Rat> collar_cone_map(const std::vector<Rat>& x) {
  check_barycentric(x);
  Rat b = Rat(1) / Rat((unsigned long)x.size());
  Rat half(1, 2);
  std::vector<Rat> out;
  out.reserve(x.size());
  for (const Rat& c : x) out.push_back(half * b + half * c);
  return out;
}

std::vector<Rat> collar_cone_map(const std::vector<Rat>& x, const Rat& lambda) {
  check_barycentric(x);
  if (std::none_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; }))
    throw std::invalid_argument("collar_cone_map: a boundary point needs a zero coordinate");
  if (lambda < 0 || lambda > 1)
    throw std::invalid_argument("collar_cone_map: lambda outside [0, 1]");
  Rat b = Rat(1) / Rat((unsigned long)x.size());
  Rat cb = (Rat(1) - lambda) / 2;
  Rat cx = (Rat(1) + lambda) / 2;
  std::vector<Rat> out;
  out.reserve(x.size());
  for (const Rat& c : x) out.push_back(cb * b + cx * c);
  return out;
}

SimplicialComplex dunce_hat() {
  // Triangle VPQ with all three rim edges identified, annulus of 14
  // triangles down to an inner pentagon 1..5 filled by a fan. Every edge
  // lies in 2 triangles (3 for the rim edges VP, PQ, QV).
  return parse_complex(
      "VP1 PQ1 Q12 QV2 VP2 P23 PQ3 QV3 V34 VQ4 PQ4 P45 PV5 V51 123 134 145");
}

SimplicialComplex bing_house() {
  // Unit-square shell of [0,3]x[0,4]x[0,2] plus the middle floor z=1.
  // Tunnel into the upper room: interior shaft over [1,2]x[1,2] from z=0
  // to z=1 with matching holes in the bottom and the middle floor. Tunnel
  // into the lower room: shaft over [1,2]x[2,3] from z=1 to z=2, holes in
  // the top and the middle floor. A support wall ties each shaft to the
  // nearest outer wall so no edge is left with a single coface.
  static const char* labels =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  auto L = [&](int x, int y, int z) { return labels[(x * 5 + y) * 3 + z]; };
  std::vector<std::string> fac;
  auto quad = [&](char a, char b, char c, char d) {
    fac.push_back(std::string{a, b, c});
    fac.push_back(std::string{a, c, d});
  };
  auto sqz = [&](int x, int y, int z) {
    quad(L(x, y, z), L(x + 1, y, z), L(x + 1, y + 1, z), L(x, y + 1, z));
  };
  auto sqx = [&](int x, int y, int z) {
    quad(L(x, y, z), L(x, y + 1, z), L(x, y + 1, z + 1), L(x, y, z + 1));
  };
  auto sqy = [&](int x, int y, int z) {
    quad(L(x, y, z), L(x + 1, y, z), L(x + 1, y, z + 1), L(x, y, z + 1));
  };
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 4; ++y) {
      if (!(x == 1 && y == 1)) sqz(x, y, 0);
      if (!(x == 1 && (y == 1 || y == 2))) sqz(x, y, 1);
      if (!(x == 1 && y == 2)) sqz(x, y, 2);
    }
  for (int z = 0; z < 2; ++z) {
    for (int y = 0; y < 4; ++y) {
      sqx(0, y, z);
      sqx(3, y, z);
    }
    for (int x = 0; x < 3; ++x) {
      sqy(x, 0, z);
      sqy(x, 4, z);
    }
  }
  sqx(1, 1, 0);
  sqx(2, 1, 0);
  sqy(1, 1, 0);
  sqy(1, 2, 0);
  sqx(1, 2, 1);
  sqx(2, 2, 1);
  sqy(1, 2, 1);
  sqy(1, 3, 1);
  sqy(2, 2, 0);
  sqy(0, 2, 1);
  return complex_from_facets(fac);
}

}  // namespace rcfw
