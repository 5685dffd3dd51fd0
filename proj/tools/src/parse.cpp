#include "xdisc_cli/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

namespace xdisc::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void bad(const std::string& what, const std::string& token) {
  fail(ErrorCode::Parse, what + ": '" + token + "'");
}

bool parse_plain(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

double parse_angle(const std::string& token) {
  std::string s = trim(token);
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) {
    double v;
    if (!parse_plain(s, v)) bad("bad angle", token);
    return v;
  }
  std::string coef = s.substr(0, pi_at);
  std::string rest = s.substr(pi_at + 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double c = 1.0;
  if (coef == "-") {
    c = -1.0;
  } else if (!coef.empty() && coef != "+" && !parse_plain(coef, c)) {
    bad("bad angle", token);
  }
  double d = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/' || !parse_plain(rest.substr(1), d) || d == 0.0) bad("bad angle", token);
  }
  return c * std::numbers::pi / d;
}

double parse_real_part(const std::string& s, const std::string& token) {
  std::string t = trim(s);
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  double v;
  if (t.rfind("sqrt", 0) == 0) {
    if (!parse_plain(t.substr(4), v) || v < 0.0) bad("bad square-root token", token);
    v = std::sqrt(v);
  } else if (!parse_plain(t, v)) {
    bad("bad number", token);
  }
  return neg ? -v : v;
}

std::map<std::string, std::string> keyed(const std::vector<std::string>& args,
                                         const std::vector<std::string>& positional, const std::string& token) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  for (const auto& a : args) {
    if (a.empty()) continue;
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      out[trim(a.substr(0, eq))] = trim(a.substr(eq + 1));
    } else if (a == "swapped" || a == "sigma") {
      out["swapped"] = "1";
    } else {
      if (pos >= positional.size()) bad("too many arguments", token);
      out[positional[pos++]] = trim(a);
    }
  }
  return out;
}

std::string take(std::map<std::string, std::string>& m, const std::string& key, const std::string& fallback) {
  const auto it = m.find(key);
  if (it == m.end()) return fallback;
  std::string v = it->second;
  m.erase(it);
  return v;
}

bool flag(const std::string& v) { return v == "1" || v == "true" || v == "yes"; }

void no_leftovers(const std::map<std::string, std::string>& m, const std::string& token) {
  if (!m.empty()) bad("unknown argument '" + m.begin()->first + "'", token);
}

}  // namespace

std::vector<std::string> split_args(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Complex parse_complex(const std::string& token) {
  std::string s = trim(token);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) bad("empty number", token);
  if (s.rfind("cis:", 0) == 0) return cis(parse_angle(s.substr(4)));
  if (s.rfind("-cis:", 0) == 0) return -cis(parse_angle(s.substr(5)));
  if (s.back() != 'i') return {parse_real_part(s, token), 0.0};
  s.pop_back();
  // Split "re±im" at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real_part(re, token), parse_real_part(im, token)};
}

double parse_real(const std::string& token) {
  const Complex z = parse_complex(token);
  if (z.imag() != 0.0) bad("expected a real number", token);
  return z.real();
}

int parse_int(const std::string& token) {
  const double v = parse_real(token);
  if (v != std::floor(v) || std::abs(v) > 1e9) bad("expected an integer", token);
  return static_cast<int>(v);
}

SelfMapSpec parse_selfmap(const std::string& token) {
  SelfMapSpec g = SelfMapSpec::constant(1.0);
  bool any = false;
  for (const auto& f : split_args(token, '*')) {
    if (f.empty()) bad("empty self-map factor", token);
    any = true;
    if (f == "l" || f == "lambda") {
      ++g.power;
    } else if (f.rfind("l^", 0) == 0) {
      g.power += parse_int(f.substr(2));
    } else if (f.rfind("b(", 0) == 0 && f.back() == ')') {
      g.zeros.push_back(parse_complex(f.substr(2, f.size() - 3)));
    } else {
      g.scale *= parse_complex(f);
    }
  }
  if (!any) bad("empty self-map", token);
  validate(g);
  return g;
}

ZSpec parse_z(const std::string& token) {
  const std::string t = trim(token);
  if (t == "identity" || t == "id" || t == "l") return ZSpec::id();
  if (t == "zero" || t == "0") return ZSpec::times_lambda(SelfMapSpec::constant(0.0));
  if (t == "strict") return ZSpec::times_lambda(SelfMapSpec::monomial(0.5, 1));
  return ZSpec::times_lambda(parse_selfmap(t));
}

LeftInverseSpec parse_left_inverse(const std::string& token) {
  const std::string t = trim(token);
  const auto colon = t.find(':');
  const std::string name = t.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<std::string>{} : split_args(t.substr(colon + 1));
  static const std::map<std::string, std::vector<std::string>> positional = {
      {"psi", {"omega"}},         {"phi", {"omega"}},        {"phitilde", {"omega"}},
      {"ball", {"gamma"}},        {"gaj", {"A", "j"}},       {"reinhardt", {"beta", "k"}},
      {"retract", {"t", "h"}},    {"bidisc-linear", {"t", "gamma"}}, {"fh", {"beta"}},
      {"g2-parabolic", {"tau", "alpha"}}, {"projection", {"index"}}, {"constant", {"value"}}};
  const auto it = positional.find(name);
  if (it == positional.end()) bad("unknown map family", token);
  auto kv = keyed(args, it->second, token);
  MoebiusSpec post{parse_complex(take(kv, "post-tau", "1")), parse_complex(take(kv, "post-alpha", "0"))};
  Family fam;
  if (name == "psi") {
    fam = PsiOmega{parse_complex(take(kv, "omega", "1"))};
  } else if (name == "phi") {
    const Complex w = parse_complex(take(kv, "omega", "1"));
    fam = PhiOmega{w, flag(take(kv, "swapped", "0"))};
  } else if (name == "phitilde") {
    const Complex w = parse_complex(take(kv, "omega", "1"));
    fam = PhiTilde{w, flag(take(kv, "swapped", "0"))};
  } else if (name == "ball") {
    fam = BallGamma{parse_complex(take(kv, "gamma", "0"))};
  } else if (name == "gaj") {
    const double a = parse_real(take(kv, "A", "0"));
    fam = ModelGAj{a, parse_int(take(kv, "j", "2"))};
  } else if (name == "reinhardt") {
    const double beta = parse_real(take(kv, "beta", "0"));
    fam = ReinhardtBeta{beta, parse_int(take(kv, "k", "2"))};
  } else if (name == "retract") {
    Retract r;
    r.t = parse_real(take(kv, "t", "0.5"));
    const std::string h = take(kv, "h", "");
    if (!h.empty()) {
      r.h1 = SelfMapSpec::constant(parse_complex(h));
    } else {
      r.h1 = parse_selfmap(take(kv, "h1", "0"));
      r.h2 = parse_selfmap(take(kv, "h2", "1"));
    }
    fam = r;
  } else if (name == "bidisc-linear") {
    const double tt = parse_real(take(kv, "t", "1"));
    fam = BidiscLinear{tt, parse_complex(take(kv, "gamma", "1"))};
  } else if (name == "fh") {
    const double beta = parse_real(take(kv, "beta", "0.5"));
    const std::string h = take(kv, "h", "canonical");
    const RIIMapSpec hs = h == "canonical" ? RIIMapSpec::canonical(beta) : RIIMapSpec::constant(parse_complex(h));
    fam = TetraFh{beta, hs, flag(take(kv, "swapped", "0"))};
  } else if (name == "g2-parabolic") {
    MoebiusSpec a{parse_complex(take(kv, "a-tau", "1")), parse_complex(take(kv, "a-alpha", "0"))};
    const std::string bt = take(kv, "b-tau", take(kv, "tau", "1"));
    const std::string ba = take(kv, "b-alpha", take(kv, "alpha", "0"));
    MoebiusSpec b{parse_complex(bt), parse_complex(ba)};
    fam = make_g2_parabolic(a, b);
  } else if (name == "projection") {
    fam = Projection{parse_int(take(kv, "index", "1"))};
  } else {
    fam = ConstantMap{parse_complex(take(kv, "value", "0"))};
  }
  no_leftovers(kv, token);
  LeftInverseSpec spec = LeftInverseSpec::of(fam, post);
  validate(spec);
  return spec;
}

GeodesicSpec parse_geodesic(const std::string& token) {
  const std::string t = trim(token);
  const auto colon = t.find(':');
  const std::string name = t.substr(0, colon);
  const auto args = colon == std::string::npos ? std::vector<std::string>{} : split_args(t.substr(colon + 1));
  GeodesicSpec out;
  if (name == "royal") {
    auto kv = keyed(args, {}, token);
    no_leftovers(kv, token);
    out = G2GeodesicSpec{BlaschkeForm{{0.0}}};
  } else if (name == "blaschke") {
    auto kv = keyed(args, {"alpha"}, token);
    out = G2GeodesicSpec{BlaschkeForm{{parse_complex(take(kv, "alpha", "0"))}}};
    no_leftovers(kv, token);
  } else if (name == "auto") {
    auto kv = keyed(args, {"tau", "alpha"}, token);
    const Complex tau = parse_complex(take(kv, "tau", "1"));
    out = G2GeodesicSpec{AutoForm{{tau, parse_complex(take(kv, "alpha", "0"))}}};
    no_leftovers(kv, token);
  } else if (name == "graph") {
    auto kv = keyed(args, {"g"}, token);
    PolydiscGraph g;
    for (const auto& e : split_args(take(kv, "g", "0"), ';')) g.g.push_back(parse_selfmap(e));
    out = g;
    no_leftovers(kv, token);
  } else if (name == "axis") {
    auto kv = keyed(args, {"dim"}, token);
    out = Axis{parse_int(take(kv, "dim", "2"))};
    no_leftovers(kv, token);
  } else if (name == "form0") {
    auto kv = keyed(args, {}, token);
    const Complex w1 = parse_complex(take(kv, "omega1", "1"));
    const Complex w2 = parse_complex(take(kv, "omega2", "1"));
    const double c = parse_real(take(kv, "C", take(kv, "c", "0")));
    out = EGeodesicSpec{Form0::from_psi_hat(w1, w2, c, parse_selfmap(take(kv, "psihat", "0")))};
    no_leftovers(kv, token);
  } else if (name == "formva") {
    auto kv = keyed(args, {}, token);
    FormVA f;
    f.beta = parse_real(take(kv, "beta", "0.5"));
    f.a = parse_complex(take(kv, "a", "1"));
    f.b = parse_complex(take(kv, "b", "0"));
    f.c = parse_complex(take(kv, "c", "0"));
    f.d = parse_complex(take(kv, "d", "1"));
    f.z = parse_z(take(kv, "z", "identity"));
    out = EGeodesicSpec{f};
    no_leftovers(kv, token);
  } else {
    bad("unknown geodesic kind", token);
  }
  return out;
}

}  // namespace xdisc::cli
