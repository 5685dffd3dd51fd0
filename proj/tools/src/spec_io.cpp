#include "xdisc_cli/spec_io.hpp"

#include "xdisc_cli/parse.hpp"

namespace xdisc::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double real_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_real(j.get<std::string>());
  bad("expected a real number, got " + j.dump());
}

int int_from(const json& j) {
  if (j.is_number_integer()) return j.get<int>();
  return parse_int(j.is_string() ? j.get<std::string>() : j.dump());
}

bool bool_from(const json& j) {
  if (!j.is_boolean()) bad("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

template <class T>
T value_or(const json& j, const char* key, T fallback, T (*conv)(const json&)) {
  return j.contains(key) ? conv(j.at(key)) : fallback;
}

std::string kind_of(const json& j, const char* key) {
  const json& k = field(j, key);
  if (!k.is_string()) bad(std::string("field '") + key + "' must be a string");
  return k.get<std::string>();
}

json g2_to_json(const G2GeodesicSpec& g) {
  if (const auto* b = std::get_if<BlaschkeForm>(&g)) return {{"kind", "g2-blaschke"}, {"alpha", to_json(b->b.alpha)}};
  const auto& a = std::get<AutoForm>(g);
  return {{"kind", "g2-auto"}, {"a", to_json(a.a)}};
}

json e_to_json(const EGeodesicSpec& g) {
  if (const auto* f = std::get_if<Form0>(&g)) {
    return {{"kind", "e-form0"}, {"omega1", to_json(f->omega1)}, {"omega2", to_json(f->omega2)},
            {"C", f->c},         {"psi", to_json(f->psi)}};
  }
  const auto& f = std::get<FormVA>(g);
  return {{"kind", "e-formva"}, {"beta", f.beta},     {"a", to_json(f.a)},    {"b", to_json(f.b)},
          {"c", to_json(f.c)},  {"d", to_json(f.d)},  {"z", to_json(f.z)}};
}

}  // namespace

json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const CVec& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const MoebiusSpec& m) { return {{"tau", to_json(m.tau)}, {"alpha", to_json(m.alpha)}}; }

json to_json(const SelfMapSpec& g) {
  json zeros = json::array();
  for (const auto& a : g.zeros) zeros.push_back(to_json(a));
  return {{"scale", to_json(g.scale)},
          {"power", g.power},
          {"zeros", zeros},
          {"shift", g.shift ? to_json(*g.shift) : json(nullptr)}};
}

json to_json(const Mat2& m) { return json::array({to_json(m.m11), to_json(m.m12), to_json(m.m21), to_json(m.m22)}); }

json to_json(const RIIMapSpec& h) {
  json chain = json::array();
  for (const auto& a : h.chain) chain.push_back(to_json(a));
  return {{"base", h.base == RIIMapSpec::Base::TopLeft ? "top-left" : "constant"},
          {"value", to_json(h.value)},
          {"chain", chain}};
}

json to_json(const LeftInverseSpec& f) {
  json j = {{"family", family_name(f.family)}};
  j.update(std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PsiOmega>) {
          return {{"omega", to_json(s.omega)}};
        } else if constexpr (std::is_same_v<T, PhiOmega> || std::is_same_v<T, PhiTilde>) {
          return {{"omega", to_json(s.omega)}, {"swapped", s.swapped}};
        } else if constexpr (std::is_same_v<T, BallGamma>) {
          return {{"gamma", to_json(s.gamma)}};
        } else if constexpr (std::is_same_v<T, ModelGAj>) {
          return {{"A", s.a}, {"j", s.j}};
        } else if constexpr (std::is_same_v<T, ReinhardtBeta>) {
          return {{"beta", s.beta}, {"k", s.k}};
        } else if constexpr (std::is_same_v<T, Retract>) {
          return {{"t", s.t}, {"h1", to_json(s.h1)}, {"h2", to_json(s.h2)}};
        } else if constexpr (std::is_same_v<T, BidiscLinear>) {
          return {{"t", s.t}, {"gamma", to_json(s.gamma)}};
        } else if constexpr (std::is_same_v<T, G2Parabolic>) {
          return {{"a", to_json(s.a)}, {"b", to_json(s.b)}, {"h", to_json(s.h)}};
        } else if constexpr (std::is_same_v<T, TetraFh>) {
          return {{"beta", s.beta}, {"h", to_json(s.h)}, {"swapped", s.swapped}};
        } else if constexpr (std::is_same_v<T, Projection>) {
          return {{"index", s.index}};
        } else {
          return {{"value", to_json(s.value)}};
        }
      },
      f.family));
  j["post"] = to_json(f.post);
  return j;
}

json to_json(const ZSpec& z) {
  if (z.identity) return {{"identity", true}};
  return {{"identity", false}, {"w", to_json(z.w)}};
}

json to_json(const GeodesicSpec& g) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PolydiscGraph>) {
          json gs = json::array();
          for (const auto& e : s.g) gs.push_back(to_json(e));
          return {{"kind", "polydisc-graph"}, {"g", gs}};
        } else if constexpr (std::is_same_v<T, Axis>) {
          return {{"kind", "axis"}, {"dim", s.dim}};
        } else if constexpr (std::is_same_v<T, G2GeodesicSpec>) {
          return g2_to_json(s);
        } else if constexpr (std::is_same_v<T, G2Pair>) {
          return {{"kind", "g2-pair"}, {"a", to_json(s.a)}, {"b", to_json(s.b)}};
        } else {
          return e_to_json(s);
        }
      },
      g);
}

json to_json(const DomainTag& d) {
  json j = {{"name", d.kind == DomainKind::ReinhardtModel ? std::string("reinhardt") : d.name()}};
  if (d.kind == DomainKind::ReinhardtModel) {
    j["k"] = d.k ? json(*d.k) : json(nullptr);
    j["b"] = d.b;
  }
  return j;
}

json to_json(const Classification& c) {
  json witnesses = json::array();
  json residuals = json::array();
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
    witnesses.push_back(to_json(c.witnesses[i]));
    residuals.push_back({{"witness", i}, {"max_residual", i < c.residuals.size() ? c.residuals[i] : 0.0}});
  }
  json j = {{"schema", kSchema},
            {"verdict", to_string(c.verdict)},
            {"witnesses", witnesses},
            {"residual_report", residuals},
            {"min_pairwise_difference", c.min_pairwise_difference}};
  if (c.verdict == Verdict::InvalidSpec) j["reason"] = c.reason;
  if (c.geodesic) j["geodesic"] = to_json(*c.geodesic);
  if (c.domain) j["domain"] = to_json(*c.domain);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const VerificationReport& r) {
  json j = {{"schema", kSchema},          {"check", r.check},
            {"pass", r.pass},             {"max_residual", r.max_residual},
            {"threshold", r.threshold},   {"sample_count", r.sample_count},
            {"seed", r.seed},             {"worst_point", to_json(r.worst_point)}};
  if (r.check == "into-disc") j["closed_ball"] = r.closed_ball;
  return j;
}

json to_json(const DistinctReport& r) {
  return {{"schema", kSchema},          {"check", "distinct"},
          {"distinct", r.distinct},     {"sup_difference", r.sup_difference},
          {"threshold", r.threshold},   {"sample_count", r.sample_count},
          {"seed", r.seed},             {"worst_point", to_json(r.worst_point)}};
}

json to_json(const EqualityReport& r) {
  return {{"schema", kSchema}, {"check", "equality"}, {"lb", r.lb}, {"ub", r.ub}, {"pass", r.pass}};
}

Complex complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_object()) return {real_from(field(j, "re")), j.contains("im") ? real_from(j.at("im")) : 0.0};
  bad("expected a complex number, got " + j.dump());
}

MoebiusSpec moebius_from(const json& j) {
  MoebiusSpec m{value_or<Complex>(j, "tau", Complex(1.0), complex_from),
                value_or<Complex>(j, "alpha", Complex(0.0), complex_from)};
  validate(m);
  return m;
}

SelfMapSpec selfmap_from(const json& j) {
  if (j.is_string()) return parse_selfmap(j.get<std::string>());
  if (j.is_number()) return SelfMapSpec::constant(j.get<double>());
  SelfMapSpec g;
  g.scale = value_or<Complex>(j, "scale", Complex(0.0), complex_from);
  g.power = value_or<int>(j, "power", 0, int_from);
  if (j.contains("zeros")) {
    for (const auto& a : j.at("zeros")) g.zeros.push_back(complex_from(a));
  }
  if (j.contains("shift") && !j.at("shift").is_null()) g.shift = complex_from(j.at("shift"));
  validate(g);
  return g;
}

Mat2 mat2_from(const json& j) {
  if (!j.is_array() || j.size() != 4) bad("a 2x2 matrix is a 4-element array, got " + j.dump());
  return {complex_from(j[0]), complex_from(j[1]), complex_from(j[2]), complex_from(j[3])};
}

RIIMapSpec rii_map_from(const json& j) {
  RIIMapSpec h;
  const std::string base = j.value("base", std::string("top-left"));
  if (base == "top-left") {
    h.base = RIIMapSpec::Base::TopLeft;
  } else if (base == "constant") {
    h.base = RIIMapSpec::Base::Constant;
  } else {
    bad("unknown R_II map base '" + base + "'");
  }
  h.value = value_or<Complex>(j, "value", Complex(0.0), complex_from);
  if (j.contains("chain")) {
    for (const auto& a : j.at("chain")) h.chain.push_back(mat2_from(a));
  }
  return h;
}

LeftInverseSpec left_inverse_from(const json& j) {
  if (j.is_string()) return parse_left_inverse(j.get<std::string>());
  const std::string name = kind_of(j, "family");
  auto cx = [&](const char* k, Complex d) { return value_or<Complex>(j, k, d, complex_from); };
  auto re = [&](const char* k, double d) { return value_or<double>(j, k, d, real_from); };
  auto in = [&](const char* k, int d) { return value_or<int>(j, k, d, int_from); };
  auto fl = [&](const char* k) { return value_or<bool>(j, k, false, bool_from); };
  Family fam;
  if (name == "psi") {
    fam = PsiOmega{cx("omega", 1.0)};
  } else if (name == "phi") {
    fam = PhiOmega{cx("omega", 1.0), fl("swapped")};
  } else if (name == "phitilde") {
    fam = PhiTilde{cx("omega", 1.0), fl("swapped")};
  } else if (name == "ball") {
    fam = BallGamma{cx("gamma", 0.0)};
  } else if (name == "gaj") {
    fam = ModelGAj{re("A", 0.0), in("j", 2)};
  } else if (name == "reinhardt") {
    fam = ReinhardtBeta{re("beta", 0.0), in("k", 2)};
  } else if (name == "retract") {
    Retract r;
    r.t = re("t", 0.5);
    if (j.contains("h1")) r.h1 = selfmap_from(j.at("h1"));
    if (j.contains("h2")) r.h2 = selfmap_from(j.at("h2"));
    fam = r;
  } else if (name == "bidisc-linear") {
    fam = BidiscLinear{re("t", 1.0), cx("gamma", 1.0)};
  } else if (name == "g2-parabolic") {
    const MoebiusSpec a = j.contains("a") ? moebius_from(j.at("a")) : MoebiusSpec{};
    const MoebiusSpec b = j.contains("b") ? moebius_from(j.at("b")) : MoebiusSpec{};
    G2Parabolic p = make_g2_parabolic(a, b);
    if (j.contains("h")) p.h = complex_from(j.at("h"));
    fam = p;
  } else if (name == "fh") {
    const double beta = re("beta", 0.5);
    fam = TetraFh{beta, j.contains("h") ? rii_map_from(j.at("h")) : RIIMapSpec::canonical(beta), fl("swapped")};
  } else if (name == "projection") {
    fam = Projection{in("index", 1)};
  } else if (name == "constant") {
    fam = ConstantMap{cx("value", 0.0)};
  } else {
    bad("unknown map family '" + name + "'");
  }
  LeftInverseSpec spec = LeftInverseSpec::of(fam, j.contains("post") ? moebius_from(j.at("post")) : MoebiusSpec{});
  validate(spec);
  return spec;
}

ZSpec z_from(const json& j) {
  if (j.is_string()) return parse_z(j.get<std::string>());
  if (value_or<bool>(j, "identity", false, bool_from)) return ZSpec::id();
  return ZSpec::times_lambda(selfmap_from(field(j, "w")));
}

GeodesicSpec geodesic_from(const json& j) {
  if (j.is_string()) return parse_geodesic(j.get<std::string>());
  const std::string kind = kind_of(j, "kind");
  auto cx = [&](const char* k, Complex d) { return value_or<Complex>(j, k, d, complex_from); };
  if (kind == "polydisc-graph") {
    PolydiscGraph g;
    for (const auto& e : field(j, "g")) g.g.push_back(selfmap_from(e));
    return g;
  }
  if (kind == "axis") return Axis{value_or<int>(j, "dim", 2, int_from)};
  if (kind == "g2-blaschke") return G2GeodesicSpec{BlaschkeForm{{cx("alpha", 0.0)}}};
  if (kind == "g2-auto") return G2GeodesicSpec{AutoForm{moebius_from(field(j, "a"))}};
  if (kind == "g2-pair") return G2Pair{moebius_from(field(j, "a")), moebius_from(field(j, "b"))};
  if (kind == "e-form0") {
    Form0 f;
    f.omega1 = cx("omega1", 1.0);
    f.omega2 = cx("omega2", 1.0);
    f.c = value_or<double>(j, "C", 0.0, real_from);
    f.psi = selfmap_from(field(j, "psi"));
    return EGeodesicSpec{f};
  }
  if (kind == "e-formva") {
    FormVA f;
    f.beta = value_or<double>(j, "beta", 0.5, real_from);
    f.a = cx("a", 1.0);
    f.b = cx("b", 0.0);
    f.c = cx("c", 0.0);
    f.d = cx("d", 1.0);
    if (j.contains("z")) f.z = z_from(j.at("z"));
    return EGeodesicSpec{f};
  }
  bad("unknown geodesic kind '" + kind + "'");
}

DomainTag domain_from(const json& j) {
  if (j.is_string()) {
    const auto d = parse_domain(j.get<std::string>());
    if (!d) bad("unknown domain '" + j.get<std::string>() + "'");
    return *d;
  }
  const std::string name = kind_of(j, "name");
  if (name == "reinhardt") {
    std::optional<int> k;
    if (j.contains("k") && !j.at("k").is_null()) k = int_from(j.at("k"));
    return DomainTag::reinhardt(k, value_or<double>(j, "b", 1.0, real_from));
  }
  return domain_from(json(name));
}

Classification classification_from(const json& j) {
  if (j.contains("schema") && j.at("schema") != kSchema) bad("unsupported schema " + j.at("schema").dump());
  Classification c;
  const std::string v = kind_of(j, "verdict");
  if (v == "unique") {
    c.verdict = Verdict::Unique;
  } else if (v == "non-unique") {
    c.verdict = Verdict::NonUnique;
  } else if (v == "invalid-spec") {
    c.verdict = Verdict::InvalidSpec;
  } else {
    bad("unknown verdict '" + v + "'");
  }
  c.reason = j.value("reason", std::string());
  if (j.contains("witnesses")) {
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(left_inverse_from(w));
  }
  c.residuals.assign(c.witnesses.size(), 0.0);
  if (j.contains("residual_report")) {
    for (const auto& r : j.at("residual_report")) {
      const auto i = r.at("witness").get<std::size_t>();
      if (i >= c.residuals.size()) bad("residual_report refers to a missing witness");
      c.residuals[i] = real_from(r.at("max_residual"));
    }
  }
  c.min_pairwise_difference = value_or<double>(j, "min_pairwise_difference", 0.0, real_from);
  if (j.contains("geodesic")) c.geodesic = geodesic_from(j.at("geodesic"));
  if (j.contains("domain")) c.domain = domain_from(j.at("domain"));
  c.note = j.value("note", std::string());
  return c;
}

}  // namespace xdisc::cli
