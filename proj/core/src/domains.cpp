#include "extremal_disc/domains.hpp"

#include <cmath>
#include <numbers>

namespace xdisc {

DomainTag DomainTag::reinhardt(std::optional<int> k, double b) {
  if (!(b > 0.0)) fail(ErrorCode::InvalidSpec, "Reinhardt model requires b > 0");
  if (k && *k < 1) fail(ErrorCode::InvalidSpec, "Reinhardt model requires k >= 1");
  return {DomainKind::ReinhardtModel, k, b};
}

int DomainTag::dimension() const noexcept {
  switch (kind) {
    case DomainKind::Disc: return 1;
    case DomainKind::Tetrablock:
    case DomainKind::RII: return 3;
    default: return 2;
  }
}

std::string DomainTag::name() const {
  switch (kind) {
    case DomainKind::Disc: return "disc";
    case DomainKind::Bidisc: return "bidisc";
    case DomainKind::Ball2: return "ball2";
    case DomainKind::G2: return "g2";
    case DomainKind::Tetrablock: return "tetrablock";
    case DomainKind::RII: return "rii";
    case DomainKind::ReinhardtModel:
      return "reinhardt:k=" + (k ? std::to_string(*k) : std::string("inf")) +
             ",b=" + std::to_string(b);
  }
  return "unknown";
}

std::optional<DomainTag> parse_domain(const std::string& text) {
  if (text == "disc") return DomainTag::of(DomainKind::Disc);
  if (text == "bidisc") return DomainTag::of(DomainKind::Bidisc);
  if (text == "ball2" || text == "ball") return DomainTag::of(DomainKind::Ball2);
  if (text == "g2") return DomainTag::of(DomainKind::G2);
  if (text == "tetrablock" || text == "e") return DomainTag::of(DomainKind::Tetrablock);
  if (text == "rii") return DomainTag::of(DomainKind::RII);
  const std::string prefix = "reinhardt";
  if (text.rfind(prefix, 0) != 0) return std::nullopt;
  std::optional<int> k = 2;
  double b = 1.0;
  std::string rest = text.substr(prefix.size());
  if (!rest.empty() && rest[0] == ':') rest.erase(0, 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = rest.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) return std::nullopt;
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    try {
      if (key == "k") {
        k = (value == "inf") ? std::nullopt : std::optional<int>(std::stoi(value));
      } else if (key == "b") {
        b = std::stod(value);
      } else {
        return std::nullopt;
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
    pos = comma + 1;
  }
  if (!(b > 0.0) || (k && *k < 1)) return std::nullopt;
  return DomainTag{DomainKind::ReinhardtModel, k, b};
}

std::array<Complex, 2> g2_roots(const PointG2& pt) {
  return quadratic_roots(1.0, -pt.s, pt.p);
}

bool in_g2(const PointG2& pt) {
  if (!is_finite(pt.s) || !is_finite(pt.p)) return false;
  const auto r = g2_roots(pt);
  return in_open_disc(r[0]) && in_open_disc(r[1]);
}

bool in_e(const PointE& pt) {
  const double lhs = std::abs(pt.x1 - std::conj(pt.x2) * pt.x3) +
                     std::abs(pt.x2 - std::conj(pt.x1) * pt.x3) + std::norm(pt.x3);
  return lhs < 1.0;
}

bool in_rii(const Mat2& m) {
  if (!m.is_symmetric()) fail(ErrorCode::InvalidSpec, "in_rii: matrix must be symmetric");
  return operator_norm(m) < 1.0;
}

bool in_bidisc(Complex z1, Complex z2) noexcept { return in_open_disc(z1) && in_open_disc(z2); }

bool in_ball2(Complex z1, Complex z2) noexcept { return std::norm(z1) + std::norm(z2) < 1.0; }

namespace {

double reinhardt_profile(std::optional<int> k, double b, Complex w) {
  const double r = std::abs(w);
  if (k) return b * std::pow(r, *k);
  if (r == 0.0) return 0.0;
  return b * std::exp(1.0 - 1.0 / (r * r));
}

}  // namespace

bool in_reinhardt_model(std::optional<int> k, double b, Complex z, Complex w) {
  if (!k && std::abs(w) >= 1.0) return false;
  return std::abs(z) + reinhardt_profile(k, b, w) < 1.0;
}

bool in_slc_model(double A, const CVec& z) {
  if (z.empty()) return false;
  double tail = 0.0;
  for (std::size_t j = 1; j < z.size(); ++j) tail += std::norm(z[j]);
  return std::abs(z[0]) + A * tail < 1.0;
}

bool contains(const DomainTag& tag, const CVec& c) {
  if (static_cast<int>(c.size()) != tag.dimension()) return false;
  switch (tag.kind) {
    case DomainKind::Disc: return in_open_disc(c[0]);
    case DomainKind::Bidisc: return in_bidisc(c[0], c[1]);
    case DomainKind::Ball2: return in_ball2(c[0], c[1]);
    case DomainKind::G2: return in_g2({c[0], c[1]});
    case DomainKind::Tetrablock: return in_e({c[0], c[1], c[2]});
    case DomainKind::RII: return in_rii(Mat2::symmetric(c[0], c[1], c[2]));
    case DomainKind::ReinhardtModel: return in_reinhardt_model(tag.k, tag.b, c[0], c[1]);
  }
  return false;
}

PointG2 pi_sym(Complex l1, Complex l2) { return {l1 + l2, l1 * l2}; }

PointE pi_cover(const Mat2& m) { return {m.m11, m.m22, m.m11 * m.m22 - m.m12 * m.m21}; }

PointE g2_embed_e(Complex omega, const PointG2& pt) {
  if (std::abs(std::abs(omega) - 1.0) > 1e-12) {
    fail(ErrorCode::DomainError, "g2_embed_e: omega must be unimodular");
  }
  return {omega * pt.s / 2.0, pt.s / 2.0, omega * pt.p};
}

PointG2 e_project_g2(Complex omega, const PointE& pt) {
  if (std::abs(omega) > 1.0 + 1e-12) {
    fail(ErrorCode::DomainError, "e_project_g2: |omega| must not exceed 1");
  }
  return {pt.x1 + omega * pt.x2, omega * pt.x3};
}

PointE sigma_swap(const PointE& pt) { return {pt.x2, pt.x1, pt.x3}; }

bool on_royal_g2(const PointG2& pt, double tol) {
  return std::abs(pt.s * pt.s - 4.0 * pt.p) <= tol && in_g2(pt);
}

bool on_royal_e(const PointE& pt, double tol) {
  return std::abs(pt.x1 * pt.x2 - pt.x3) <= tol && in_e(pt);
}

CVec to_coords(const PointG2& pt) { return {pt.s, pt.p}; }
CVec to_coords(const PointE& pt) { return {pt.x1, pt.x2, pt.x3}; }

PointG2 g2_from(const CVec& c) {
  if (c.size() != 2) fail(ErrorCode::DomainError, "expected 2 coordinates for a G2 point");
  return {c[0], c[1]};
}

PointE e_from(const CVec& c) {
  if (c.size() != 3) fail(ErrorCode::DomainError, "expected 3 coordinates for a tetrablock point");
  return {c[0], c[1], c[2]};
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL);
}

namespace {

// Sequential splitmix64 stream; doubles take the top 53 bits.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  double uniform() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  double normal() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  // Area-uniform on the disc of the given radius (polar method).
  Complex disc(double radius = 1.0) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
  }

 private:
  std::uint64_t state_;
};

enum : std::uint64_t {
  kStreamDisc = 1, kStreamBidisc, kStreamBall, kStreamG2, kStreamRII, kStreamE,
  kStreamReinhardt, kStreamSlc
};

Mat2 draw_rii(Stream& rng) {
  for (;;) {
    const Mat2 m = Mat2::symmetric(rng.disc(), rng.disc(), rng.disc());
    if (operator_norm(m) < 1.0) return m;
  }
}

}  // namespace

std::vector<Mat2> sample_rii(std::size_t n, std::uint64_t seed) {
  Stream rng(substream_seed(seed, kStreamRII));
  std::vector<Mat2> out;
  out.reserve(n);
  while (out.size() < n) out.push_back(draw_rii(rng));
  return out;
}

std::vector<PointG2> sample_g2(std::size_t n, std::uint64_t seed) {
  Stream rng(substream_seed(seed, kStreamG2));
  std::vector<PointG2> out;
  out.reserve(n);
  while (out.size() < n) {
    const PointG2 pt = pi_sym(rng.disc(), rng.disc());
    if (in_g2(pt)) out.push_back(pt);
  }
  return out;
}

std::vector<PointE> sample_e(std::size_t n, std::uint64_t seed) {
  Stream rng(substream_seed(seed, kStreamE));
  std::vector<PointE> out;
  out.reserve(n);
  while (out.size() < n) {
    const PointE pt = pi_cover(draw_rii(rng));
    // Π maps R_II onto E; the re-check only discards rounding casualties.
    if (in_e(pt)) out.push_back(pt);
  }
  return out;
}

std::vector<CVec> sample_slc_model(double A, int dim, std::size_t n, std::uint64_t seed) {
  if (dim < 2 || A < 0.0) fail(ErrorCode::InvalidSpec, "sample_slc_model: need dim >= 2, A >= 0");
  Stream rng(substream_seed(seed, kStreamSlc));
  const double radius = A > 0.0 ? std::sqrt(1.0 / A) : 1.0;
  std::vector<CVec> out;
  out.reserve(n);
  while (out.size() < n) {
    CVec z(static_cast<std::size_t>(dim));
    z[0] = rng.disc();
    for (int j = 1; j < dim; ++j) z[static_cast<std::size_t>(j)] = rng.disc(radius);
    if (in_slc_model(A, z)) out.push_back(std::move(z));
  }
  return out;
}

std::vector<CVec> sample(const DomainTag& tag, std::size_t n, std::uint64_t seed) {
  std::vector<CVec> out;
  out.reserve(n);
  switch (tag.kind) {
    case DomainKind::Disc: {
      Stream rng(substream_seed(seed, kStreamDisc));
      while (out.size() < n) out.push_back({rng.disc()});
      break;
    }
    case DomainKind::Bidisc: {
      Stream rng(substream_seed(seed, kStreamBidisc));
      while (out.size() < n) {
        const Complex z1 = rng.disc();
        out.push_back({z1, rng.disc()});
      }
      break;
    }
    case DomainKind::Ball2: {
      Stream rng(substream_seed(seed, kStreamBall));
      while (out.size() < n) {
        double g[4];
        for (double& v : g) v = rng.normal();
        const double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
        const double r = std::pow(rng.uniform(), 0.25);
        if (norm == 0.0) continue;
        const Complex z1{r * g[0] / norm, r * g[1] / norm};
        const Complex z2{r * g[2] / norm, r * g[3] / norm};
        if (in_ball2(z1, z2)) out.push_back({z1, z2});
      }
      break;
    }
    case DomainKind::G2:
      for (const auto& pt : sample_g2(n, seed)) out.push_back(to_coords(pt));
      break;
    case DomainKind::Tetrablock:
      for (const auto& pt : sample_e(n, seed)) out.push_back(to_coords(pt));
      break;
    case DomainKind::RII:
      for (const auto& m : sample_rii(n, seed)) out.push_back({m.m11, m.m12, m.m22});
      break;
    case DomainKind::ReinhardtModel: {
      Stream rng(substream_seed(seed, kStreamReinhardt));
      const double radius = tag.k ? std::pow(1.0 / tag.b, 1.0 / *tag.k) : 1.0;
      while (out.size() < n) {
        const Complex z = rng.disc();
        const Complex w = rng.disc(radius);
        if (in_reinhardt_model(tag.k, tag.b, z, w)) out.push_back({z, w});
      }
      break;
    }
  }
  return out;
}

}  // namespace xdisc
