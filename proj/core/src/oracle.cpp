#include "extremal_disc/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

namespace xdisc {

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EXTREMAL_DISC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

std::pair<double, std::size_t> parallel_max(std::size_t n, const std::function<double(std::size_t)>& fn) {
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(thread_count(), std::max<std::size_t>(1, n / 256)));
  auto run = [&](std::size_t lo, std::size_t hi, double& best, std::size_t& arg) {
    best = -1.0;
    arg = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = fn(i);
      if (v > best || std::isnan(v)) {
        best = std::isnan(v) ? INFINITY : v;
        arg = i;
        if (std::isinf(best)) return;
      }
    }
  };
  if (threads <= 1) {
    double best = 0.0;
    std::size_t arg = 0;
    run(0, n, best, arg);
    return {best, arg};
  }
  std::vector<double> best(threads, -1.0);
  std::vector<std::size_t> arg(threads, 0);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = std::min(n, t * chunk), hi = std::min(n, lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      try {
        run(lo, hi, best[t], arg[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  double b = -1.0;
  std::size_t a = 0;
  for (unsigned t = 0; t < threads; ++t) {
    if (best[t] > b) {
      b = best[t];
      a = arg[t];
    }
  }
  return {b, a};
}

CVec lambda_grid(std::size_t n, double r_max) {
  CVec out;
  out.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double r = r_max * std::sqrt((static_cast<double>(i) + 0.5) / static_cast<double>(n));
    out.push_back(std::polar(r, golden * static_cast<double>(i)));
  }
  return out;
}

namespace {

std::string show(const CVec& z) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    os << (i ? ", " : "") << z[i].real() << (z[i].imag() < 0 ? "" : "+") << z[i].imag() << "i";
  }
  os << ")";
  return os.str();
}

Complex eval_at(const LeftInverseSpec& f, const CVec& z) {
  try {
    return eval_left_inverse(f, z);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(e.what()) + " at sample " + show(z));
  }
}

}  // namespace

VerificationReport verify_into_disc(const LeftInverseSpec& f, const std::vector<CVec>& points,
                                    std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "into-disc";
  rep.seed = seed;
  rep.sample_count = points.size();
  rep.closed_ball = closed_ball_family(f);
  rep.threshold = rep.closed_ball ? 1.0 + 1e-12 : 1.0;
  const auto [sup, at] = parallel_max(points.size(), [&](std::size_t i) { return std::abs(eval_at(f, points[i])); });
  rep.max_residual = points.empty() ? 0.0 : sup;
  if (!points.empty()) rep.worst_point = points[at];
  rep.pass = rep.closed_ball ? rep.max_residual <= rep.threshold : rep.max_residual < 1.0;
  return rep;
}

VerificationReport verify_into_disc(const LeftInverseSpec& f, const DomainTag& tag, std::size_t n,
                                    std::uint64_t seed) {
  return verify_into_disc(f, sample(tag, n, seed), seed);
}

VerificationReport verify_left_inverse(const LeftInverseSpec& f, const GeodesicSpec& g, const CVec& grid,
                                       double threshold) {
  VerificationReport rep;
  rep.check = "left-inverse";
  rep.threshold = threshold;
  rep.sample_count = grid.size();
  const auto [worst, at] = parallel_max(grid.size(), [&](std::size_t i) {
    return std::abs(eval_at(f, eval_geodesic(g, grid[i])) - grid[i]);
  });
  rep.max_residual = grid.empty() ? 0.0 : worst;
  if (!grid.empty()) rep.worst_point = {grid[at]};
  rep.pass = rep.max_residual <= threshold;
  return rep;
}

VerificationReport verify_left_inverse(const LeftInverseSpec& f, const GeodesicSpec& g, std::size_t grid_n,
                                       double threshold) {
  return verify_left_inverse(f, g, lambda_grid(grid_n), threshold);
}

DistinctReport distinct_maps(const LeftInverseSpec& f1, const LeftInverseSpec& f2,
                             const std::vector<CVec>& points, double threshold) {
  DistinctReport rep;
  rep.threshold = threshold;
  rep.sample_count = points.size();
  const auto [sup, at] = parallel_max(points.size(), [&](std::size_t i) {
    return std::abs(eval_at(f1, points[i]) - eval_at(f2, points[i]));
  });
  rep.sup_difference = points.empty() ? 0.0 : sup;
  if (!points.empty()) rep.worst_point = points[at];
  rep.distinct = rep.sup_difference > threshold;
  return rep;
}

DistinctReport distinct_maps(const LeftInverseSpec& f1, const LeftInverseSpec& f2, const DomainTag& tag,
                             std::size_t n, std::uint64_t seed, double threshold) {
  DistinctReport rep = distinct_maps(f1, f2, sample(tag, n, seed), threshold);
  rep.seed = seed;
  return rep;
}

double caratheodory_lb(const LeftInverseSpec& f, const CVec& w, const CVec& z) {
  return poincare(eval_at(f, w), eval_at(f, z));
}

double lempert_ub_from_geodesic(const GeodesicSpec&, Complex l1, Complex l2) { return poincare(l1, l2); }

EqualityReport equality_check(const GeodesicSpec& g, const LeftInverseSpec& f, Complex l1, Complex l2,
                              double tol) {
  EqualityReport rep;
  rep.lb = caratheodory_lb(f, eval_geodesic(g, l1), eval_geodesic(g, l2));
  rep.ub = lempert_ub_from_geodesic(g, l1, l2);
  rep.pass = std::abs(rep.lb - rep.ub) <= tol;
  return rep;
}

}  // namespace xdisc
