#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tiltcara/applications.hpp"
#include "tiltcara/bounds.hpp"
#include "tiltcara/caratheodory.hpp"
#include "tiltcara/errors.hpp"
#include "tiltcara/extremal.hpp"
#include "tiltcara/random.hpp"
#include "tiltcara/series.hpp"

namespace tiltcara::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kCheckTol = 1e-9;
const std::vector<double> kDefaultLambdas{0.0, 0.3, -0.3, 0.9, -0.9, 1.3, -1.3};
const std::vector<double> kCertificateRadii{0.2, 0.5, 0.8};

Json base_parameters(const Options& o) {
  Json p;
  p["lambda"] = o.lambdas;
  return p;
}

// --- verify -----------------------------------------------------------------

struct Suite {
  ReportRecord& rec;

  void add(const std::string& check, double lambda, double r, double value, double bound, double margin,
           bool pass) {
    rec.rows.push_back({check, lambda, r, value, bound, margin, pass});
    if (!pass) {
      rec.pass = false;
      rec.failures.push_back(fmt::format("{} lambda={} r={}", check, format_number(lambda), format_number(r)));
    }
  }

  /// value is the largest excess over the bound; it must stay within kCheckTol.
  void add_excess(const std::string& check, double lambda, double excess) {
    add(check, lambda, kNaN, excess, kCheckTol, kCheckTol - excess, excess <= kCheckTol);
  }
};

void verify_lambda(Suite& suite, const Options& o, std::size_t li) {
  const double l = o.lambdas[li];
  const TiltAngle tilt(l);
  const auto grid = EvaluationGrid::standard();
  const std::uint64_t stream = split_seed(o.seed, li);
  const std::size_t sub_order = std::min<std::size_t>(o.order, 32);
  const Series kernel = kernel_series(tilt, 1.0, sub_order);

  double coeff_max = 0, disc = -HUGE_VAL, logd = -HUGE_VAL, sub = 0, omega = 0;
  double spiral = -HUGE_VAL, dclass = -HUGE_VAL;
  for (std::size_t s = 0; s < o.seeds; ++s) {
    const auto p = random_member(tilt, 1 + s % 8, split_seed(stream, s), o.order);
    for (std::size_t n = 1; n <= p.series().order(); ++n) coeff_max = std::max(coeff_max, std::abs(p.series()[n]));
    for (double r : grid.radii()) {
      const Disc d = containment_disc(tilt, r);
      const double m = logderiv_M(tilt, r);
      const Interval dist = dclass_distortion(tilt, r);
      for (double t : grid.angles()) {
        const Complex z = std::polar(r, t);
        const Complex v = p(z);
        disc = std::max(disc, std::abs(v - d.center) - d.radius);
        logd = std::max(logd, std::abs(p.log_derivative(z)) - m);
        omega = std::max(omega, std::abs(omega_at(p, z)));
        dclass = std::max({dclass, dist.lo - std::abs(v), std::abs(v) - dist.hi});
      }
    }
    const auto low = random_member(tilt, 1 + s % 8, split_seed(stream, s), sub_order);
    sub = std::max(sub, max_coeff_distance(compose(kernel, subordination_omega(low)), low.series()));
    const auto rep = spirallike_verify(spirallike_from_member(p), tilt, grid);
    spiral = std::max({spiral, rep.disc_excess, rep.re_excess, rep.modulus_excess});
  }

  const double cb = coeff_bound(tilt);
  suite.add("coeff_sweep", l, kNaN, coeff_max, cb, cb - coeff_max, coeff_max <= cb + kCheckTol);
  suite.add_excess("disc_sweep", l, disc);
  suite.add_excess("logderiv_sweep", l, logd);
  suite.add("subordination_roundtrip", l, kNaN, sub, kCheckTol, kCheckTol - sub, sub <= kCheckTol);
  suite.add("subordination_omega", l, kNaN, omega, 1.0, 1.0 - omega, omega < 1.0);
  suite.add_excess("spirallike_sweep", l, spiral);
  suite.add_excess("dclass_sweep", l, dclass);

  CertificateOptions copts;
  copts.lattice_size = o.lattice;
  copts.order = o.order;
  copts.bound_scale = o.fault_scale;
  for (const auto& name : registered_bounds()) {
    const bool coefficient = name == "coeff";
    for (double r : coefficient ? std::vector<double>{0.0} : kCertificateRadii) {
      const auto rep = sharpness_certificate(name, tilt, r, copts);
      suite.add("cert:" + name, l, coefficient ? kNaN : r, rep.achieved, rep.bound, rep.gap, certified(rep));
    }
  }
}

// --- argument handling --------------------------------------------------------

void write_report(const ReportRecord& rec, const std::string& format, const std::string& path,
                  std::ostream& out) {
  const std::string text = format == "json" ? to_json_text(rec) : to_csv(rec);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidParameter("cannot open " + path + " for writing");
  f << text;
}

}  // namespace

ReportRecord cmd_bounds(const Options& o) {
  ReportRecord rec;
  rec.command = "bounds";
  rec.parameters = base_parameters(o);
  rec.parameters["r"] = o.radii;
  rec.columns = {
      {"lambda", "tilt angle"},
      {"r", "radius |z|"},
      {"coeff", "|p_n| <= 2 cos(lambda)"},
      {"deriv", "|p'(z)| <= 2 cos(lambda) / (1 - r)^2"},
      {"disc_center_re", "Re of (1 + r^2 e^{-2i lambda}) / (1 - r^2)"},
      {"disc_center_im", "Im of (1 + r^2 e^{-2i lambda}) / (1 - r^2)"},
      {"disc_radius", "|p(z) - center| <= 2 r cos(lambda) / (1 - r^2)"},
      {"A", "|p(z)| <= A(lambda, r)"},
      {"inv_A", "|p(z)| >= 1 / A(lambda, r)"},
      {"re_lo", "min of Re p(z) on |z| = r"},
      {"re_hi", "max of Re p(z) on |z| = r"},
      {"M", "|z p'(z) / p(z)| <= M(lambda, r)"},
      {"N", "min of |z p_lambda'(z) / p_lambda(z)| on |z| = r"},
  };
  if (o.lambdas.empty() || o.radii.empty()) throw InvalidParameter("bounds needs --lambda and --r");
  for (double l : o.lambdas) {
    const TiltAngle tilt(l);
    for (double r : o.radii) {
      const Disc d = containment_disc(tilt, r);
      const Interval re = re_bounds(tilt, r);
      const double a = growth_A(tilt, r);
      rec.rows.push_back({l, r, coeff_bound(tilt), deriv_bound(tilt, r), d.center.real(), d.center.imag(),
                          d.radius, a, 1.0 / a, re.lo, re.hi, logderiv_M(tilt, r), logderiv_N(tilt, r)});
    }
  }
  return rec;
}

ReportRecord cmd_verify(const Options& in) {
  Options o = in;
  if (o.lambdas.empty()) o.lambdas = kDefaultLambdas;
  if (o.order < 1) throw InvalidParameter("order must be >= 1");
  for (double l : o.lambdas) TiltAngle{l};

  ReportRecord rec;
  rec.command = "verify";
  rec.parameters = base_parameters(o);
  rec.parameters["order"] = o.order;
  rec.parameters["seed"] = o.seed;
  rec.parameters["seeds"] = o.seeds;
  rec.parameters["lattice"] = o.lattice;
  if (o.fault_scale != 1.0) rec.parameters["inject_fault"] = o.fault_scale;
  rec.columns = {
      {"check", "name of the property or certificate"},
      {"lambda", "tilt angle"},
      {"r", "radius |z| (nan for whole-grid checks)"},
      {"value", "observed extreme; for *_sweep grid checks the largest excess over the closed-form bound"},
      {"bound", "closed-form bound, or the tolerance for excess checks"},
      {"margin", "bound - value for upper checks, gap for certificates"},
      {"pass", "check outcome"},
  };
  Suite suite{rec};
  for (std::size_t li = 0; li < o.lambdas.size(); ++li) verify_lambda(suite, o, li);
  return rec;
}

ReportRecord cmd_radius(const Options& o) {
  if (o.lambdas.empty()) throw InvalidParameter("radius needs --lambda");
  ReportRecord rec;
  rec.command = "radius";
  rec.parameters = base_parameters(o);
  rec.parameters["tol"] = o.tol;
  rec.columns = {
      {"lambda", "tilt angle"},
      {"r_star", "Robertson radius R(lambda), 1 when the bracket touches 1"},
      {"lo", "largest radius where the predicate was seen true"},
      {"hi", "smallest radius where the predicate was seen false, or 1"},
      {"width", "hi - lo"},
      {"touches_one", "bracket reaches r = 1"},
      {"iterations", "bisection steps"},
      {"inner_samples", "angular samples per inner supremum"},
  };
  for (double l : o.lambdas) {
    const auto res = robertson_radius(TiltAngle(l), o.tol);
    rec.rows.push_back({l, res.r_star, res.lo, res.hi, res.width, res.touches_one,
                        static_cast<std::int64_t>(res.iterations), static_cast<std::int64_t>(res.inner_samples)});
  }
  return rec;
}

ReportRecord cmd_scan(const Options& o) {
  if (o.lambdas.size() != 1) throw InvalidParameter("scan takes exactly one --lambda");
  if (o.radii.size() > 1) throw InvalidParameter("scan takes at most one --r");
  const TiltAngle tilt(o.lambdas.front());
  const double r = o.radii.empty() ? 0.5 : o.radii.front();
  CertificateOptions copts;
  copts.lattice_size = o.lattice;
  copts.order = o.order;
  copts.bound_scale = o.fault_scale;
  const BoundReport rep = sharpness_certificate(o.bound, tilt, r, copts);

  ReportRecord rec;
  rec.command = "scan";
  rec.parameters["bound"] = o.bound;
  rec.parameters["lambda"] = o.lambdas;
  rec.parameters["r"] = rep.radius ? *rep.radius : kNaN;
  if (!rep.radius) rec.parameters["r"] = nullptr;
  rec.parameters["order"] = o.order;
  rec.parameters["lattice"] = o.lattice;
  if (o.fault_scale != 1.0) rec.parameters["inject_fault"] = o.fault_scale;
  rec.columns = {
      {"bound", "registered bound name"},
      {"sense", "upper or lower"},
      {"bound_value", "closed-form value"},
      {"achieved", "refined extremum over the rotated kernels p_lambda(x z)"},
      {"gap", "bound - achieved (upper) or achieved - bound (lower)"},
      {"witness_x_re", "Re x of the attaining kernel"},
      {"witness_x_im", "Im x of the attaining kernel"},
      {"witness_z_re", "Re z of the attaining point"},
      {"witness_z_im", "Im z of the attaining point"},
      {"witness_alpha", "arg(x z)"},
      {"predicted_alpha_1", "first predicted attaining arg(x z)"},
      {"predicted_alpha_2", "second predicted attaining arg(x z)"},
      {"alpha_error", "distance from witness_alpha to the nearest prediction"},
      {"certified", "gap within [-1e-9, 1e-6]"},
  };
  const Complex wx = rep.witness_x.value_or(Complex(kNaN, kNaN));
  const Complex wz = rep.witness_z.value_or(Complex(kNaN, kNaN));
  const auto& pa = rep.predicted_alpha;
  const bool ok = certified(rep);
  rec.rows.push_back({rep.name, std::string(rep.sense == BoundReport::Sense::Upper ? "upper" : "lower"), rep.bound,
                      rep.achieved, rep.gap, wx.real(), wx.imag(), wz.real(), wz.imag(),
                      rep.witness_alpha.value_or(kNaN), pa.size() > 0 ? pa[0] : kNaN, pa.size() > 1 ? pa[1] : kNaN,
                      rep.alpha_error.value_or(kNaN), ok});
  rec.pass = ok;
  if (!ok) rec.failures.push_back("cert:" + rep.name);
  return rec;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for the tilted Caratheodory class"};
  app.require_subcommand(1);
  Options o;
  std::string format = "csv";
  std::string path;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambdas, "tilt angle(s) in (-pi/2, pi/2)");
    sub->add_option("--order", o.order, "series order")->capture_default_str();
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("--out", path, "write the report here instead of stdout");
    sub->add_flag("--timing", timing, "record wall time in the report");
  };
  auto* bounds = app.add_subcommand("bounds", "closed-form bound table");
  common(bounds);
  bounds->add_option("--r", o.radii, "radii in [0, 1)");

  auto* verify = app.add_subcommand("verify", "property and sharpness suite");
  common(verify);
  verify->add_option("--seed", o.seed, "base seed")->capture_default_str();
  verify->add_option("--seeds", o.seeds, "random members per lambda")->capture_default_str();
  verify->add_option("--lattice", o.lattice, "certificate lattice size")->capture_default_str();
  verify->add_option("--inject-fault", o.fault_scale, "scale every certified bound by this factor");

  auto* radius = app.add_subcommand("radius", "Robertson radius per lambda");
  common(radius);
  radius->add_option("--tol", o.tol, "bisection tolerance, >= 1e-6")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "sharpness certificate of one bound");
  common(scan);
  scan->add_option("bound", o.bound, "registered bound name")->required();
  scan->add_option("--r", o.radii, "radius in [0, 1)");
  scan->add_option("--lattice", o.lattice, "lattice size")->capture_default_str();
  scan->add_option("--inject-fault", o.fault_scale, "scale the bound by this factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    ReportRecord rec;
    if (*bounds) rec = cmd_bounds(o);
    else if (*verify) rec = cmd_verify(o);
    else if (*radius) rec = cmd_radius(o);
    else rec = cmd_scan(o);
    if (timing) rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report(rec, format, path, out);
    for (const auto& f : rec.failures) err << "failed: " << f << '\n';
    return rec.pass ? kPass : kAssertionFailure;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace tiltcara::cli
