// subfox: tabulate subordinator densities, evaluate transforms, compose
// H-distributions and run the verification suites.
//
// Exit status: 0 success, 1 verification failure, 2 usage or domain error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subfox/subfox.hpp"
#include "table.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

constexpr const char* kSchema = "subfox/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridOptions {
  std::vector<double> x;
  std::optional<double> from;
  std::optional<double> to;
  int n_points = 1;
  bool log_spaced = false;

  void add(CLI::App* app) {
    app->add_option("--x", x, "Evaluation point(s), strictly increasing")->delimiter(',');
    app->add_option("--from", from, "Lower end of an evaluation range");
    app->add_option("--to", to, "Upper end of an evaluation range");
    app->add_option("--n-points", n_points, "Number of points in the range")->check(CLI::PositiveNumber);
    app->add_flag("--log", log_spaced, "Log-spaced range");
  }

  std::vector<double> resolve() const {
    std::vector<double> xs;
    if (!x.empty()) {
      if (from || to) throw UsageError("give either --x or --from/--to, not both");
      xs = x;
    } else if (from) {
      xs = subfox::cli::make_grid(*from, to.value_or(*from), n_points, log_spaced);
    } else {
      throw UsageError("no evaluation points: use --x or --from/--to/--n-points");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(xs[i] > xs[i - 1])) throw UsageError("evaluation grid must be strictly increasing");
    }
    return xs;
  }
};

struct Output {
  std::string format = "csv";
  std::string path;

  void add(CLI::App* app, std::vector<std::string> formats = {"csv", "json"}) {
    app->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    app->add_option("-o,--output", path, "Write to a file instead of stdout");
  }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open output file " + path);
    f << text;
  }
};

int thread_cap() {
  const char* env = std::getenv("SUBFOX_THREADS");
  if (env == nullptr || *env == '\0') return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("SUBFOX_THREADS must be a positive integer");
  return static_cast<int>(std::min(v, 1024L));
}

// Values come back in grid order whatever order the workers finish in.
std::vector<double> tabulate(const std::vector<double>& xs, const std::function<double(double)>& f) {
  std::vector<double> out(xs.size());
  const int workers = std::min<int>(thread_cap(), static_cast<int>(xs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < xs.size();) {
      try {
        out[i] = f(xs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = xs.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string render_table(const std::vector<double>& xs, const std::vector<double>& vs, const std::string& method,
                         const std::string& format, const json& header, std::optional<double> integral) {
  if (format == "json") {
    json j = header;
    j["schema"] = kSchema;
    j["method"] = method;
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back({{"x", xs[i]}, {"value", vs[i]}});
    j["rows"] = rows;
    if (integral) j["integral"] = *integral;
    return j.dump(2) + "\n";
  }
  std::vector<subfox::cli::Row> rows;
  for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back({xs[i], vs[i], method});
  std::ostringstream os;
  subfox::cli::write_csv(os, rows);
  if (integral) os << "# integral," << subfox::cli::format_double(*integral) << '\n';
  return os.str();
}

subfox::DensityMethod parse_method(const std::string& m) {
  if (m == "auto") return subfox::DensityMethod::automatic;
  if (m == "hfun") return subfox::DensityMethod::hfun;
  if (m == "mwright") return subfox::DensityMethod::mwright;
  return subfox::DensityMethod::levy;
}

// ---------------------------------------------------------------------------

struct DensityCmd {
  std::string family;
  double beta = 0.5;
  double t = 1.0;
  double lambda = 0.0;
  std::string method = "auto";
  GridOptions grid;
  Output out;

  void add(CLI::App& app) {
    CLI::App* c = app.add_subcommand("density", "Tabulate a density on a grid");
    c->add_option("family", family, "stable, inverse or tempered")
        ->required()
        ->check(CLI::IsMember({"stable", "inverse", "tempered"}));
    c->add_option("--beta", beta, "Index in (0, 1)")->required();
    c->add_option("--t", t, "Time, > 0");
    c->add_option("--lambda", lambda, "Tempering rate, >= 0 (tempered only)");
    c->add_option("--method", method, "Evaluation route")->check(CLI::IsMember({"auto", "hfun", "mwright", "levy"}));
    grid.add(c);
    out.add(c);
    c->callback([this] { run(); });
  }

  void run() {
    std::vector<double> xs = grid.resolve();
    subfox::DensityMethod m = parse_method(method);
    std::function<double(double)> f;
    json header = {{"command", "density"}, {"family", family}, {"params", {{"beta", beta}, {"t", t}}}};
    if (family == "stable") {
      subfox::StableSpec s{beta, t};
      s.validate();
      f = [s, m](double x) { return subfox::stable::density(s, x, m); };
    } else if (family == "inverse") {
      subfox::InverseStableSpec s{beta, t};
      s.validate();
      f = [s, m](double x) { return subfox::inverse_stable::density(s, x, m); };
    } else {
      if (m != subfox::DensityMethod::automatic) throw UsageError("the tempered family only supports --method auto");
      subfox::TemperedSpec s{beta, lambda, t};
      s.validate();
      header["params"]["lambda"] = lambda;
      f = [s](double x) { return subfox::tempered::density(s, x); };
    }
    std::vector<double> vs = tabulate(xs, f);
    out.emit(render_table(xs, vs, method, out.format, header, std::nullopt));
  }
};

struct TransformCmd {
  std::string family;
  std::string which;
  double beta = 0.5;
  double t = 1.0;
  double lambda = 0.0;
  std::optional<double> x;
  double s = 0.0;
  double s_im = 0.0;
  Output out;

  void add(CLI::App& app) {
    CLI::App* c = app.add_subcommand("transform", "Evaluate a Mellin or Laplace transform");
    c->add_option("family", family)->required()->check(CLI::IsMember({"stable", "inverse", "tempered"}));
    c->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"mellin-x", "laplace-x", "mellin-t", "laplace-t"}));
    c->add_option("--beta", beta, "Index in (0, 1)")->required();
    c->add_option("--t", t, "Time (space transforms)");
    c->add_option("--lambda", lambda, "Tempering rate (tempered only)");
    c->add_option("--x", x, "Space point (time transforms)");
    c->add_option("--s", s, "Transform variable (real part)")->required();
    c->add_option("--s-im", s_im, "Imaginary part of s (Mellin transforms)");
    out.add(c);
    c->callback([this] { run(); });
  }

  double need_x() const {
    if (!x) throw UsageError(which + " needs --x");
    return *x;
  }

  void run() {
    bool mellin = which.rfind("mellin", 0) == 0;
    if (!mellin && s_im != 0.0) throw UsageError("--s-im applies to Mellin transforms only");
    const subfox::Complex sc(s, s_im);
    subfox::Complex v;
    if (family == "stable") {
      subfox::StableSpec sp{beta, t};
      if (which == "mellin-x") v = subfox::stable::mellin_x(sp, sc);
      if (which == "laplace-x") v = subfox::stable::laplace_x(sp, s);
      if (which == "mellin-t") v = subfox::stable::mellin_t(beta, need_x(), sc);
      if (which == "laplace-t") v = subfox::stable::laplace_t(beta, need_x(), s);
    } else if (family == "inverse") {
      subfox::InverseStableSpec sp{beta, t};
      if (which == "mellin-x") v = subfox::inverse_stable::mellin_x(sp, sc);
      if (which == "laplace-x") v = subfox::inverse_stable::laplace_x(sp, s);
      if (which == "mellin-t") v = subfox::inverse_stable::mellin_t(beta, need_x(), sc);
      if (which == "laplace-t") v = subfox::inverse_stable::laplace_t(beta, need_x(), s);
    } else {
      subfox::TemperedSpec sp{beta, lambda, t};
      if (which == "mellin-x") v = subfox::tempered::mellin_x(sp, sc);
      if (which == "laplace-x") v = subfox::tempered::laplace_x(sp, s);
      if (which == "mellin-t") throw UsageError("mellin-t is not available for the tempered family");
      if (which == "laplace-t") v = subfox::tempered::laplace_t(beta, lambda, need_x(), s);
    }
    using subfox::cli::format_double;
    if (out.format == "json") {
      json j = {{"schema", kSchema}, {"command", "transform"}, {"family", family}, {"transform", which},
                {"params", {{"beta", beta}, {"t", t}}}, {"s", {s, s_im}}, {"value", {v.real(), v.imag()}}};
      if (family == "tempered") j["params"]["lambda"] = lambda;
      if (x) j["params"]["x"] = *x;
      out.emit(j.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    if (s_im == 0.0) {
      os << "s,value\n" << format_double(s) << ',' << format_double(v.real()) << '\n';
    } else {
      os << "s_re,s_im,value_re,value_im\n"
         << format_double(s) << ',' << format_double(s_im) << ',' << format_double(v.real()) << ','
         << format_double(v.imag()) << '\n';
    }
    out.emit(os.str());
  }
};

struct AlgebraCmd {
  std::string op;
  std::string kind = "stable";
  std::vector<double> betas;
  double t = 1.0;
  double a = 1.0;
  double r = 1.0;
  GridOptions grid;
  Output out;

  void add(CLI::App& app) {
    CLI::App* c = app.add_subcommand("algebra", "Density of a scaled, product, power or quotient variate");
    c->add_option("op", op)->required()->check(CLI::IsMember({"scale", "product", "power", "quotient"}));
    c->add_option("--kind", kind, "Family of every factor")->check(CLI::IsMember({"stable", "inverse"}));
    c->add_option("--beta", betas, "Factor indices, comma separated")->required()->delimiter(',');
    c->add_option("--t", t, "Common time");
    c->add_option("--a", a, "Scale factor (scale)");
    c->add_option("--r", r, "Exponent (power)");
    grid.add(c);
    out.add(c);
    c->callback([this] { run(); });
  }

  void run() {
    using subfox::FamilyRef;
    const subfox::Kind k = kind == "stable" ? subfox::Kind::stable : subfox::Kind::inverse;
    std::vector<FamilyRef> fs;
    for (double b : betas) fs.push_back({k, b, t});
    auto want = [&](std::size_t n) {
      if (fs.size() != n) throw UsageError(op + " takes exactly " + std::to_string(n) + " --beta value(s)");
    };
    subfox::ComposedDensity d;
    json header = {{"command", "algebra"}, {"op", op}, {"kind", kind}, {"params", {{"beta", betas}, {"t", t}}}};
    if (op == "scale") {
      want(1);
      d = subfox::scalar_multiple(fs[0], a);
      header["params"]["a"] = a;
    } else if (op == "product") {
      if (fs.size() < 2) throw UsageError("product takes at least two --beta values");
      d = subfox::product(fs);
    } else if (op == "power") {
      want(1);
      d = subfox::rational_power(fs[0], r);
      header["params"]["r"] = r;
    } else {
      want(2);
      d = subfox::quotient(fs[0], fs[1]);
    }
    std::vector<double> xs = grid.resolve();
    for (double x : xs) {
      if (!(x > 0.0)) throw UsageError("composed densities are evaluated at x > 0");
    }
    std::vector<double> vs = tabulate(xs, [&d](double x) { return d(x); });
    double mass = subfox::integrate_positive([&d](double x) { return d(x); }, subfox::QuadratureSpec{1e-9}).value;
    out.emit(render_table(xs, vs, "hfun", out.format, header, mass));
  }
};

struct VerifyCmd {
  std::string suite = "all";
  std::string profile = "standard";
  double perturb = 0.0;
  Output out;
  int status = kOk;

  void add(CLI::App& app) {
    CLI::App* c = app.add_subcommand("verify", "Run oracle checks; exit 1 if any fails");
    std::vector<std::string> names = subfox::verify_suites();
    names.push_back("all");
    c->add_option("suite", suite, "Suite name or all")->check(CLI::IsMember(names));
    c->add_option("--tol-profile", profile, "standard or strict (halved tolerances)")
        ->check(CLI::IsMember({"standard", "strict"}));
    c->add_option("--perturb", perturb, "Relative perturbation applied to computed values");
    out.add(c, {"text", "json"});
    out.format = "text";
    c->callback([this] { run(); });
  }

  void run() {
    subfox::VerifyOptions opt;
    opt.profile = profile == "strict" ? subfox::TolProfile::strict : subfox::TolProfile::standard;
    opt.perturb = perturb;
    std::vector<subfox::OracleReport> reports = subfox::run_verify_suite(suite, opt);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    status = failed == 0 ? kOk : kVerifyFailed;
    if (out.format == "json") {
      json cases = json::array();
      for (const auto& r : reports) {
        cases.push_back({{"case", r.case_id}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"abs_err", r.abs_err},
                         {"rel_err", r.rel_err}, {"tolerance", r.tolerance}, {"pass", r.pass}});
      }
      json j = {{"schema", kSchema}, {"command", "verify"}, {"suite", suite}, {"profile", profile},
                {"perturb", perturb}, {"cases", cases}, {"passed", reports.size() - failed}, {"failed", failed}};
      out.emit(j.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    os.precision(6);
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.case_id << "  lhs=" << subfox::cli::format_double(r.lhs)
         << " rhs=" << subfox::cli::format_double(r.rhs) << " rel_err=" << r.rel_err << " tol=" << r.tolerance
         << '\n';
    }
    os << reports.size() - failed << "/" << reports.size() << " passed\n";
    out.emit(os.str());
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subfox: densities and transforms of stable-type subordinators via the Fox H-function"};
  app.require_subcommand(1);
  DensityCmd density;
  TransformCmd transform;
  AlgebraCmd algebra;
  VerifyCmd verify;
  density.add(app);
  transform.add(app);
  algebra.add(app);
  verify.add(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const subfox::StripError& e) {
    std::cerr << "subfox: " << e.what() << " (valid strip: " << e.lo() << " < Re s < " << e.hi() << ")\n";
    return kUsage;
  } catch (const subfox::Error& e) {
    std::cerr << "subfox: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "subfox: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "subfox: " << e.what() << '\n';
    return kUsage;
  }
  return verify.status;
}
