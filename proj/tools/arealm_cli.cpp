// Command-line front end: every computation as a batch-friendly subcommand
// with CSV (default) or JSON-lines output.
//
//   arealm mahler --family xyk --k 1 --areal
//   arealm zeros --k 1 --im 5:50
//   arealm verify --suite thm11 --grid 50
//   arealm plotdata --k 1 --re -5:1 --im 0:30 --nre 60 --nim 60

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arealm/densities.hpp"
#include "arealm/mahler.hpp"
#include "arealm/walks.hpp"
#include "arealm/zetamahler.hpp"
#include "verify_suites.hpp"

namespace {

using Complex = std::complex<double>;
using arealm::densities::FamilyParamK;

struct OutputRecord {
  std::string quantity;
  std::optional<double> k;
  std::optional<Complex> s;
  Complex value = 0.0;
  bool value_is_real = true;
  double err = 0.0;
  std::string method;
  double wall_time_ms = 0.0;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_records(const std::vector<OutputRecord>& records,
                   const std::string& format, std::ostream& os) {
  if (format == "json") {
    for (const auto& r : records) {
      nlohmann::json j;
      j["quantity"] = r.quantity;
      if (r.k) j["k"] = *r.k;
      if (r.s) j["s"] = {{"re", r.s->real()}, {"im", r.s->imag()}};
      if (r.value_is_real) {
        j["value"] = r.value.real();
      } else {
        j["value"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
      }
      j["err"] = r.err;
      j["method"] = r.method;
      j["wall_time_ms"] = r.wall_time_ms;
      os << j.dump() << "\n";
    }
    return;
  }
  os << "quantity,k,s_re,s_im,value_re,value_im,err,method,wall_time_ms\n";
  for (const auto& r : records) {
    os << r.quantity << ",";
    if (r.k) os << fmt17(*r.k);
    os << ",";
    if (r.s) os << fmt17(r.s->real());
    os << ",";
    if (r.s) os << fmt17(r.s->imag());
    os << "," << fmt17(r.value.real()) << "," << fmt17(r.value.imag()) << ","
       << fmt17(r.err) << "," << r.method << "," << fmt17(r.wall_time_ms)
       << "\n";
  }
}

int emit(const std::vector<OutputRecord>& records, const std::string& format,
         const std::string& out_path) {
  if (out_path.empty()) {
    write_records(records, format, std::cout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file " << out_path << "\n";
      return 1;
    }
    write_records(records, format, f);
  }
  return 0;
}

struct Range {
  double lo = 0.0, hi = 0.0;
};

Range parse_range(const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos) {
    throw CLI::ValidationError("range", "expected lo:hi, got " + text);
  }
  Range r;
  r.lo = std::stod(text.substr(0, pos));
  r.hi = std::stod(text.substr(pos + 1));
  return r;
}

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

int cmd_mahler(const std::string& family, double k_in, bool areal,
               const std::string& route, bool all_routes, double tol,
               const std::string& format, const std::string& out,
               bool timings) {
  (void)tol;
  // Measures depend on k only through |k|.
  const FamilyParamK k(std::abs(k_in));
  std::vector<OutputRecord> records;

  auto push = [&](const std::string& quantity, arealm::mahler::MeasureValue mv,
                  double wall) {
    OutputRecord r;
    r.quantity = quantity;
    r.k = k.k;
    r.value = mv.value;
    r.err = 1e-11;
    r.method = arealm::mahler::method_name(mv.method);
    r.wall_time_ms = timings ? wall : 0.0;
    records.push_back(r);
  };

  using namespace arealm::mahler;
  if (family == "xyk") {
    if (areal) {
      std::vector<MdXykRoute> routes;
      if (all_routes) {
        routes = {MdXykRoute::hyp3f2, MdXykRoute::difference, MdXykRoute::dilog};
      } else if (route == "difference") {
        routes = {MdXykRoute::difference};
      } else if (route == "dilog") {
        routes = {MdXykRoute::dilog};
      } else {
        routes = {MdXykRoute::hyp3f2};
      }
      for (auto rt : routes) {
        Stopwatch sw;
        auto mv = md_xyk(k, rt);
        push("mD(x+y+k)", mv, sw.ms());
      }
    } else {
      std::vector<XykRoute> routes;
      if (all_routes) {
        routes = {XykRoute::cm, XykRoute::hyp};
      } else if (route == "hyp") {
        routes = {XykRoute::hyp};
      } else {
        routes = {XykRoute::cm};
      }
      for (auto rt : routes) {
        Stopwatch sw;
        auto mv = m_xyk(k, rt);
        push("m(x+y+k)", mv, sw.ms());
      }
    }
  } else if (family == "qk") {
    if (areal) {
      std::vector<MdQkRoute> routes;
      if (all_routes) {
        routes = {MdQkRoute::thm12, MdQkRoute::density};
      } else if (route == "density") {
        routes = {MdQkRoute::density};
      } else {
        routes = {MdQkRoute::thm12};
      }
      for (auto rt : routes) {
        Stopwatch sw;
        auto mv = md_qk(k, rt);
        push("mD((x+1)(y+1)+kz)", mv, sw.ms());
      }
    } else {
      Stopwatch sw;
      auto mv = m_qk(k);
      push("m((x+1)(y+1)+kz)", mv, sw.ms());
    }
  } else {
    std::cerr << "error: unknown family " << family << "\n";
    return 2;
  }
  return emit(records, format, out);
}

int cmd_zeros(double k_in, const std::string& re_range,
              const std::string& im_range, int grid_density,
              bool check_winding, const std::string& format,
              const std::string& out, bool timings) {
  const FamilyParamK k(std::abs(k_in));
  arealm::zetamahler::ZeroBox box{};
  const Range rr = parse_range(re_range);
  const Range ri = parse_range(im_range);
  box.re_min = rr.lo;
  box.re_max = rr.hi;
  box.im_min = ri.lo;
  box.im_max = ri.hi;
  box.grid_density = grid_density;

  Stopwatch sw;
  const auto zeros = arealm::zetamahler::find_zeros(box, k);
  const double wall = sw.ms();

  std::vector<OutputRecord> records;
  for (const auto& z : zeros) {
    OutputRecord r;
    r.quantity = "zero(Z_D(s,x+y+k))";
    r.k = k.k;
    r.s = z.location;
    r.value = z.location;
    r.value_is_real = false;
    r.err = z.residual;
    r.method = "grid-newton";
    r.wall_time_ms = timings ? wall : 0.0;
    records.push_back(r);
  }
  if (check_winding) {
    OutputRecord r;
    r.quantity = "winding-count";
    r.k = k.k;
    r.value = static_cast<double>(arealm::zetamahler::winding_count(box, k));
    r.err = 0.0;
    r.method = "argument-principle";
    r.wall_time_ms = 0.0;
    records.push_back(r);
  }
  return emit(records, format, out);
}

int cmd_verify(const std::string& suite, int grid, const std::string& k_list,
               double samples, std::uint64_t seed) {
  arealm::cli::SuiteOptions opt;
  opt.grid = grid;
  opt.samples = static_cast<long long>(samples);
  opt.seed = seed;
  if (!k_list.empty()) {
    opt.ks.clear();
    std::stringstream ss(k_list);
    std::string item;
    while (std::getline(ss, item, ',')) opt.ks.push_back(std::stod(item));
  }
  const auto results = arealm::cli::run_suite(suite, opt);
  std::printf("%-44s %14s %12s  %s\n", "check", "residual", "tolerance", "status");
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("%-44s %14.3e %12.1e  %s\n", r.name.c_str(), r.residual,
                r.tolerance, r.pass ? "pass" : "FAIL");
    all_pass = all_pass && r.pass;
  }
  std::printf("%zu checks, %s\n", results.size(), all_pass ? "all passed" : "FAILURES");
  return all_pass ? 0 : 1;
}

int cmd_plotdata(double k_in, const std::string& re_range,
                 const std::string& im_range, int nre, int nim,
                 const std::string& out) {
  const FamilyParamK k(std::abs(k_in));
  const Range rr = parse_range(re_range);
  const Range ri = parse_range(im_range);
  std::ostringstream body;
  body << "re_s,im_s,re_Z,im_Z\n";
  for (int j = 0; j < nim; ++j) {
    const double im = nim == 1 ? ri.lo : ri.lo + (ri.hi - ri.lo) * j / (nim - 1);
    for (int i = 0; i < nre; ++i) {
      const double re = nre == 1 ? rr.lo : rr.lo + (rr.hi - rr.lo) * i / (nre - 1);
      const Complex z = arealm::zetamahler::zd_xyk(Complex(re, im), k);
      body << fmt17(re) << "," << fmt17(im) << "," << fmt17(z.real()) << ","
           << fmt17(z.imag()) << "\n";
    }
  }
  if (out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file " << out << "\n";
      return 1;
    }
    f << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahler measures, areal Mahler measures and Zeta Mahler "
               "functions of x+y+k and (x+1)(y+1)+kz"};
  app.require_subcommand(1);

  std::string format = "csv", out_path, route, family;
  double k = 1.0, tol = 1e-11;
  bool areal = false, all_routes = false, timings = false;

  auto* mah = app.add_subcommand("mahler", "Mahler measure of a family member");
  mah->add_option("--family", family, "xyk | qk")->required();
  mah->add_option("--k", k, "family parameter (|k| is used)")->required();
  mah->add_flag("--areal", areal, "areal (bidisk) measure instead of toral");
  mah->add_option("--route", route, "evaluation route");
  mah->add_flag("--all-routes", all_routes, "one record per route");
  mah->add_option("--tol", tol, "target tolerance");
  mah->add_option("--format", format, "csv | json");
  mah->add_option("--out", out_path, "output file (default stdout)");
  mah->add_flag("--timings", timings, "record wall times (breaks byte determinism)");

  std::string re_range = "-4:-3", im_range;
  int grid_density = 12, nre = 32, nim = 32;
  bool check_winding = false;
  auto* zer = app.add_subcommand("zeros", "zeros of Z_D(s, x+y+k) in a box");
  zer->add_option("--k", k, "family parameter")->required();
  zer->add_option("--re", re_range, "real range lo:hi (default -4:-3)");
  zer->add_option("--im", im_range, "imaginary range lo:hi")->required();
  zer->add_option("--grid-density", grid_density, "grid points per unit");
  zer->add_flag("--check-winding", check_winding, "emit the winding count record");
  zer->add_option("--format", format, "csv | json");
  zer->add_option("--out", out_path, "output file");
  zer->add_flag("--timings", timings, "record wall times");

  std::string suite, k_list;
  int grid = 50;
  double samples = 1e6;
  std::uint64_t seed = 42;
  auto* ver = app.add_subcommand("verify", "run a named invariant suite");
  ver->add_option("--suite", suite, "suite name or 'all'")->required();
  ver->add_option("--grid", grid, "grid size for grid-based suites");
  ver->add_option("--k", k_list, "comma-separated k values");
  ver->add_option("--samples", samples, "Monte Carlo samples");
  ver->add_option("--seed", seed, "Monte Carlo seed");

  auto* plt = app.add_subcommand("plotdata", "CSV grid of Z_D over a box");
  plt->add_option("--k", k, "family parameter")->required();
  plt->add_option("--re", re_range, "real range lo:hi")->required();
  plt->add_option("--im", im_range, "imaginary range lo:hi")->required();
  plt->add_option("--nre", nre, "grid columns");
  plt->add_option("--nim", nim, "grid rows");
  plt->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mah->parsed()) {
      return cmd_mahler(family, k, areal, route, all_routes, tol, format,
                        out_path, timings);
    }
    if (zer->parsed()) {
      return cmd_zeros(k, re_range, im_range, grid_density, check_winding,
                       format, out_path, timings);
    }
    if (ver->parsed()) {
      return cmd_verify(suite, grid, k_list, samples, seed);
    }
    if (plt->parsed()) {
      return cmd_plotdata(k, re_range, im_range, nre, nim, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
