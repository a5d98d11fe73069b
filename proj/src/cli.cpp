#include "newtoncycles/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "newtoncycles/errors.hpp"
#include "newtoncycles/family.hpp"
#include "newtoncycles/json_io.hpp"
#include "newtoncycles/render.hpp"
#include "newtoncycles/sharpness.hpp"
#include "newtoncycles/synthesis.hpp"
#include "newtoncycles/verify.hpp"

namespace newtoncycles::cli {

namespace {

using json_io::Json;

struct Flags {
  std::string cycle;
  std::string poly;
  std::string h = "1,0";
  std::optional<int> degree;
  int d = 0;
  int n = 0;
  int k = 0;
  std::string coeff_scale = "1,0";
  bool allow_large = false;
  std::string center;
  std::string size;
  std::string pixels;
  std::string out;
  int max_iter = 200;
  double attract_tol = 1e-6;
  std::string cycle_color = "128,0,128";
  std::string unresolved_color = "0,0,0";
  std::vector<std::string> root_colors;
};

// "AxB" with positive components.
template <typename T>
std::pair<T, T> parse_extent(const std::string& text, const char* what) {
  const auto x = text.find('x');
  if (x == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must look like <w>x<h>, got '" + text + "'");
  }
  std::istringstream a(text.substr(0, x));
  std::istringstream b(text.substr(x + 1));
  T w{};
  T h{};
  if (!(a >> w) || !(b >> h) || !a.eof() || !b.eof() || !(w > T{}) || !(h > T{})) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must look like <w>x<h>, got '" + text + "'");
  }
  return {w, h};
}

Rgb parse_rgb(const std::string& text) {
  std::istringstream in(text);
  int c[3];
  char sep1 = 0;
  char sep2 = 0;
  if (!(in >> c[0] >> sep1 >> c[1] >> sep2 >> c[2]) || sep1 != ',' || sep2 != ',' || !in.eof()) {
    throw Error(ErrorKind::InvalidArgument, "color must look like r,g,b; got '" + text + "'");
  }
  for (int v : c) {
    if (v < 0 || v > 255) throw Error(ErrorKind::InvalidArgument, "color component out of range in '" + text + "'");
  }
  return {static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]), static_cast<std::uint8_t>(c[2])};
}

Relaxation parse_relaxation(const std::string& text, std::ostream& err) {
  const Relaxation h(json_io::parse_complex_pair(text));
  if (!h.in_unit_disk()) {
    err << "warning: |h-1| >= 1; roots may repel and the construction is outside its guaranteed range\n";
  }
  return h;
}

void require_super_attracting(const CycleReport& report) {
  if (!report.super_attracting) {
    throw Error(ErrorKind::NotACycle, "verification of the cycle failed");
  }
}

int cmd_synth(const Flags& f, std::ostream& out, std::ostream& err) {
  const Relaxation h = parse_relaxation(f.h, err);
  const Cycle omega(json_io::parse_complex_list(f.cycle));
  const Polynomial p = synthesize(omega, h, f.degree);
  const CycleReport report = check_cycle(p, h, omega.points());

  Json j;
  j["cycle"] = json_io::to_json(std::vector<Complex>(omega.points().begin(), omega.points().end()));
  j["h"] = json_io::to_json(h.value());
  j["degree"] = p.degree();
  j["polynomial"] = json_io::to_json(p);
  j["report"] = json_io::to_json(report);
  out << json_io::dump(j) << "\n";
  require_super_attracting(report);
  return kExitOk;
}

int cmd_family(const Flags& f, std::ostream& out, std::ostream& err) {
  const Complex a = json_io::parse_complex_pair(f.coeff_scale);
  if (a == Complex{0.0}) throw Error(ErrorKind::InvalidArgument, "--coeff-scale must be nonzero");
  const FamilyCycle fc = build_cycle(f.d, f.n);
  const Polynomial p = family_polynomial(f.d, fc.params.c(), a);
  const auto points = fc.cycle.as_complex();
  const CycleReport report = check_cycle(p, Relaxation{}, points);
  (void)err;

  Json j;
  j["d"] = f.d;
  j["n"] = f.n;
  j["c"] = fc.params.c();
  j["cycle"] = json_io::to_json(points);
  j["polynomial"] = json_io::to_json(p);
  j["report"] = json_io::to_json(report);
  out << json_io::dump(j) << "\n";
  require_super_attracting(report);
  return kExitOk;
}

int cmd_brackets(const Flags& f, std::ostream& out) {
  out << json_io::dump(json_io::to_json(find_brackets(f.d, f.k))) << "\n";
  return kExitOk;
}

int cmd_sharp(const Flags& f, std::ostream& out, std::ostream& err) {
  SharpnessOptions opts;
  opts.allow_large = f.allow_large;
  if (f.n > kMaxCertifiedCycleLength && f.allow_large) {
    err << "warning: n above " << kMaxCertifiedCycleLength << "; Vandermonde conditioning degrades\n";
  }
  const SharpnessCertificate cert = min_degree_certificate(f.n, opts);
  out << json_io::dump(json_io::to_json(cert)) << "\n";
  if (!cert.cycle_verified) throw Error(ErrorKind::NotACycle, "certificate polynomial failed verification");
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out, std::ostream& err) {
  const Relaxation h = parse_relaxation(f.h, err);
  const Polynomial p = json_io::parse_polynomial(f.poly);
  const auto points = json_io::parse_complex_list(f.cycle);
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "--poly must be nonconstant");
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "--cycle must be nonempty");
  const CycleReport report = check_cycle(p, h, points);
  out << json_io::dump(json_io::to_json(report)) << "\n";
  require_super_attracting(report);
  return kExitOk;
}

int cmd_render(const Flags& f, std::ostream& out, std::ostream& err) {
  const Relaxation h = parse_relaxation(f.h, err);
  const Polynomial p = json_io::parse_polynomial(f.poly);
  const auto cycle = json_io::parse_complex_list(f.cycle);
  const auto [w, hgt] = parse_extent<double>(f.size, "--size");
  const auto [pw, ph] = parse_extent<int>(f.pixels, "--pixels");
  const Window window{json_io::parse_complex_pair(f.center), w, hgt};

  RenderSpec spec = make_render_spec(p, cycle, window, pw, ph, h);
  spec.max_iter = f.max_iter;
  spec.attract_tol = f.attract_tol;
  const int cycle_label = cycle.empty() ? -1 : static_cast<int>(spec.attractors.size()) - 1;
  const std::size_t root_count = spec.attractors.size() - (cycle.empty() ? 0 : 1);

  Palette palette = default_palette(root_count, cycle_label);
  for (std::size_t i = 0; i < f.root_colors.size() && i < root_count; ++i) {
    palette.labels[i] = parse_rgb(f.root_colors[i]);
  }
  if (cycle_label >= 0) palette.labels[static_cast<std::size_t>(cycle_label)] = parse_rgb(f.cycle_color);
  palette.unresolved = parse_rgb(f.unresolved_color);

  const BasinImage img = render_basins(spec);
  write_ppm(img, palette, f.out);

  Json j;
  j["out"] = f.out;
  j["width"] = img.width;
  j["height"] = img.height;
  j["resolved_fraction"] = img.resolved_fraction();
  Json attractors = Json::array();
  for (std::size_t a = 0; a < spec.attractors.size(); ++a) {
    Json row;
    row["name"] = spec.attractors[a].name;
    row["points"] = json_io::to_json(spec.attractors[a].points);
    row["pixels"] = std::count(img.labels.begin(), img.labels.end(), static_cast<int>(a));
    attractors.push_back(row);
  }
  j["attractors"] = attractors;
  out << json_io::dump(j) << "\n";
  return kExitOk;
}

void fail(std::ostream& err, std::string_view kind, const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << "error: " << kind << ": " << line << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton maps with prescribed super-attracting cycles", "newtoncycles"};
  app.require_subcommand(1);
  // --h is the relaxation parameter, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");
  Flags f;

  auto* synth = app.add_subcommand("synth", "polynomial whose (relaxed) Newton map has the given super-attracting cycle");
  synth->add_option("--cycle", f.cycle, "cycle as JSON [[re,im],...]")->required();
  synth->add_option("--h", f.h, "relaxation re,im");
  synth->add_option("--degree", f.degree, "polynomial degree (default n+1)");

  auto* family = app.add_subcommand("family", "real degree-d polynomial with a real super-attracting n-cycle");
  family->add_option("--d", f.d, "degree >= 3")->required();
  family->add_option("--n", f.n, "cycle length >= 3")->required();
  family->add_option("--coeff-scale", f.coeff_scale, "overall scale a as re,im");

  auto* brackets = app.add_subcommand("brackets", "interleaved minimal roots c_k, b_k");
  brackets->add_option("--d", f.d, "degree >= 3")->required();
  brackets->add_option("--k", f.k, "table length >= 1")->required();

  auto* sharp = app.add_subcommand("sharp", "minimal-degree certificate for the roots-of-unity cycle");
  sharp->add_option("--n", f.n, "cycle length >= 2")->required();
  sharp->add_flag("--allow-large", f.allow_large, "permit n above 12");

  auto* verify = app.add_subcommand("verify", "check a claimed super-attracting cycle");
  verify->add_option("--poly", f.poly, "coefficients as JSON [[re,im],...], ascending")->required();
  verify->add_option("--cycle", f.cycle, "cycle as JSON [[re,im],...]")->required();
  verify->add_option("--h", f.h, "relaxation re,im");

  auto* render = app.add_subcommand("render", "basin-of-attraction image as binary PPM");
  render->add_option("--poly", f.poly, "coefficients as JSON")->required();
  render->add_option("--cycle", f.cycle, "cycle as JSON")->required();
  render->add_option("--center", f.center, "window center re,im")->required();
  render->add_option("--size", f.size, "window extent <w>x<h> in plane units")->required();
  render->add_option("--pixels", f.pixels, "image size <W>x<H>")->required();
  render->add_option("--out", f.out, "output path")->required();
  render->add_option("--h", f.h, "relaxation re,im");
  render->add_option("--max-iter", f.max_iter, "iteration cap");
  render->add_option("--attract-tol", f.attract_tol, "capture radius");
  render->add_option("--cycle-color", f.cycle_color, "r,g,b");
  render->add_option("--unresolved-color", f.unresolved_color, "r,g,b");
  render->add_option("--root-color", f.root_colors, "r,g,b per root, in root order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fail(err, "UsageError", e.what());
    return kExitUsageError;
  }

  try {
    if (*synth) return cmd_synth(f, out, err);
    if (*family) return cmd_family(f, out, err);
    if (*brackets) return cmd_brackets(f, out);
    if (*sharp) return cmd_sharp(f, out, err);
    if (*verify) return cmd_verify(f, out, err);
    if (*render) return cmd_render(f, out, err);
  } catch (const Error& e) {
    fail(err, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsageError : kExitDomainError;
  } catch (const std::exception& e) {
    fail(err, "InternalError", e.what());
    return kExitDomainError;
  }
  fail(err, "UsageError", "no subcommand");
  return kExitUsageError;
}

}  // namespace newtoncycles::cli
