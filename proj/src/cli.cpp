#include "bidisk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "bidisk/agler.hpp"
#include "bidisk/errors.hpp"
#include "bidisk/extremality.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/polycore.hpp"
#include "bidisk/stability.hpp"

namespace bidisk::cli {

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

json to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(bidisk::to_json(cplx(m(r, c))));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Realization& r) {
  return {{"U", to_json(r.U)},
          {"N1", r.N1},
          {"N2", r.N2},
          {"symmetric", r.symmetric},
          {"unitary_defect", r.unitary_defect},
          {"symmetry_defect", r.symmetry_defect},
          {"isometry_residual", r.isometry_residual},
          {"span_rank", r.span_rank}};
}

namespace {

using bidisk::to_json;

struct Options {
  std::string input;
  std::string q_input;
  std::string output;
  bool exact = false;
  double tol = 0;
  int grid = 64;
  std::uint64_t seed = 12345;
};

struct Input {
  json raw;
  BiPoly<cplx> p;
  std::optional<BiPoly<GaussRat>> exact;
};

struct Outcome {
  json verdicts;
  int code = kPositive;
};

BiPoly<cplx> numeric(const BiPoly<GaussRat>& e) {
  std::vector<cplx> c;
  for (const auto& x : e.coeffs()) c.push_back(to_cplx(x));
  return BiPoly<cplx>(e.bidegree(), std::move(c));
}

json poly_part(const json& j) { return j.is_object() && j.contains("poly") ? j["poly"] : j; }

Input load(const std::string& path, bool exact) {
  if (path.empty()) throw InputError("--input is required");
  Input in;
  in.raw = poly_part(parse_json(read_file(path)));
  if (exact) {
    in.exact = poly_exact_from_json(in.raw);
    in.p = numeric(*in.exact);
  } else {
    in.p = poly_from_json(in.raw);
  }
  return in;
}

json pair_json(const std::pair<cplx, cplx>& z) { return json::array({to_json(z.first), to_json(z.second)}); }

json polys_json(const std::vector<BiPoly<cplx>>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(to_json(p));
  return a;
}

json interval_json(const Interval& iv) {
  return {{"lo", iv.lo}, {"hi", iv.hi}, {"lo_clipped", iv.lo_clipped}, {"hi_clipped", iv.hi_clipped}};
}

json decomposition_json(const Decomposition& d) {
  return {{"lambda", d.lambda},
          {"t_minus", d.t_minus},
          {"t_plus", d.t_plus},
          {"q_minus", to_json(d.q_minus)},
          {"q_plus", to_json(d.q_plus)}};
}

json saturation_json(const SaturationCertificate& c, Bidegree n) {
  json pts = json::array();
  for (const auto& pm : c.per_point) pts.push_back({{"point", pair_json(pm.point)}, {"multiplicity", pm.multiplicity}});
  return {{"saturated", c.saturated},
          {"degenerate", c.degenerate},
          {"count", c.count},
          {"required", c.required},
          {"per_point", pts},
          {"circle_roots", to_json(c.circle_roots)},
          {"kp_dimension", n.n1 * n.n2 - c.count / 2}};
}

json irreducible_json(const IrreducibilityResult& r) {
  return {{"verdict", to_string(r.verdict)}, {"nullity", r.nullity}, {"gap", r.gap}, {"reason", r.reason}};
}

int tri_code(Tri t) { return t == Tri::True ? kPositive : t == Tri::False ? kNegative : kUnknown; }

Outcome cmd_reflect(const Input& in) {
  json r = in.exact ? to_json(reflect(*in.exact)) : to_json(reflect(in.p));
  return {{{"reflection", r}}, kPositive};
}

Outcome cmd_stable(const Input& in, const Tolerances& tol) {
  StabilityReport rep = scattering_stable(in.p, tol);
  json cands = json::array();
  for (const auto& z : rep.boundary_zero_candidates) cands.push_back(pair_json(z));
  int code = kUnknown;
  if (rep.verdict == Verdict::StableClosed || rep.verdict == Verdict::ScatteringStable) code = kPositive;
  if (rep.verdict == Verdict::Unstable || rep.verdict == Verdict::Degenerate) code = kNegative;
  return {{{"verdict", to_string(rep.verdict)},
           {"min_eig_margin", rep.min_eig_margin},
           {"certified", rep.certified},
           {"sweep_density", rep.sweep_density},
           {"boundary_zero_candidates", cands},
           {"detail", rep.detail}},
          code};
}

SaturationCertificate saturation(const Input& in, const Tolerances& tol) {
  SaturationCertificate c = in.exact ? is_saturated(*in.exact, tol) : is_saturated(in.p, tol);
  if (c.degenerate) throw DomainError("p shares a factor with its reflection; saturation is undefined");
  return c;
}

Outcome cmd_saturated(const Input& in, const Tolerances& tol) {
  SaturationCertificate c = saturation(in, tol);
  return {saturation_json(c, in.p.bidegree()), c.saturated ? kPositive : kNegative};
}

Outcome cmd_extreme(const Input& in, const Tolerances& tol) {
  ExtremalityCertificate c = certify_extreme(in.p, tol);
  if (in.exact) {
    c.saturation = saturation(in, tol);
    c.irreducible = irreducible(*in.exact - reflect(*in.exact), tol);
    bool certified = c.saturation.saturated && c.irreducible.verdict == Tri::True;
    if (certified) {
      c.verdict = Extremality::Extreme;
    } else if (c.verdict == Extremality::Extreme) {
      c.verdict = Extremality::Unknown;
      c.detail = "exact saturation or irreducibility disagrees with the numeric certificate";
    }
  }
  json v = {{"verdict", to_string(c.verdict)},
            {"saturation", saturation_json(c.saturation, in.p.bidegree())},
            {"irreducible", irreducible_json(c.irreducible)},
            {"detail", c.detail}};
  if (c.witness_v) v["witness_v"] = to_json(*c.witness_v);
  if (c.witness_interval) v["witness_interval"] = interval_json(*c.witness_interval);
  if (c.decomposition) v["decomposition"] = decomposition_json(*c.decomposition);
  int code = c.verdict == Extremality::Extreme ? kPositive : c.verdict == Extremality::NotExtreme ? kNegative : kUnknown;
  return {v, code};
}

Outcome cmd_face(const Input& in, const Tolerances& tol) {
  FaceProbeResult r = face_probe(in.p, tol.probe_samples, tol);
  json dirs = json::array();
  for (const auto& d : r.directions)
    dirs.push_back({{"v", to_json(d.v)}, {"coords", d.coords}, {"interval", interval_json(d.interval)}});
  return {{{"directions", dirs}, {"feasible_dimension", r.feasible_dimension}, {"rank", r.rank}},
          r.rank > 0 ? kPositive : kNegative};
}

Outcome cmd_agler(const Input& in, const Tolerances& tol, int grid) {
  AglerPair pair = agler_pair(in.p, tol);
  const double scale = in.p.norm1() * in.p.norm1();
  const double res = sos_residual(in.p, pair, grid);
  json v = {{"A1", polys_json(pair.A1)}, {"A2", polys_json(pair.A2)}, {"residual", res},
            {"relative_residual", res / scale}, {"symmetric", pair.symmetric}};
  if (auto s = symmetrize(pair, in.p, tol)) {
    v["symmetric_pair"] = {{"A1", polys_json(s->A1)}, {"A2", polys_json(s->A2)}, {"residual", sos_residual(in.p, *s, grid)}};
  }
  return {v, res <= 1e-8 * scale ? kPositive : kUnknown};
}

Outcome cmd_realize(const Input& in, const Tolerances& tol) {
  Realization R = realize(in.p, tol);
  const BiPoly<cplx> pt = reflect(in.p);
  std::mt19937_64 rng(tol.seed);
  std::uniform_real_distribution<double> u(0, 1);
  double transfer = 0;
  for (int k = 0; k < 100; ++k) {
    cplx z = std::polar(0.98 * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    cplx w = std::polar(0.98 * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    transfer = std::max(transfer, std::abs(transfer_eval(R, z, w) - eval(pt, z, w) / eval(in.p, z, w)));
  }
  const double det = detrep_verify(R, in.p);
  double va_unitary = 0, va_det = 0;
  for (int k = 0; k < 16; ++k) {
    cplx alpha = std::polar(1.0, 2 * std::numbers::pi * (k + 0.5) / 16);
    ValphaCheck c = valpha_check(R, in.p, alpha);
    va_unitary = std::max(va_unitary, c.unitary_defect);
    va_det = std::max(va_det, c.det_residual);
  }
  bool ok = R.unitary_defect < 1e-10 && transfer < tol.realization_tol && det < tol.realization_tol &&
            va_unitary < 1e-9 && va_det < tol.realization_tol;
  return {{{"realization", cli::to_json(R)},
           {"transfer_error", transfer},
           {"detrep_error", det},
           {"valpha_unitary_defect", va_unitary},
           {"valpha_det_residual", va_det},
           {"checks_passed", ok}},
          ok ? kPositive : kUnknown};
}

Outcome cmd_l2(const Input& in, const Input& q, const Tolerances& tol) {
  L2Report r = l2_report(q.p, in.p, tol);
  return {{{"member", to_string(r.member)}, {"level_sup", r.level_sup}, {"base_sup", r.base_sup}}, tri_code(r.member)};
}

Outcome cmd_classify11(const Input& in, const Tolerances& tol) {
  if (in.p.n1() != 1 || in.p.n2() != 1) throw DegreeError("classify11 needs bidegree (1,1)");
  Classification11 c = classify_11(in.p, tol);
  json v = {{"extreme", c.extreme},         {"saturated", c.saturated},
            {"reducible", c.reducible},     {"mu", to_json(c.mu)},
            {"a", c.a},                     {"b", c.b},
            {"mu_effective", to_json(c.mu_effective)}, {"mobius_split", c.mobius_split},
            {"nu", to_json(c.nu)}};
  if (c.decomposition) v["decomposition"] = decomposition_json(*c.decomposition);
  return {v, c.extreme ? kPositive : kNegative};
}

Outcome cmd_corpus(const std::string& dir_opt, const Tolerances& tol, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir = dir_opt.empty() ? fs::path(BIDISK_CORPUS_DIR) : fs::path(dir_opt);
  if (!fs::is_directory(dir)) throw InputError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  json rows = json::array();
  bool all = true;
  out << std::left << std::setw(28) << "name" << std::setw(20) << "stable" << std::setw(16) << "saturated"
      << std::setw(14) << "extreme" << std::setw(6) << "kp" << "result\n";
  for (const auto& f : files) {
    json doc = parse_json(read_file(f.string()));
    if (!doc.is_object() || !doc.contains("expect")) continue;
    const json& ex = doc["expect"];
    Input in;
    in.raw = doc["poly"];
    try {
      in.exact = poly_exact_from_json(in.raw);
      in.p = numeric(*in.exact);
    } catch (const InputError&) {
      in.p = poly_from_json(in.raw);
    }
    Outcome st = cmd_stable(in, tol);
    Outcome sat = cmd_saturated(in, tol);
    Outcome xt = cmd_extreme(in, tol);
    const int kp = sat.verdicts["kp_dimension"];
    bool ok = (st.code == kPositive) == ex.value("stable", true) && sat.verdicts["saturated"] == ex["saturated"] &&
              sat.verdicts["count"] == ex["count"] && xt.verdicts["verdict"] == ex["extreme"] &&
              kp == ex["kp_dimension"].get<int>();
    all = all && ok;
    std::string satcol = std::string(sat.verdicts["saturated"] ? "yes " : "no ") + std::to_string(int(sat.verdicts["count"])) +
                         "/" + std::to_string(int(sat.verdicts["required"]));
    out << std::setw(28) << doc.value("name", f.stem().string()) << std::setw(20)
        << st.verdicts["verdict"].get<std::string>() << std::setw(16) << satcol << std::setw(14)
        << xt.verdicts["verdict"].get<std::string>() << std::setw(6) << kp << (ok ? "PASS" : "FAIL") << "\n";
    rows.push_back({{"file", f.filename().string()},
                    {"name", doc.value("name", "")},
                    {"stable", st.verdicts["verdict"]},
                    {"saturation", sat.verdicts},
                    {"extreme", xt.verdicts["verdict"]},
                    {"pass", ok}});
  }
  out << (all ? "all corpus checks passed\n" : "some corpus checks FAILED\n");
  return {{{"entries", rows}, {"all_passed", all}}, all ? kPositive : kNegative};
}

void add_common(CLI::App* sub, Options& o, bool needs_input) {
  auto* in = sub->add_option("--input", o.input, needs_input ? "polynomial JSON file" : "corpus directory");
  if (needs_input) in->required();
  sub->add_flag("--exact", o.exact, "exact Gaussian-rational backend where available");
  sub->add_option("--tol", o.tol, "tolerance override for residual checks");
  sub->add_option("--grid", o.grid, "sampling grid for residual checks")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--output", o.output, "also write the report to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for polynomials with no zeros on the bidisk", "bidisk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"reflect", "reflection at the declared bidegree"},
      {"stable", "scattering stability"},
      {"saturated", "count common zeros of p and its reflection on the torus"},
      {"extreme", "extremality of (p + p~)/(p - p~)"},
      {"face", "admissible perturbation directions"},
      {"agler", "sums-of-squares pair"},
      {"realize", "unitary transfer-function realization"},
      {"l2", "whether q / (|A1| + |A2|) stays bounded near the torus zeros of p"},
      {"classify11", "bidegree (1,1) classification"},
      {"corpus", "run the built-in examples"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o, name != "corpus");
    if (name == "l2") sub->add_option("--q", o.q_input, "numerator polynomial JSON file")->required();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Tolerances tol;
  tol.seed = o.seed;
  json report = {{"command", command}, {"version", kVersion}};
  Outcome res;
  try {
    if (o.tol != 0) tol = with_tol(tol, o.tol);
    if (command == "corpus") {
      res = cmd_corpus(o.input, tol, out);
    } else {
      Input in = load(o.input, o.exact);
      report["input"] = in.raw;
      report["backend"] = o.exact ? "exact" : "numeric";
      std::string digest_src = in.raw.dump();
      if (command == "reflect") res = cmd_reflect(in);
      if (command == "stable") res = cmd_stable(in, tol);
      if (command == "saturated") res = cmd_saturated(in, tol);
      if (command == "extreme") res = cmd_extreme(in, tol);
      if (command == "face") res = cmd_face(in, tol);
      if (command == "agler") res = cmd_agler(in, tol, o.grid);
      if (command == "realize") res = cmd_realize(in, tol);
      if (command == "classify11") res = cmd_classify11(in, tol);
      if (command == "l2") {
        Input q = load(o.q_input, o.exact);
        report["q"] = q.raw;
        digest_src += q.raw.dump();
        res = cmd_l2(in, q, tol);
      }
      report["input_digest"] = fnv1a64(digest_src);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    res = {{{"error", e.what()}}, kInputError};
  } catch (const std::runtime_error& e) {
    err << "inconclusive: " << e.what() << "\n";
    res = {{{"error", e.what()}}, kUnknown};
  }
  report["verdicts"] = res.verdicts;
  report["exit_code"] = res.code;
  report["tolerances"] = to_json(tol);
  report["runtime_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.dump(2);
  if (command != "corpus") out << text << "\n";
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kInputError;
    }
    f << text << "\n";
  }
  return res.code;
}

}  // namespace bidisk::cli
