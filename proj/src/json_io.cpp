#include "bidisk/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bidisk/errors.hpp"

namespace bidisk {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                     " (byte " + std::to_string(e.byte) + "): " + e.what());
  }
}

namespace {

json parse_text(const std::string& text) { return parse_json(text); }

template <class S, class Entry>
BiPoly<S> from_json_impl(const json& j, Entry entry) {
  if (!j.is_object()) throw InputError("polynomial: expected an object at top level");
  if (!j.contains("bidegree")) throw InputError("polynomial: missing key 'bidegree'");
  if (!j.contains("coeffs")) throw InputError("polynomial: missing key 'coeffs'");
  const json& d = j["bidegree"];
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
    throw InputError("polynomial: 'bidegree' must be [n1, n2] with integers");
  int n1 = d[0].get<int>(), n2 = d[1].get<int>();
  if (n1 < 0 || n2 < 0) throw InputError("polynomial: 'bidegree' entries must be nonnegative");
  const json& c = j["coeffs"];
  if (!c.is_array() || c.size() != static_cast<size_t>(n1 + 1))
    throw InputError("polynomial: 'coeffs' must have n1+1 = " + std::to_string(n1 + 1) + " rows");
  BiPoly<S> p(Bidegree{n1, n2});
  for (int i = 0; i <= n1; ++i) {
    const json& row = c[i];
    std::string at = "coeffs[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != static_cast<size_t>(n2 + 1))
      throw InputError("polynomial: " + at + " must have n2+1 = " + std::to_string(n2 + 1) + " entries");
    for (int k = 0; k <= n2; ++k) {
      const json& e = row[k];
      std::string where = at + "[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2) throw InputError("polynomial: " + where + " must be [re, im]");
      p.at(i, k) = entry(e[0], e[1], where);
    }
  }
  return p;
}

double numeric_part(const json& x, const std::string& where) {
  if (x.is_number()) return x.get<double>();
  if (x.is_string()) {
    GaussRat g = GaussRat::parse(x.get<std::string>(), "0");
    return g.re.get_d();
  }
  throw InputError("polynomial: " + where + " entries must be numbers or rational strings");
}

std::string exact_part(const json& x, const std::string& where) {
  if (x.is_number_integer()) return std::to_string(x.get<long long>());
  if (x.is_string()) return x.get<std::string>();
  throw InputError("polynomial: " + where + " entries must be integers or rational strings in exact mode");
}

}  // namespace

BiPoly<cplx> poly_from_json(const json& j) {
  return from_json_impl<cplx>(j, [](const json& re, const json& im, const std::string& where) {
    cplx v(numeric_part(re, where), numeric_part(im, where));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InputError("polynomial: " + where + " is not finite");
    return v;
  });
}

BiPoly<GaussRat> poly_exact_from_json(const json& j) {
  return from_json_impl<GaussRat>(j, [](const json& re, const json& im, const std::string& where) {
    try {
      return GaussRat::parse(exact_part(re, where), exact_part(im, where));
    } catch (const InputError& e) {
      throw InputError("polynomial: " + where + ": " + e.what());
    }
  });
}

BiPoly<cplx> parse_poly(const std::string& text) { return poly_from_json(parse_text(text)); }
BiPoly<GaussRat> parse_poly_exact(const std::string& text) { return poly_exact_from_json(parse_text(text)); }

json to_json(cplx x) { return json::array({x.real() + 0.0, x.imag() + 0.0}); }

json to_json(const BiPoly<cplx>& p) {
  json rows = json::array();
  for (int i = 0; i <= p.n1(); ++i) {
    json row = json::array();
    for (int k = 0; k <= p.n2(); ++k) row.push_back(to_json(p.at(i, k)));
    rows.push_back(row);
  }
  return {{"bidegree", {p.n1(), p.n2()}}, {"coeffs", rows}};
}

json to_json(const BiPoly<GaussRat>& p) {
  json rows = json::array();
  for (int i = 0; i <= p.n1(); ++i) {
    json row = json::array();
    for (int k = 0; k <= p.n2(); ++k) row.push_back({p.at(i, k).re.get_str(), p.at(i, k).im.get_str()});
    rows.push_back(row);
  }
  return {{"bidegree", {p.n1(), p.n2()}}, {"coeffs", rows}};
}

json to_json(const UniPoly<cplx>& q) {
  json c = json::array();
  for (auto x : q.coeffs()) c.push_back(to_json(x));
  return c;
}

json to_json(const std::vector<CircleRoot>& roots) {
  json a = json::array();
  for (const auto& r : roots) a.push_back({{"point", to_json(r.point)}, {"multiplicity", r.multiplicity}});
  return a;
}

json to_json(const Tolerances& t) {
  return {{"torus", t.torus},
          {"coeff_zero", t.coeff_zero},
          {"psd_rel", t.psd_rel},
          {"zero_detect_rel", t.zero_detect_rel},
          {"strict_margin_rel", t.strict_margin_rel},
          {"sweep_min_density", t.sweep_min_density},
          {"sweep_min_cell", t.sweep_min_cell},
          {"sweep_max_evals", t.sweep_max_evals},
          {"circle_snap", t.circle_snap},
          {"cluster_radius", t.cluster_radius},
          {"taylor_rel", t.taylor_rel},
          {"common_zero_rel", t.common_zero_rel},
          {"interval_resolution", t.interval_resolution},
          {"t_max", t.t_max},
          {"witness_min_t", t.witness_min_t},
          {"rank_null_rel", t.rank_null_rel},
          {"rank_live_rel", t.rank_live_rel},
          {"homog_rel", t.homog_rel},
          {"bottom_fit", t.bottom_fit},
          {"gram_pivot_rel", t.gram_pivot_rel},
          {"fr_residual", t.fr_residual},
          {"bauer_max_iter", t.bauer_max_iter},
          {"bauer_tol", t.bauer_tol},
          {"span_rel", t.span_rel},
          {"realization_tol", t.realization_tol},
          {"l2_levels", t.l2_levels},
          {"l2_growth", t.l2_growth},
          {"l2_delta0", t.l2_delta0},
          {"l2_ratio", t.l2_ratio},
          {"shear_extra", t.shear_extra},
          {"probe_samples", t.probe_samples},
          {"seed", t.seed}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tolerances with_tol(Tolerances base, double tol) {
  if (!(tol > 0)) throw InputError("--tol must be positive");
  base.realization_tol = tol;
  base.fr_residual = tol;
  return base;
}

}  // namespace bidisk
