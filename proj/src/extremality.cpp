#include "bidisk/extremality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "bidisk/polycore.hpp"
#include "bidisk/roots.hpp"

namespace bidisk {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "UNKNOWN";
  }
}

std::string to_string(BottomTerm::Kind k) {
  switch (k) {
    case BottomTerm::Consistent: return "CONSISTENT";
    case BottomTerm::Inconsistent: return "INCONSISTENT";
    default: return "VACUOUS";
  }
}

std::string to_string(Extremality e) {
  switch (e) {
    case Extremality::Extreme: return "EXTREME";
    case Extremality::NotExtreme: return "NOT_EXTREME";
    default: return "UNKNOWN";
  }
}

PerturbationSpace perturbation_basis(Bidegree n) {
  if (n.n1 < 0 || n.n2 < 0 || (n.n1 == 0 && n.n2 == 0))
    throw DegreeError("perturbation_basis: bidegree must be nonzero");
  PerturbationSpace s{n, {}, 0};
  const cplx I(0, 1);
  for (int i = 0; i <= n.n1; ++i)
    for (int j = 0; j <= n.n2; ++j) {
      const int ri = n.n1 - i, rj = n.n2 - j;
      if ((i == 0 && j == 0) || (ri == 0 && rj == 0)) continue;
      if (i == ri && j == rj) {
        BiPoly<cplx> v(n);
        v.at(i, j) = 1.0;
        s.basis.push_back(v);
      } else if (std::pair(i, j) < std::pair(ri, rj)) {
        BiPoly<cplx> a(n), b(n);
        a.at(i, j) = 1.0;
        a.at(ri, rj) = 1.0;
        b.at(ri, rj) = I;
        b.at(i, j) = -I;
        s.basis.push_back(a);
        s.basis.push_back(b);
      }
    }
  s.real_dimension = static_cast<int>(s.basis.size());
  return s;
}

BiPoly<cplx> combine(const PerturbationSpace& s, const std::vector<double>& coords) {
  if (coords.size() != s.basis.size()) throw InputError("combine: coordinate count does not match basis");
  BiPoly<cplx> v(s.n);
  for (size_t k = 0; k < coords.size(); ++k) v += s.basis[k] * cplx(coords[k]);
  return v;
}

bool admissible(const BiPoly<cplx>& p, const BiPoly<cplx>& v, double t, const Tolerances& tol) {
  BiPoly<cplx> q = linear_combine<cplx>({{cplx(1), p}, {cplx(t), v}});
  try {
    return scattering_stable(q, tol, false).verdict != Verdict::Unstable;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

// Largest s in [0, t_max] with p + sign*s*v admissible, assuming admissibility is an interval.
std::pair<double, bool> reach(const BiPoly<cplx>& p, const BiPoly<cplx>& v, double sign, const Tolerances& tol) {
  auto ok = [&](double s) { return admissible(p, v, sign * s, tol); };
  auto bisect = [&](double good, double bad) {
    while (bad - good > tol.interval_resolution) {
      double mid = 0.5 * (good + bad);
      (ok(mid) ? good : bad) = mid;
    }
    return good;
  };
  double t = tol.witness_min_t;
  if (!ok(t)) return {bisect(0.0, t), false};
  double good = t;
  for (;;) {
    t *= 4;
    if (t >= tol.t_max) {
      if (ok(tol.t_max)) return {tol.t_max, true};
      return {bisect(good, tol.t_max), false};
    }
    if (!ok(t)) return {bisect(good, t), false};
    good = t;
  }
}

}  // namespace

Interval admissible_interval(const BiPoly<cplx>& p, const BiPoly<cplx>& v, const Tolerances& tol) {
  if (v.norm1() <= tol.coeff_zero * std::max(1.0, p.norm1())) return {-tol.t_max, tol.t_max, true, true};
  auto [hi, hc] = reach(p, v, 1.0, tol);
  auto [lo, lc] = reach(p, v, -1.0, tol);
  return {-lo, hi, lc, hc};
}

namespace {

template <class S>
BiPoly<S> trim(const BiPoly<S>& q, const Tolerances& tol) {
  BiPoly<S> f = q;
  if constexpr (!is_exact_v<S>) {
    const double cut = tol.coeff_zero * q.norm1();
    for (int i = 0; i <= f.n1(); ++i)
      for (int j = 0; j <= f.n2(); ++j)
        if (std::abs(f.at(i, j)) <= cut) f.at(i, j) = 0;
  }
  Bidegree s = f.support();
  if (s.n1 < 0) throw DomainError("irreducible: zero polynomial");
  return f.with_bidegree(s);
}

// Cases decided without the Ruppert system; f is trimmed to its support.
template <class S>
std::optional<IrreducibilityResult> structural(const BiPoly<S>& f) {
  const int a = f.n1(), b = f.n2();
  int terms = 0, ti = 0, tj = 0;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j)
      if (!is_zero(f.at(i, j))) {
        ++terms;
        ti = i;
        tj = j;
      }
  if (terms == 1) return IrreducibilityResult{ti + tj == 1 ? Tri::True : Tri::False, -1, 0, "monomial"};
  if (a == 0 || b == 0)
    return IrreducibilityResult{a + b == 1 ? Tri::True : Tri::False, -1, 0, "univariate"};
  bool zdiv = true, wdiv = true;
  for (int j = 0; j <= b; ++j) zdiv = zdiv && is_zero(f.at(0, j));
  for (int i = 0; i <= a; ++i) wdiv = wdiv && is_zero(f.at(i, 0));
  if (zdiv || wdiv) return IrreducibilityResult{Tri::False, -1, 0, "monomial factor"};
  return std::nullopt;
}

// Columns: g (deg <= (a-1, b)) then h (deg <= (a, b-1)); rows: coefficients of
// f g_w - g f_w - f h_z + h f_z up to bidegree (2a-1, 2b-1).
template <class S>
std::vector<std::vector<S>> ruppert_matrix(const BiPoly<S>& f) {
  const int a = f.n1(), b = f.n2();
  const int rows = 2 * a * 2 * b;
  const BiPoly<S> fz = dz(f), fw = dw(f);
  std::vector<std::vector<S>> cols;
  auto push = [&](const BiPoly<S>& r) {
    std::vector<S> c(rows, S(0));
    for (int i = 0; i < 2 * a; ++i)
      for (int j = 0; j < 2 * b; ++j) c[i * 2 * b + j] = r.coeff(i, j);
    cols.push_back(std::move(c));
  };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j <= b; ++j) {
      BiPoly<S> g(Bidegree{a - 1, b});
      g.at(i, j) = S(1);
      push(linear_combine<S>({{S(1), multiply(f, dw(g))}, {S(-1), multiply(g, fw)}}));
    }
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j < b; ++j) {
      BiPoly<S> h(Bidegree{a, b - 1});
      h.at(i, j) = S(1);
      push(linear_combine<S>({{S(-1), multiply(f, dz(h))}, {S(1), multiply(h, fz)}}));
    }
  std::vector<std::vector<S>> m(rows, std::vector<S>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m[r][c] = cols[c][r];
  return m;
}

Eigen::MatrixXcd to_eigen(const std::vector<std::vector<cplx>>& m) {
  Eigen::MatrixXcd e(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m[r].size(); ++c) e(r, c) = m[r][c];
  return e;
}

struct RankBand {
  int live = 0;
  int null = 0;
  int ambiguous = 0;
  double gap = 0;
};

RankBand classify_singular(const Eigen::VectorXd& sv, int cols, const Tolerances& tol) {
  RankBand b;
  const double top = sv.size() ? sv(0) : 0;
  double min_live = top, max_null = 0;
  for (int k = 0; k < sv.size(); ++k) {
    if (sv(k) > tol.rank_live_rel * top) {
      ++b.live;
      min_live = std::min(min_live, sv(k));
    } else if (sv(k) < tol.rank_null_rel * top) {
      ++b.null;
      max_null = std::max(max_null, sv(k));
    } else {
      ++b.ambiguous;
    }
  }
  b.null += cols - static_cast<int>(sv.size());
  b.gap = max_null > 0 ? min_live / max_null : std::numeric_limits<double>::infinity();
  return b;
}

template <class S>
int exact_rank(std::vector<std::vector<S>> m) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t k = r + 1; k < rows; ++k) {
      if (is_zero(m[k][c])) continue;
      S f = m[k][c] / m[r][c];
      for (size_t l = c; l < cols; ++l) m[k][l] -= f * m[r][l];
    }
    ++r;
  }
  return static_cast<int>(r);
}

IrreducibilityResult from_nullity(int nullity, double gap) {
  if (nullity == 1) return {Tri::True, 1, gap, "single factor"};
  if (nullity >= 2) return {Tri::False, nullity, gap, "several factors"};
  return {Tri::Unknown, nullity, gap, "empty solution space"};
}

}  // namespace

IrreducibilityResult irreducible(const BiPoly<cplx>& q, const Tolerances& tol) {
  BiPoly<cplx> f = trim(q, tol);
  f *= cplx(1.0 / f.norm1());
  if (auto s = structural(f)) return *s;
  const int a = f.n1();

  // A repeated factor or a factor free of z shows up as a common factor of f and f_z.
  std::mt19937_64 rng(tol.seed);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  const cplx w0 = std::polar(0.7, ang(rng));
  const BiPoly<cplx> F = swap_vars(f);
  Eigen::JacobiSVD<Eigen::MatrixXcd> syl(to_eigen(sylvester_at(F, dw(F), w0)));
  const Eigen::VectorXd ssv = syl.singularValues();
  const double ratio = ssv(ssv.size() - 1) / ssv(0);
  if (ratio < tol.rank_null_rel) return {Tri::False, -1, 0, "repeated factor"};
  if (ratio < tol.rank_live_rel) return {Tri::Unknown, -1, 0, "square-freeness undecided"};

  int lowest = -1;
  for (int i = 0; i <= a; ++i) {
    int d = f.z_coeff(i).trimmed(tol.coeff_zero).true_degree();
    if (d >= 0 && (lowest < 0 || d < f.z_coeff(lowest).trimmed(tol.coeff_zero).true_degree())) lowest = i;
  }
  for (const cplx& c : poly_roots(f.z_coeff(lowest))) {
    double m = 0;
    for (int i = 0; i <= a; ++i) m = std::max(m, std::abs(f.z_coeff(i)(c)));
    if (m < tol.rank_live_rel) return {Tri::False, -1, 0, "factor in w alone"};
  }

  const auto rm = ruppert_matrix(f);
  const int cols = static_cast<int>(rm[0].size());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(rm));
  RankBand band = classify_singular(svd.singularValues(), cols, tol);
  if (band.ambiguous) return {Tri::Unknown, -1, band.gap, "singular value gap below threshold"};
  return from_nullity(band.null, band.gap);
}

IrreducibilityResult irreducible(const BiPoly<GaussRat>& q, const Tolerances& tol) {
  BiPoly<GaussRat> f = trim(q, tol);
  if (auto s = structural(f)) return *s;
  const int a = f.n1();
  const BiPoly<GaussRat> F = swap_vars(f);
  if (sylvester_resultant(F, dw(F)).is_zero()) return {Tri::False, -1, 0, "repeated factor"};
  UniPoly<GaussRat> content = f.z_coeff(0);
  for (int i = 1; i <= a; ++i) content = poly_gcd(content, f.z_coeff(i));
  if (content.true_degree() > 0) return {Tri::False, -1, 0, "factor in w alone"};
  const auto rm = ruppert_matrix(f);
  const int cols = static_cast<int>(rm[0].size());
  return from_nullity(cols - exact_rank(rm), std::numeric_limits<double>::infinity());
}

namespace {

// All homogeneous parts of v(zeta - zeta o eta), without thresholding.
std::vector<BiPoly<cplx>> parts_of(const BiPoly<cplx>& v, std::pair<cplx, cplx> zeta) {
  const int n1 = v.n1(), n2 = v.n2();
  std::vector<BiPoly<cplx>> parts(n1 + n2 + 1, BiPoly<cplx>(v.bidegree()));
  for (int i = 0; i <= n1; ++i)
    for (int j = 0; j <= n2; ++j) {
      cplx c = v.at(i, j) * spow(zeta.first, i) * spow(zeta.second, j);
      if (c == cplx(0)) continue;
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b)
          parts[a + b].at(a, b) += c * double(binom(i, a) * binom(j, b) * (((a + b) % 2) ? -1 : 1));
    }
  return parts;
}

cplx inner(const BiPoly<cplx>& x, const BiPoly<cplx>& y) {
  cplx s(0);
  for (size_t k = 0; k < x.coeffs().size(); ++k) s += std::conj(x.coeffs()[k]) * y.coeffs()[k];
  return s;
}

double l2(const BiPoly<cplx>& x) { return std::sqrt(std::real(inner(x, x))); }

struct ZeroData {
  int order = 0;
  BiPoly<cplx> bottom;  // P_M
  cplx mu2;
  bool vacuous = true;
};

constexpr double kMuOne = 1e-6;

ZeroData zero_data(const BiPoly<cplx>& p, std::pair<cplx, cplx> zeta, const Tolerances& tol) {
  ZeroData z;
  auto hp = homog_expand(p, zeta.first, zeta.second, tol.homog_rel);
  z.order = hp.order;
  z.bottom = hp.leading();
  BiPoly<cplx> Q = parts_of(reflect(p), zeta)[z.order];
  z.mu2 = inner(z.bottom, Q) / inner(z.bottom, z.bottom);
  z.vacuous = std::abs(z.mu2 - 1.0) < kMuOne;
  return z;
}

}  // namespace

bool vanishing_order_check(const BiPoly<cplx>& p, const BiPoly<cplx>& v, std::pair<cplx, cplx> zeta,
                           const Tolerances& tol) {
  const int M = homog_expand(p, zeta.first, zeta.second, tol.homog_rel).order;
  if (v.norm1() == 0) return true;
  try {
    return homog_expand(v, zeta.first, zeta.second, tol.homog_rel).order >= M;
  } catch (const NumericError&) {
    return true;
  }
}

BottomTerm bottom_term_check(const BiPoly<cplx>& p, const BiPoly<cplx>& v, std::pair<cplx, cplx> zeta,
                             const Tolerances& tol) {
  ZeroData z = zero_data(p, zeta, tol);
  BottomTerm out;
  out.mu_squared = z.mu2;
  if (z.vacuous) return out;
  const cplx mu = std::sqrt(z.mu2);
  const BiPoly<cplx> V = parts_of(v, zeta)[z.order];
  const double pn = l2(z.bottom);
  const cplx c = inner(z.bottom, V) / (pn * pn);
  const double scale = std::max(l2(V), v.norm1());
  const double resid = l2(V - z.bottom * c);
  const double r = std::real(c / mu);
  const double off = std::abs(c - r * mu) * pn;
  if (resid <= tol.bottom_fit * scale && off <= tol.bottom_fit * scale) {
    out.kind = BottomTerm::Consistent;
    out.r = scale > 0 ? r : 0;
  } else {
    out.kind = BottomTerm::Inconsistent;
  }
  return out;
}

namespace {

constexpr double kFeasibleNull = 1e-7;
constexpr double kPivot = 1e-9;

std::vector<std::vector<double>> rref(Eigen::MatrixXd m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv;
    double best = m.col(c).segment(r, rows - r).cwiseAbs().maxCoeff(&piv);
    piv += r;
    if (best < kPivot) continue;
    m.row(piv).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (int k = 0; k < rows; ++k)
      if (k != r) m.row(k) -= m(k, c) * m.row(r);
    ++r;
  }
  std::vector<std::vector<double>> out;
  for (int k = 0; k < r; ++k) {
    std::vector<double> row(cols);
    for (int c = 0; c < cols; ++c) row[c] = std::abs(m(k, c)) < 1e-12 ? 0.0 : m(k, c);
    out.push_back(std::move(row));
  }
  return out;
}

int real_rank(const std::vector<std::vector<double>>& rows, double rel) {
  if (rows.empty()) return 0;
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  int k = 0;
  for (int i = 0; i < sv.size(); ++i) k += sv(i) > rel * sv(0);
  return k;
}

}  // namespace

FeasibleSpace feasible_directions(const BiPoly<cplx>& p, const Tolerances& tol) {
  FeasibleSpace fs;
  fs.space = perturbation_basis(p.bidegree());
  fs.boundary_zeros = torus_common_zeros(p, tol);
  const int D = fs.space.real_dimension;
  const Bidegree n = p.bidegree();

  std::vector<std::vector<double>> eqs;  // over D basis coordinates plus one r per non-vacuous zero
  std::vector<ZeroData> data;
  int extra = 0;
  for (const auto& zeta : fs.boundary_zeros) {
    data.push_back(zero_data(p, zeta, tol));
    extra += data.back().vacuous ? 0 : 1;
  }
  const int cols = D + extra;
  int rcol = D;
  for (size_t zi = 0; zi < fs.boundary_zeros.size(); ++zi) {
    const auto& zd = data[zi];
    std::vector<std::vector<BiPoly<cplx>>> bparts;
    for (const auto& b : fs.space.basis) bparts.push_back(parts_of(b, fs.boundary_zeros[zi]));
    const int last = zd.vacuous ? zd.order - 1 : zd.order;
    const cplx mu = std::sqrt(zd.mu2);
    for (int k = 0; k <= last && k <= n.n1 + n.n2; ++k)
      for (int i = 0; i <= std::min(k, n.n1); ++i) {
        const int j = k - i;
        if (j > n.n2) continue;
        std::vector<double> re(cols, 0.0), im(cols, 0.0);
        for (int c = 0; c < D; ++c) {
          cplx x = bparts[c][k].at(i, j);
          re[c] = x.real();
          im[c] = x.imag();
        }
        if (k == zd.order) {
          cplx x = -mu * zd.bottom.at(i, j);
          re[rcol] = x.real();
          im[rcol] = x.imag();
        }
        eqs.push_back(std::move(re));
        eqs.push_back(std::move(im));
      }
    if (!zd.vacuous) ++rcol;
  }

  Eigen::MatrixXd null;
  if (eqs.empty()) {
    null = Eigen::MatrixXd::Identity(cols, cols);
  } else {
    Eigen::MatrixXd A(eqs.size(), cols);
    for (size_t r = 0; r < eqs.size(); ++r)
      for (int c = 0; c < cols; ++c) A(r, c) = eqs[r][c];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() ? sv(0) : 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) rank += sv(i) > kFeasibleNull * std::max(top, 1.0);
    null = svd.matrixV().rightCols(cols - rank);
  }
  if (null.cols() == 0) return fs;
  Eigen::MatrixXd proj = null.topRows(D);
  Eigen::JacobiSVD<Eigen::MatrixXd> ps(proj, Eigen::ComputeThinU);
  int k = 0;
  for (int i = 0; i < ps.singularValues().size(); ++i) k += ps.singularValues()(i) > 1e-8;
  if (k == 0) return fs;
  fs.rows = rref(ps.matrixU().leftCols(k).transpose());
  return fs;
}

FaceProbeResult face_probe(const BiPoly<cplx>& p, int samples, const Tolerances& tol, int max_directions) {
  FaceProbeResult res;
  FeasibleSpace fs = feasible_directions(p, tol);
  res.feasible_dimension = static_cast<int>(fs.rows.size());
  if (fs.rows.empty()) return res;

  std::vector<std::vector<double>> cands = fs.rows;
  std::mt19937_64 rng(tol.seed);
  std::normal_distribution<double> gauss;
  const int D = fs.space.real_dimension;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> c(D, 0.0);
    for (const auto& row : fs.rows) {
      double g = gauss(rng);
      for (int k = 0; k < D; ++k) c[k] += g * row[k];
    }
    double nrm = 0;
    for (double x : c) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm == 0) continue;
    for (double& x : c) x /= nrm;
    cands.push_back(std::move(c));
  }

  std::vector<std::vector<double>> kept;
  for (auto& c : cands) {
    BiPoly<cplx> v = combine(fs.space, c);
    if (!admissible(p, v, tol.witness_min_t, tol) || !admissible(p, v, -tol.witness_min_t, tol)) continue;
    Interval iv = admissible_interval(p, v, tol);
    if (!(iv.lo < 0 && iv.hi > 0)) continue;
    kept.push_back(c);
    res.directions.push_back({std::move(v), std::move(c), iv});
    if (max_directions > 0 && static_cast<int>(kept.size()) >= max_directions) break;
  }
  res.rank = real_rank(kept, 1e-8);
  return res;
}

Decomposition decompose(const BiPoly<cplx>& p, const BiPoly<cplx>& v, const Interval& iv) {
  if (!(iv.lo < 0 && iv.hi > 0)) throw DomainError("decompose: interval does not contain 0 in its interior");
  Decomposition d;
  d.t_minus = iv.lo;
  d.t_plus = iv.hi;
  d.lambda = iv.hi / (iv.hi - iv.lo);
  d.q_minus = p + v * cplx(iv.lo);
  d.q_plus = p + v * cplx(iv.hi);
  return d;
}

cplx prp_value(const BiPoly<cplx>& q, cplx z, cplx w) {
  const cplx a = eval(q, z, w), b = eval(reflect(q), z, w);
  return (a + b) / (a - b);
}

namespace {

void require_top_corner(const BiPoly<cplx>& p, const Tolerances& tol, const char* who) {
  const double s = p.norm1();
  if (s == 0) throw InputError(std::string(who) + ": zero polynomial");
  if (std::abs(p.at(p.n1(), p.n2())) > tol.coeff_zero * s)
    throw InputError(std::string(who) + ": reflection must vanish at the origin (top-corner coefficient nonzero)");
  if (std::abs(p.at(0, 0)) <= tol.coeff_zero * s) throw InputError(std::string(who) + ": p(0,0) = 0");
}

void require_stable(const BiPoly<cplx>& p, const Tolerances& tol, const char* who) {
  StabilityReport st = scattering_stable(p, tol, false);
  if (st.verdict == Verdict::Unstable) throw InputError(std::string(who) + ": polynomial has zeros in the bidisk");
  if (st.verdict == Verdict::Degenerate) throw InputError(std::string(who) + ": polynomial shares a factor with its reflection");
}

}  // namespace

ExtremalityCertificate certify_extreme(const BiPoly<cplx>& p, const Tolerances& tol) {
  require_top_corner(p, tol, "certify_extreme");
  require_stable(p, tol, "certify_extreme");
  ExtremalityCertificate cert;
  cert.saturation = is_saturated(p, tol);
  cert.irreducible = irreducible(p - reflect(p), tol);
  if (cert.saturation.saturated && cert.irreducible.verdict == Tri::True) {
    cert.verdict = Extremality::Extreme;
    cert.detail = "saturated with irreducible p - p~";
    return cert;
  }
  FaceProbeResult probe = face_probe(p, tol.probe_samples, tol, 1);
  if (!probe.directions.empty()) {
    const FaceDirection& d = probe.directions.front();
    cert.verdict = Extremality::NotExtreme;
    cert.witness_v = d.v;
    cert.witness_interval = d.interval;
    cert.decomposition = decompose(p, d.v, d.interval);
    cert.detail = "face direction with two-sided admissible interval";
    return cert;
  }
  cert.verdict = Extremality::Unknown;
  cert.detail = cert.saturation.saturated ? "saturated but p - p~ not shown irreducible; no face direction found"
                                          : "not saturated; no face direction found";
  return cert;
}

Classification11 classify_11(const BiPoly<cplx>& p, const Tolerances& tol) {
  if (p.bidegree() != Bidegree{1, 1}) throw InputError("classify_11: bidegree must be (1,1)");
  require_top_corner(p, tol, "classify_11");
  require_stable(p, tol, "classify_11");
  Classification11 c;
  const cplx c0 = p.at(0, 0);
  const cplx r1 = p.at(1, 0) / c0, r2 = p.at(0, 1) / c0;
  c.mu = c0 / std::abs(c0);
  c.a = std::abs(r1);
  c.b = std::abs(r2);
  c.sigma1 = c.a > 0 ? -r1 / c.a : cplx(1);
  c.sigma2 = c.b > 0 ? -r2 / c.b : cplx(1);
  const cplx root = std::sqrt(c.sigma1 * c.sigma2);
  c.mu_effective = c.mu * root;
  c.saturated = std::abs(c.a + c.b - 1.0) <= tol.strict_margin_rel * 10;
  c.reducible = c.saturated && std::abs(c.mu_effective * c.mu_effective + 1.0) <= kMuOne;
  c.extreme = c.saturated && !c.reducible;
  c.nu = cplx(0, 1) * c.mu * root;
  if (c.extreme) return c;
  if (c.reducible) {
    c.mobius_split = true;
  } else {
    BiPoly<cplx> v(Bidegree{1, 1}, {{1, 0, cplx(1)}, {0, 1, cplx(1)}});
    c.decomposition = decompose(p, v, admissible_interval(p, v, tol));
  }
  return c;
}

cplx mobius_value(const Classification11& c, cplx z, cplx w) {
  return c.b * (1.0 + c.sigma1 * z) / (1.0 - c.sigma1 * z) + c.a * (1.0 + c.sigma2 * w) / (1.0 - c.sigma2 * w);
}

}  // namespace bidisk
