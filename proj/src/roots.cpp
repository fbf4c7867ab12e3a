#include "bidisk/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace bidisk {

std::vector<cplx> poly_roots(const UniPoly<cplx>& q, double rel) {
  UniPoly<cplx> t = q.trimmed(rel);
  const auto& c = t.coeffs();
  int lo = 0;
  while (lo < t.degree() && c[lo] == cplx(0)) ++lo;
  std::vector<cplx> roots(lo, cplx(0));
  int d = t.degree() - lo;
  if (d <= 0) return roots;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  cplx lead = c[t.degree()];
  for (int k = 0; k < d; ++k) comp(0, k) = -c[t.degree() - 1 - k] / lead;
  for (int k = 1; k < d; ++k) comp(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  for (int k = 0; k < d; ++k) roots.push_back(es.eigenvalues()(k));
  return roots;
}

std::vector<cplx> taylor_shift(const UniPoly<cplx>& q, cplx z0) {
  std::vector<cplx> c = q.coeffs();
  const int n = q.degree();
  for (int k = 0; k <= n; ++k)
    for (int j = n - 1; j >= k; --j) c[j] += z0 * c[j + 1];
  return c;
}

int taylor_order(const UniPoly<cplx>& q, cplx z0, double rel) {
  std::vector<cplx> c = taylor_shift(q, z0);
  double cut = rel * q.norm1();
  for (size_t j = 0; j < c.size(); ++j)
    if (std::abs(c[j]) > cut) return static_cast<int>(j);
  return static_cast<int>(c.size());
}

namespace {

std::vector<std::vector<cplx>> single_linkage(const std::vector<cplx>& pts, double radius) {
  const size_t n = pts.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) < radius) parent[find(i)] = find(j);
  std::vector<std::vector<cplx>> groups;
  std::vector<long> slot(n, -1);
  for (size_t i = 0; i < n; ++i) {
    size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(pts[i]);
  }
  return groups;
}

cplx centroid(const std::vector<cplx>& g) {
  cplx s(0);
  for (auto x : g) s += x;
  return s / static_cast<double>(g.size());
}

// Splits a cluster until its size matches the Taylor order at its (optionally snapped) centre.
void resolve(const UniPoly<cplx>& q, const std::vector<cplx>& group, double radius, bool snap,
             const Tolerances& tol, std::vector<RootCluster>& out) {
  cplx c = centroid(group);
  bool near_circle = std::abs(std::abs(c) - 1.0) < tol.circle_snap;
  if (snap && near_circle) c /= std::abs(c);
  int size = static_cast<int>(group.size());
  if (size == 1) {
    out.push_back({c, 1});
    return;
  }
  int order = taylor_order(q, c, tol.taylor_rel);
  if (order == size) {
    out.push_back({c, size});
    return;
  }
  if (radius > 1e-7) {
    for (const auto& g : single_linkage(group, radius / 4)) resolve(q, g, radius / 4, snap, tol, out);
    return;
  }
  out.push_back({c, std::clamp(order, 1, size)});
}

std::vector<RootCluster> clusters_impl(const UniPoly<cplx>& q, bool snap, const Tolerances& tol) {
  UniPoly<cplx> t = q.trimmed(1e-14);
  std::vector<RootCluster> out;
  if (t.degree() <= 0) return out;
  auto roots = poly_roots(t, 0.0);
  for (const auto& g : single_linkage(roots, tol.cluster_radius)) resolve(t, g, tol.cluster_radius, snap, tol, out);
  return out;
}

}  // namespace

std::vector<RootCluster> root_clusters(const UniPoly<cplx>& q, const Tolerances& tol) {
  return clusters_impl(q, true, tol);
}

std::vector<CircleRoot> circle_roots(const UniPoly<cplx>& q, const Tolerances& tol) {
  std::vector<CircleRoot> out;
  for (const auto& c : clusters_impl(q, true, tol))
    if (std::abs(std::abs(c.center) - 1.0) < 1e-13) out.push_back({c.center, c.multiplicity});
  std::sort(out.begin(), out.end(),
            [](const CircleRoot& a, const CircleRoot& b) { return std::arg(a.point) < std::arg(b.point); });
  return out;
}

std::vector<CircleRoot> circle_roots(const UniPoly<GaussRat>& q, const Tolerances& tol) {
  std::vector<CircleRoot> out;
  for (const auto& [factor, k] : squarefree_decomposition(q)) {
    for (cplx r : poly_roots(to_complex_poly(factor), 0.0)) {
      if (std::abs(std::abs(r) - 1.0) < tol.circle_snap) out.push_back({r / std::abs(r), k});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CircleRoot& a, const CircleRoot& b) { return std::arg(a.point) < std::arg(b.point); });
  return out;
}

int total_multiplicity(const std::vector<CircleRoot>& roots) {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

}  // namespace bidisk
