#include "klein.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <vector>

#include "errors.hpp"

namespace hyptet {

namespace {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

double lorentz(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - a[3] * b[3];
}

Vec4 lift(const Vec3& p) {
  double n2 = p.x * p.x + p.y * p.y + p.z * p.z;
  if (n2 >= 1.0) throw convergence_error("klein: vertex not inside the unit ball");
  double s = 1.0 / std::sqrt(1.0 - n2);
  return Vec4(p.x * s, p.y * s, p.z * s, s);
}

// Lorentz-orthogonal complement of three independent vectors.
Vec4 complement(const Vec4& a, const Vec4& b, const Vec4& c) {
  Eigen::Matrix<double, 3, 4> m;
  m.row(0) = Vec4(a[0], a[1], a[2], -a[3]);
  m.row(1) = Vec4(b[0], b[1], b[2], -b[3]);
  m.row(2) = Vec4(c[0], c[1], c[2], -c[3]);
  Eigen::FullPivLU<Eigen::Matrix<double, 3, 4>> lu(m);
  Eigen::Matrix<double, 4, Eigen::Dynamic> ker = lu.kernel();
  if (ker.cols() < 1)
    throw realization_error("klein: degenerate plane triple");
  return ker.col(0);
}

// edge letters to face pairs: A={01} B={02} C={12} D={23} E={13} F={03}
constexpr int kEdgeFace[6][2] = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}};

std::array<Vec4, 4> face_normals(const KleinTet& k) {
  std::array<Vec4, 4> p;
  for (int i = 0; i < 4; ++i) p[size_t(i)] = lift(k.v[size_t(i)]);
  std::array<Vec4, 4> n;
  for (int f = 0; f < 4; ++f) {
    int idx[3], cnt = 0;
    for (int i = 0; i < 4; ++i)
      if (i != f) idx[cnt++] = i;
    Vec4 nf = complement(p[size_t(idx[0])], p[size_t(idx[1])], p[size_t(idx[2])]);
    double nn = lorentz(nf, nf);
    if (nn <= 0.0) throw realization_error("klein: face normal not spacelike");
    nf /= std::sqrt(nn);
    if (lorentz(nf, p[size_t(f)]) > 0.0) nf = -nf;  // outward
    n[size_t(f)] = nf;
  }
  return n;
}

}  // namespace

KleinTet realize(const DihedralAngles& a) {
  Gram g = gram(a);
  Mat4 G;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) G(i, j) = g[size_t(i)][size_t(j)];

  Eigen::SelfAdjointEigenSolver<Mat4> es(G);
  Vec4 ev = es.eigenvalues();  // ascending
  int negs = 0;
  for (int i = 0; i < 4; ++i)
    if (ev[i] < -1e-12) ++negs;
  if (negs != 1 || ev[0] >= -1e-12)
    throw realization_error("realize: Gram matrix is not Lorentzian (delta <= 0)");

  // normals: rows of Q sqrt(|Lambda|) with the negative eigenvalue on the
  // timelike axis (eigenvalues ascending puts it first; move it last).
  Mat4 Q = es.eigenvectors();
  std::array<Vec4, 4> n;
  for (int i = 0; i < 4; ++i) {
    Vec4 row;
    row[0] = Q(i, 1) * std::sqrt(ev[1]);
    row[1] = Q(i, 2) * std::sqrt(ev[2]);
    row[2] = Q(i, 3) * std::sqrt(ev[3]);
    row[3] = Q(i, 0) * std::sqrt(-ev[0]);
    n[size_t(i)] = row;
  }

  KleinTet k;
  for (int vtx = 0; vtx < 4; ++vtx) {
    int idx[3], cnt = 0;
    for (int i = 0; i < 4; ++i)
      if (i != vtx) idx[cnt++] = i;
    Vec4 p = complement(n[size_t(idx[0])], n[size_t(idx[1])], n[size_t(idx[2])]);
    double pp = lorentz(p, p);
    if (pp >= -1e-12)
      throw realization_error("realize: vertex is not finite (ideal or hyperideal)");
    p /= std::sqrt(-pp);
    if (p[3] < 0.0) p = -p;
    k.v[size_t(vtx)] = Vec3{p[0] / p[3], p[1] / p[3], p[2] / p[3]};
  }

  // self-certification: the realized tetrahedron must give the angles back
  DihedralAngles back = angles_from_klein(k);
  for (int e = 0; e < 6; ++e) {
    double d = std::abs(back[e] - a[e]);
    d = std::min(d, std::abs(d - 2.0 * M_PI));
    if (d > 1e-9)
      throw realization_error("realize: angle round-trip failed");
  }
  return k;
}

DihedralAngles angles_from_klein(const KleinTet& k) {
  auto n = face_normals(k);
  std::array<double, 6> th;
  for (int e = 0; e < 6; ++e) {
    double c = -lorentz(n[size_t(kEdgeFace[e][0])], n[size_t(kEdgeFace[e][1])]);
    c = std::clamp(c, -1.0, 1.0);
    th[size_t(e)] = std::acos(c);
  }
  return DihedralAngles(th);
}

std::array<double, 6> edge_lengths(const KleinTet& k) {
  std::array<Vec4, 4> p;
  for (int i = 0; i < 4; ++i) p[size_t(i)] = lift(k.v[size_t(i)]);
  // edge {ij} joins the two vertices NOT opposite faces i,j
  std::array<double, 6> len;
  for (int e = 0; e < 6; ++e) {
    int f0 = kEdgeFace[e][0], f1 = kEdgeFace[e][1];
    int vtx[2], cnt = 0;
    for (int i = 0; i < 4; ++i)
      if (i != f0 && i != f1) vtx[cnt++] = i;
    double ch = -lorentz(p[size_t(vtx[0])], p[size_t(vtx[1])]);
    len[size_t(e)] = std::acosh(std::max(1.0, ch));
  }
  return len;
}

namespace {

struct Cell {
  std::array<Vec3, 4> v;
  double value;  // fine-rule integral
  double err;
  std::uint64_t id;
};

double density(const Vec3& p) {
  double n2 = p.x * p.x + p.y * p.y + p.z * p.z;
  double d = 1.0 - n2;
  return 1.0 / (d * d);
}

// Gauss-Legendre nodes on [0,1].
struct GL {
  std::vector<double> x, w;
};

GL gl_rule(int n) {
  // Newton on Legendre polynomials.
  GL r;
  r.x.resize(size_t(n));
  r.w.resize(size_t(n));
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    r.x[size_t(i)] = 0.5 * (1.0 - t);  // descending cos order; harmless
    r.w[size_t(i)] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
  return r;
}

// Tensor rule on the reference tetrahedron via the collapsed-cube map
// x1=u, x2=v(1-u), x3=w(1-u)(1-v), jacobian (1-u)^2 (1-v).
struct TetRule {
  std::vector<std::array<double, 3>> bary;  // (x1,x2,x3)
  std::vector<double> w;                    // includes jacobian
};

TetRule tet_rule(int n) {
  GL g = gl_rule(n);
  TetRule r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double u = g.x[size_t(i)], v = g.x[size_t(j)], w = g.x[size_t(k)];
        double x1 = u, x2 = v * (1.0 - u), x3 = w * (1.0 - u) * (1.0 - v);
        double jac = (1.0 - u) * (1.0 - u) * (1.0 - v);
        r.bary.push_back({x1, x2, x3});
        r.w.push_back(g.w[size_t(i)] * g.w[size_t(j)] * g.w[size_t(k)] * jac);
      }
  return r;
}

double euclid_vol(const std::array<Vec3, 4>& v) {
  double a[3] = {v[1].x - v[0].x, v[1].y - v[0].y, v[1].z - v[0].z};
  double b[3] = {v[2].x - v[0].x, v[2].y - v[0].y, v[2].z - v[0].z};
  double c[3] = {v[3].x - v[0].x, v[3].y - v[0].y, v[3].z - v[0].z};
  double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
  return std::abs(det) / 6.0;
}

double cell_integral(const std::array<Vec3, 4>& v, const TetRule& rule) {
  double vol = euclid_vol(v);
  if (vol == 0.0) return 0.0;
  double acc = 0.0;
  for (size_t q = 0; q < rule.w.size(); ++q) {
    double x1 = rule.bary[q][0], x2 = rule.bary[q][1], x3 = rule.bary[q][2];
    double x0 = 1.0 - x1 - x2 - x3;
    Vec3 p{x0 * v[0].x + x1 * v[1].x + x2 * v[2].x + x3 * v[3].x,
           x0 * v[0].y + x1 * v[1].y + x2 * v[2].y + x3 * v[3].y,
           x0 * v[0].z + x1 * v[1].z + x2 * v[2].z + x3 * v[3].z};
    acc += rule.w[q] * density(p);
  }
  return 6.0 * vol * acc;  // rule weights sum to 1/6 on the reference tet
}

Vec3 mid(const Vec3& a, const Vec3& b) {
  return Vec3{0.5 * (a.x + b.x), 0.5 * (a.y + b.y), 0.5 * (a.z + b.z)};
}

std::array<std::array<Vec3, 4>, 8> octasect(const std::array<Vec3, 4>& v) {
  Vec3 m01 = mid(v[0], v[1]), m02 = mid(v[0], v[2]), m03 = mid(v[0], v[3]);
  Vec3 m12 = mid(v[1], v[2]), m13 = mid(v[1], v[3]), m23 = mid(v[2], v[3]);
  return {{{v[0], m01, m02, m03},
           {v[1], m01, m12, m13},
           {v[2], m02, m12, m23},
           {v[3], m03, m13, m23},
           {m01, m23, m02, m12},
           {m01, m23, m12, m13},
           {m01, m23, m13, m03},
           {m01, m23, m03, m02}}};
}

}  // namespace

double numeric_volume(const KleinTet& k, double tol) {
  for (const auto& p : k.v)
    if (p.x * p.x + p.y * p.y + p.z * p.z >= 1.0)
      throw convergence_error("numeric_volume: vertex on or outside the sphere");

  static const TetRule coarse = tet_rule(3);
  static const TetRule fine = tet_rule(5);

  auto estimate = [&](const std::array<Vec3, 4>& v, double& value) {
    double c = cell_integral(v, coarse);
    value = cell_integral(v, fine);
    return std::abs(value - c);
  };

  std::uint64_t next_id = 0;
  auto cmp = [](const Cell& a, const Cell& b) {
    if (a.err != b.err) return a.err < b.err;
    return a.id > b.id;
  };
  std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> heap(cmp);

  Cell root;
  root.v = k.v;
  root.err = estimate(root.v, root.value);
  root.id = next_id++;
  double total_err = root.err;
  heap.push(root);

  const std::uint64_t kMaxCells = 400000;
  while (total_err > tol) {
    if (heap.empty() || next_id > kMaxCells)
      throw convergence_error("numeric_volume: refinement limit reached");
    Cell worst = heap.top();
    heap.pop();
    total_err -= worst.err;
    for (const auto& child_v : octasect(worst.v)) {
      Cell child;
      child.v = child_v;
      child.err = estimate(child.v, child.value);
      child.id = next_id++;
      total_err += child.err;
      heap.push(child);
    }
  }

  // deterministic summation: drain and sort by creation index
  std::vector<Cell> cells;
  cells.reserve(heap.size());
  while (!heap.empty()) {
    cells.push_back(heap.top());
    heap.pop();
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return a.id < b.id; });
  double sum = 0.0, comp = 0.0;
  for (const auto& c : cells) {  // Kahan
    double y = c.value - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double numeric_volume_mc(const KleinTet& k, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double vol = euclid_vol(k.v);
  double acc = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    double s = u(rng), t = u(rng), w = u(rng);
    // fold the cube into barycentric coordinates (uniform on the simplex)
    if (s + t > 1.0) {
      s = 1.0 - s;
      t = 1.0 - t;
    }
    if (t + w > 1.0) {
      double tmp = w;
      w = 1.0 - s - t;
      t = 1.0 - tmp;
    } else if (s + t + w > 1.0) {
      double tmp = w;
      w = s + t + w - 1.0;
      s = 1.0 - t - tmp;
    }
    double x0 = 1.0 - s - t - w;
    Vec3 p{x0 * k.v[0].x + s * k.v[1].x + t * k.v[2].x + w * k.v[3].x,
           x0 * k.v[0].y + s * k.v[1].y + t * k.v[2].y + w * k.v[3].y,
           x0 * k.v[0].z + s * k.v[1].z + t * k.v[2].z + w * k.v[3].z};
    acc += density(p);
  }
  return vol * acc / double(samples);
}

}  // namespace hyptet
