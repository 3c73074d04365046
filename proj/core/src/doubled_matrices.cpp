#include "liftable/analysis.hpp"
#include "liftable/residue.hpp"

namespace liftable {

namespace {

Matrix4 identity4() {
  Matrix4 m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 c{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t t = 0; t < 4; ++t) c[i][j] += a[i][t] * b[t][j];
  return c;
}

Matrix4 transpose(const Matrix4& a) {
  Matrix4 t{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

Matrix4 power(const Matrix4& a, int e) {
  Matrix4 r = identity4();
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

std::int64_t det3(const Matrix4& m, std::size_t skip_r, std::size_t skip_c) {
  std::array<std::array<std::int64_t, 3>, 3> s{};
  for (std::size_t i = 0, si = 0; i < 4; ++i) {
    if (i == skip_r) continue;
    for (std::size_t j = 0, sj = 0; j < 4; ++j) {
      if (j == skip_c) continue;
      s[si][sj++] = m[i][j];
    }
    ++si;
  }
  return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
         s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
}

// Adjugate over the determinant; the matrices here are unimodular.
Matrix4 inverse(const Matrix4& m) {
  std::int64_t det = 0;
  for (std::size_t j = 0; j < 4; ++j) det += (j % 2 ? -1 : 1) * m[0][j] * det3(m, 0, j);
  Matrix4 inv{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) inv[j][i] = ((i + j) % 2 ? -1 : 1) * det3(m, i, j) / det;
  return inv;
}

}  // namespace

const DoubledMatrices& doubled_matrices() {
  static const DoubledMatrices m{
      {{{0, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, -1, 0}}},
      {{{0, -2, -2, -1}, {2, 2, 1, 2}, {-2, -1, 0, -2}, {1, 2, 2, 2}}},
      {{{0, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      {{{0, 0, -1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{2, 1, 0, 2}, {-1, -2, -2, -2}, {0, 2, 2, 1}, {-2, -2, -1, -2}}},
      {{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}},
  };
  return m;
}

MatrixVerification verify_doubled_matrices() {
  const auto& m = doubled_matrices();
  const Matrix4 &f = m.f, &g1 = m.g1, &g2 = m.g2, &g = m.g, &g3 = m.g3;
  const Matrix4 id = identity4();
  const Matrix4 fi = inverse(f), g1i = inverse(g1), g3i = inverse(g3);

  MatrixVerification v;
  const auto check = [&](std::string rel, bool ok) { v.checks.push_back({std::move(rel), ok}); };
  check("F^6 = 1", power(f, 6) == id);
  check("[G1,F] = 1", g1 * f == f * g1);
  check("[G2,F] = 1", g2 * f == f * g2);
  check("G3*F*G3^-1 = F^-1", g3 * f * g3i == fi);
  check("G3 = G1*G", g3 == g1 * g);
  check("G1^2 = G3^2", g1 * g1 == g3 * g3);
  check("[G1,G3] = 1", g1 * g3 == g3 * g1);
  check("(G1*G2)^2 = F^4", power(g1 * g2, 2) == power(f, 4));
  check("(G3*G2)^2 = F^3", power(g3 * g2, 2) == power(f, 3));
  const std::array<std::pair<const char*, const Matrix4*>, 5> all{
      {{"F", &f}, {"G1", &g1}, {"G2", &g2}, {"G", &g}, {"G3", &g3}}};
  for (const auto& [name, mat] : all) {
    check(std::string("symplectic ") + name, transpose(*mat) * m.form * *mat == m.form);
  }

  const auto exponent = [&](const Matrix4& x) -> std::optional<std::int64_t> {
    for (int e = 0; e < 6; ++e) {
      if (x == power(f, e)) return e;
    }
    return std::nullopt;
  };
  const auto reading = [&](std::string name, std::string rel, const Matrix4& x, std::int64_t stated) {
    ExponentReading r{std::move(name), std::move(rel), exponent(x), stated, false};
    r.agrees = r.computed && *r.computed == mod(stated, 6);
    v.exponents.push_back(std::move(r));
  };
  reading("i1", "G1*F*G1^-1", g1 * f * g1i, 1);
  reading("i2", "G2*F*G2^-1", g2 * f * inverse(g2), 1);
  reading("i3", "G3*F*G3^-1", g3 * f * g3i, -1);
  reading("i4", "G1^2*G3^-2", g1 * g1 * g3i * g3i, 1);
  reading("i5", "[G1,G3]", g1 * g3 * g1i * g3i, 1);
  reading("i6", "(G1*G2)^2", power(g1 * g2, 2), 4);
  reading("i7", "(G3*G2)^2", power(g3 * g2, 2), 3);

  v.all_relations_hold = std::all_of(v.checks.begin(), v.checks.end(), [](const MatrixCheck& c) { return c.holds; });
  return v;
}

}  // namespace liftable
