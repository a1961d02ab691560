#include "fanob/numeric.hpp"

#include <sstream>

namespace fanob {

Int primitive_index(const LatVec& v) {
  Int g = 0;
  for (const Int& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

LatVec primitivize(const LatVec& v) {
  Int g = primitive_index(v);
  if (g == 0) throw std::invalid_argument("no primitive direction");
  LatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

Int order2(const LatVec& u, const LatVec& v) {
  if (u.size() != 2 || v.size() != 2)
    throw DimensionMismatch("order2 requires 2-dimensional vectors");
  return u[0] * v[1] - u[1] * v[0];
}

Int det_n(const IntMat& rows) {
  const size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n) throw DimensionMismatch("det_n: matrix not square");
  if (n == 0) return 1;
  IntMat m = rows;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rat det_rat(RatMat m) {
  const size_t n = m.size();
  Rat det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[k], m[piv]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

int rank_rat(RatMat m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

RatMat inverse_rat(const RatMat& m) {
  const size_t n = m.size();
  RatMat a = m;
  RatMat inv(n, RatVec(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("inverse_rat: singular matrix");
    std::swap(a[k], a[piv]);
    std::swap(inv[k], inv[piv]);
    Rat p = a[k][k];
    for (size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

UnimodularMap::UnimodularMap(IntMat mat) : m(std::move(mat)) {
  Int d = det_n(m);
  if (d != 1 && d != -1)
    throw std::invalid_argument("UnimodularMap: determinant must be +-1");
}

LatVec apply_map(const UnimodularMap& u, const LatVec& v) {
  if (v.size() != u.m.size())
    throw DimensionMismatch("apply_map: dimension mismatch");
  LatVec out(v.size(), 0);
  for (size_t i = 0; i < u.m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += u.m[i][j] * v[j];
  return out;
}

RatVec apply_map_rat(const UnimodularMap& u, const RatVec& v) {
  if (v.size() != u.m.size())
    throw DimensionMismatch("apply_map_rat: dimension mismatch");
  RatVec out(v.size(), Rat(0));
  for (size_t i = 0; i < u.m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += Rat(u.m[i][j]) * v[j];
  return out;
}

UnimodularMap compose(const UnimodularMap& a, const UnimodularMap& b) {
  const size_t n = a.m.size();
  IntMat out(n, LatVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) out[i][j] += a.m[i][k] * b.m[k][j];
  return UnimodularMap(out);
}

IntMat hermite_form(IntMat m) {
  if (m.empty()) return m;
  const size_t rows = m.size(), cols = m[0].size();
  size_t pr = 0;
  for (size_t col = 0; col < cols && pr < rows; ++col) {
    size_t piv = pr;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    for (size_t r = pr + 1; r < rows; ++r) {
      // Euclidean elimination within the column
      while (m[r][col] != 0) {
        Int q = m[pr][col] / m[r][col];  // truncated division is fine here
        for (size_t c = 0; c < cols; ++c) m[pr][c] -= q * m[r][c];
        std::swap(m[pr], m[r]);
      }
    }
    if (m[pr][col] < 0)
      for (size_t c = 0; c < cols; ++c) m[pr][c] = -m[pr][c];
    for (size_t r = 0; r < pr; ++r) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[pr][col].get_mpz_t());
      if (q != 0)
        for (size_t c = 0; c < cols; ++c) m[r][c] -= q * m[pr][c];
    }
    ++pr;
  }
  return m;
}

LatVec add(const LatVec& a, const LatVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: dimension mismatch");
  LatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

LatVec neg(const LatVec& a) {
  LatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const LatVec& a) {
  for (const Int& c : a)
    if (c != 0) return false;
  return true;
}

RatVec to_rat(const LatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

LatVec primitive_direction(const RatVec& v) {
  Int den = 1;
  for (const Rat& c : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  LatVec scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(den);
    scaled[i] = s.get_num();  // exact: denominator cleared
  }
  return primitivize(scaled);
}

std::string vec_to_string(const LatVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string vec_to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace fanob
