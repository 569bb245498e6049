#include "manin/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace manin {

namespace {

void require_length(std::span<const Integer> v, std::size_t d, const char* what) {
  if (v.size() != d) {
    std::ostringstream os;
    os << what << ": vector of length " << v.size() << " in ambient dimension " << d;
    throw DimensionError(os.str());
  }
}

void require_same_ambient(const EchelonBasis& a, const EchelonBasis& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    std::ostringstream os;
    os << what << ": ambient dimensions " << a.ambient_dim() << " and " << b.ambient_dim();
    throw DimensionError(os.str());
  }
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

// Divides by the (positive) content; the sign of the row is kept.
void cancel_content(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<std::size_t> support(const IntVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) out.push_back(j);
  }
  return out;
}

// target <- (p/g) target - (t/g) pivot with p = pivot[c], t = target[c];
// `nonzero` lists the support of the pivot row.
void eliminate(IntVector& target, const IntVector& pivot, std::size_t c, std::span<const std::size_t> nonzero) {
  if (sgn(target[c]) == 0) return;
  Integer g = gcd(pivot[c], target[c]);
  Integer fp = pivot[c] / g;
  Integer ft = target[c] / g;
  if (sgn(fp) < 0) {
    fp = -fp;
    ft = -ft;
  }
  if (fp != 1) {
    for (auto& x : target) {
      if (sgn(x) != 0) x *= fp;
    }
  }
  for (std::size_t j : nonzero) mpz_submul(target[j].get_mpz_t(), ft.get_mpz_t(), pivot[j].get_mpz_t());
  cancel_content(target);
}

void eliminate(IntVector& target, const IntVector& pivot, std::size_t c) {
  if (sgn(target[c]) == 0) return;
  Integer g = gcd(pivot[c], target[c]);
  Integer fp = pivot[c] / g;
  Integer ft = target[c] / g;
  if (sgn(fp) < 0) {
    fp = -fp;
    ft = -ft;
  }
  const bool scale = fp != 1;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (scale && sgn(target[j]) != 0) target[j] *= fp;
    if (sgn(pivot[j]) != 0) mpz_submul(target[j].get_mpz_t(), ft.get_mpz_t(), pivot[j].get_mpz_t());
  }
  cancel_content(target);
}

// Forward elimination restricted to columns [0, limit): afterwards the rows
// past the returned count vanish on those columns.
std::size_t forward_eliminate(std::vector<IntVector>& work, std::size_t limit) {
  std::size_t next = 0;
  for (std::size_t c = 0; c < limit && next < work.size(); ++c) {
    std::size_t best = work.size();
    for (std::size_t i = next; i < work.size(); ++i) {
      if (sgn(work[i][c]) == 0) continue;
      if (best == work.size() || mpz_cmpabs(work[i][c].get_mpz_t(), work[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == work.size()) continue;
    std::swap(work[next], work[best]);
    const auto nonzero = support(work[next]);
    for (std::size_t i = next + 1; i < work.size(); ++i) eliminate(work[i], work[next], c, nonzero);
    ++next;
  }
  return next;
}

// Orthogonal component of v relative to mutually orthogonal rows `basis`:
// v <- <u,u> v - <u,v> u for each u, cancelling content after every step.
IntVector orthogonal_component(IntVector v, const std::vector<IntVector>& basis) {
  for (const auto& u : basis) {
    Integer uv = dot(u, v);
    if (sgn(uv) == 0) continue;
    Integer uu = dot(u, u);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = uu * v[j] - uv * u[j];
    cancel_content(v);
  }
  return v;
}

IntVector unit_vector(std::size_t d, std::size_t k) {
  IntVector e(d);
  e[k] = 1;
  return e;
}

}  // namespace

IntVector content_normalize(IntVector v) {
  cancel_content(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (lead != v.end() && sgn(*lead) < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return content_normalize(std::move(out));
}

QVector to_rational(std::span<const Integer> v) {
  return QVector(v.begin(), v.end());
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    auto it = std::find_if(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; });
    out.push_back(static_cast<std::size_t>(it - r.begin()));
  }
  return out;
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw Error("SignVector entries must be +1 or -1");
  }
}

EchelonBasis echelonize(std::span<const IntVector> rows, std::size_t d) {
  return echelonize(std::vector<IntVector>(rows.begin(), rows.end()), d);
}

EchelonBasis echelonize(std::vector<IntVector>&& rows, std::size_t d) {
  std::vector<IntVector> work;
  work.reserve(rows.size());
  for (auto& r : rows) {
    require_length(r, d, "echelonize");
    if (!is_zero(r)) work.push_back(std::move(r));
  }

  std::size_t next = 0;
  for (std::size_t c = 0; c < d && next < work.size(); ++c) {
    // smallest nonzero entry in column c keeps the multipliers small
    std::size_t best = work.size();
    for (std::size_t i = next; i < work.size(); ++i) {
      if (sgn(work[i][c]) == 0) continue;
      if (best == work.size() || mpz_cmpabs(work[i][c].get_mpz_t(), work[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == work.size()) continue;
    std::swap(work[next], work[best]);
    work[next] = content_normalize(std::move(work[next]));
    const auto nonzero = support(work[next]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i != next) eliminate(work[i], work[next], c, nonzero);
    }
    ++next;
  }
  work.resize(next);
  for (auto& r : work) r = content_normalize(std::move(r));
  return EchelonBasis(d, std::move(work));
}

EchelonBasis echelonize(const IntMatrix& m) {
  std::vector<IntVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return echelonize(std::move(rows), m.cols());
}

bool span_contains(const EchelonBasis& basis, std::span<const Integer> v) {
  require_length(v, basis.ambient_dim(), "span_contains");
  IntVector r(v.begin(), v.end());
  for (const auto& row : basis.rows()) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0) ++c;
    eliminate(r, row, c);
  }
  return is_zero(r);
}

bool span_equal(const EchelonBasis& a, const EchelonBasis& b) {
  require_same_ambient(a, b, "span_equal");
  return a.rows() == b.rows();
}

EchelonBasis sum_spaces(const EchelonBasis& a, const EchelonBasis& b) {
  require_same_ambient(a, b, "sum_spaces");
  std::vector<IntVector> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return echelonize(std::move(rows), a.ambient_dim());
}

EchelonBasis intersect(const EchelonBasis& a, const EchelonBasis& b) {
  require_same_ambient(a, b, "intersect");
  const std::size_t d = a.ambient_dim();
  std::vector<IntVector> doubled;
  doubled.reserve(a.dim() + b.dim());
  for (const auto& r : a.rows()) {
    IntVector row(2 * d);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + static_cast<std::ptrdiff_t>(d));
    doubled.push_back(std::move(row));
  }
  for (const auto& r : b.rows()) {
    IntVector row(2 * d);
    std::copy(r.begin(), r.end(), row.begin());
    doubled.push_back(std::move(row));
  }
  const std::size_t left_rank = forward_eliminate(doubled, d);
  std::vector<IntVector> right;
  for (std::size_t i = left_rank; i < doubled.size(); ++i) {
    const auto& r = doubled[i];
    right.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(d), r.end());
  }
  return echelonize(std::move(right), d);
}

EchelonBasis kernel(const IntMatrix& m) {
  const std::size_t d = m.cols();
  const EchelonBasis reduced = echelonize(m);
  const auto piv = reduced.pivots();
  std::vector<bool> is_pivot(d, false);
  for (auto c : piv) is_pivot[c] = true;

  std::vector<IntVector> null_vectors;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    Integer l = 1;
    for (std::size_t i = 0; i < reduced.dim(); ++i) {
      if (sgn(reduced.row(i)[f]) != 0) l = lcm(l, reduced.row(i)[piv[i]]);
    }
    IntVector v(d);
    v[f] = l;
    for (std::size_t i = 0; i < reduced.dim(); ++i) {
      const auto& r = reduced.row(i);
      if (sgn(r[f]) != 0) v[piv[i]] = -r[f] * (l / r[piv[i]]);
    }
    null_vectors.push_back(std::move(v));
  }
  return echelonize(std::move(null_vectors), d);
}

std::size_t rank(const IntMatrix& m) {
  return echelonize(m).dim();
}

IntVector kron(std::span<const Integer> u, std::span<const Integer> v) {
  IntVector out;
  out.reserve(u.size() * v.size());
  for (const auto& x : u)
    for (const auto& y : v) out.push_back(x * y);
  return out;
}

QVector kron(std::span<const Rational> u, std::span<const Rational> v) {
  QVector out;
  out.reserve(u.size() * v.size());
  for (const auto& x : u)
    for (const auto& y : v) out.push_back(x * y);
  return out;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

EchelonBasis signed_complement(const EchelonBasis& a, const SignVector& s, ComplementMethod method) {
  const std::size_t d = a.ambient_dim();
  if (s.size() != d) {
    std::ostringstream os;
    os << "signed_complement: sign vector of length " << s.size() << " in ambient dimension " << d;
    throw DimensionError(os.str());
  }

  std::vector<IntVector> twisted;
  twisted.reserve(a.dim());
  for (const auto& r : a.rows()) {
    IntVector t = r;
    for (std::size_t k = 0; k < d; ++k) {
      if (s[k] < 0) t[k] = -t[k];
    }
    twisted.push_back(std::move(t));
  }

  if (method == ComplementMethod::kernel) {
    IntMatrix m(twisted.size(), d);
    for (std::size_t i = 0; i < twisted.size(); ++i)
      std::copy(twisted[i].begin(), twisted[i].end(), m.row(i).begin());
    return kernel(m);
  }

  std::vector<IntVector> orthogonal;
  for (auto& t : twisted) {
    IntVector u = orthogonal_component(std::move(t), orthogonal);
    if (!is_zero(u)) orthogonal.push_back(std::move(u));
  }
  std::vector<IntVector> components;
  for (std::size_t k = 0; k < d; ++k) {
    IntVector c = orthogonal_component(unit_vector(d, k), orthogonal);
    if (!is_zero(c)) components.push_back(std::move(c));
  }
  return echelonize(std::move(components), d);
}

IntMatrix quotient_coords(const EchelonBasis& r) {
  const std::size_t d = r.ambient_dim();
  const auto piv = r.pivots();
  std::vector<std::ptrdiff_t> pivot_row(d, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<std::ptrdiff_t>(i);

  std::vector<std::size_t> free_cols;
  for (std::size_t k = 0; k < d; ++k) {
    if (pivot_row[k] < 0) free_cols.push_back(k);
  }
  Integer l = 1;
  for (std::size_t i = 0; i < r.dim(); ++i) l = lcm(l, r.row(i)[piv[i]]);

  IntMatrix q(free_cols.size(), d);
  for (std::size_t k = 0; k < d; ++k) {
    if (pivot_row[k] < 0) {
      auto t = std::lower_bound(free_cols.begin(), free_cols.end(), k) - free_cols.begin();
      q(static_cast<std::size_t>(t), k) = l;
      continue;
    }
    const auto& row = r.row(static_cast<std::size_t>(pivot_row[k]));
    const Integer scale = l / row[k];
    for (std::size_t t = 0; t < free_cols.size(); ++t) q(t, k) = -row[free_cols[t]] * scale;
  }
  return q;
}

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v) {
  require_length(v, m.cols(), "mat_vec");
  IntVector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

std::optional<QMatrix> invert(const QMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  QMatrix work = a;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(work(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(p, j), work(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational pivot = work(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(work(i, c)) == 0) continue;
      const Rational f = work(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_integral(const QMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& x : a.row(i)) {
      if (x.get_den() != 1) return false;
    }
  return true;
}

Integer dot(std::span<const Integer> u, std::span<const Integer> v) {
  if (u.size() != v.size()) throw DimensionError("dot: length mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) != 0 && sgn(v[i]) != 0) acc += u[i] * v[i];
  }
  return acc;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace manin
