#include "manin/operad.hpp"

#include <sstream>
#include <utility>

namespace manin {

struct PresentationAccess {
  static OperadPresentation make(std::size_t n, QMatrix action, EchelonBasis relations, std::string label) {
    return OperadPresentation(n, std::move(action), std::move(relations), std::move(label));
  }
};

namespace {

std::size_t block_of(Coset c) { return static_cast<std::size_t>(c); }

void require_e3_length(std::size_t n, std::size_t len, const char* what) {
  if (len != e3_dim(n)) {
    std::ostringstream os;
    os << what << ": vector of length " << len << ", expected 3n^2 = " << e3_dim(n);
    throw DimensionError(os.str());
  }
}

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j);
  return q;
}

// Integer matrix m and positive l with action = m / l.
std::pair<IntMatrix, Integer> scaled_integral(const QMatrix& action) {
  Integer l = 1;
  for (std::size_t i = 0; i < action.rows(); ++i)
    for (const auto& x : action.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntMatrix m(action.rows(), action.cols());
  for (std::size_t i = 0; i < action.rows(); ++i)
    for (std::size_t j = 0; j < action.cols(); ++j) m(i, j) = action(i, j).get_num() * (l / action(i, j).get_den());
  return {std::move(m), std::move(l)};
}

// l times the image of v under sigma, for action = m / l.
IntVector scaled_act(const IntMatrix& m, const Integer& l, const Perm3& sigma, std::span<const Integer> v) {
  const std::size_t n = m.rows();
  IntVector out(v.size());
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (sgn(v[pos]) == 0) continue;
    const E3Index b = E3Index::from_flat(n, pos);
    const CosetDecomposition d = coset_decompose(sigma * representative(b.rho));
    if (!d.swapped) {
      mpz_addmul(out[E3Index{d.rep, b.p, b.q}.flat(n)].get_mpz_t(), v[pos].get_mpz_t(), l.get_mpz_t());
      continue;
    }
    for (std::size_t t = 1; t <= n; ++t) {
      const Integer& x = m(b.q - 1, t - 1);
      if (sgn(x) != 0) mpz_addmul(out[E3Index{d.rep, b.p, t}.flat(n)].get_mpz_t(), v[pos].get_mpz_t(), x.get_mpz_t());
    }
  }
  return out;
}

}  // namespace

std::size_t E3Index::flat(std::size_t n) const {
  return block_of(rho) * n * n + (p - 1) * n + (q - 1);
}

E3Index E3Index::from_flat(std::size_t n, std::size_t position) {
  if (n == 0 || position >= e3_dim(n)) throw DimensionError("E3Index: position out of range");
  const std::size_t nn = n * n;
  const std::size_t in_block = position % nn;
  return {kCosets[position / nn], in_block / n + 1, in_block % n + 1};
}

OperadPresentation OperadPresentation::with_label(std::string label) const {
  OperadPresentation copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

QVector s3_act(const QMatrix& action, const Perm3& sigma, std::span<const Rational> v) {
  const std::size_t n = action.rows();
  require_e3_length(n, v.size(), "s3_act");
  QVector out(v.size());
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (sgn(v[pos]) == 0) continue;
    const E3Index b = E3Index::from_flat(n, pos);
    const CosetDecomposition d = coset_decompose(sigma * representative(b.rho));
    if (!d.swapped) {
      out[E3Index{d.rep, b.p, b.q}.flat(n)] += v[pos];
      continue;
    }
    for (std::size_t t = 1; t <= n; ++t) {
      const Rational& m = action(b.q - 1, t - 1);
      if (sgn(m) != 0) out[E3Index{d.rep, b.p, t}.flat(n)] += v[pos] * m;
    }
  }
  return out;
}

QVector s3_act(const OperadPresentation& p, const Perm3& sigma, std::span<const Rational> v) {
  return s3_act(p.action(), sigma, v);
}

IntVector s3_act(const OperadPresentation& p, const Perm3& sigma, std::span<const Integer> v) {
  const QVector image = s3_act(p.action(), sigma, manin::to_rational(v));
  IntVector out;
  out.reserve(image.size());
  for (const auto& x : image) {
    if (x.get_den() != 1) throw Error("s3_act: image is not integral under a rational action");
    out.push_back(x.get_num());
  }
  return out;
}

EchelonBasis s3_closure(const QMatrix& action, std::span<const IntVector> rows) {
  const std::size_t d = e3_dim(action.rows());
  for (const auto& r : rows) require_e3_length(action.rows(), r.size(), "s3_closure");
  const auto [m, l] = scaled_integral(action);
  EchelonBasis basis = echelonize(rows, d);
  const std::array<Perm3, 2> generators{Perm3::t12(), Perm3::t13()};
  for (;;) {
    std::vector<IntVector> extended = basis.rows();
    for (const auto& r : basis.rows()) {
      for (const auto& g : generators) {
        IntVector image = scaled_act(m, l, g, r);
        if (!span_contains(basis, image)) extended.push_back(std::move(image));
      }
    }
    if (extended.size() == basis.dim()) return basis;
    basis = echelonize(std::move(extended), d);
  }
}

Validation validate_presentation(std::size_t n, const QMatrix& action, std::span<const IntVector> rows,
                                 std::string label) {
  if (action.rows() != n || action.cols() != n) {
    std::ostringstream os;
    os << "action matrix is " << action.rows() << "x" << action.cols() << ", expected " << n << "x" << n;
    throw InvalidActionError(os.str());
  }
  if (!(multiply(action, action) == QMatrix::identity(n))) {
    throw InvalidActionError("action of (12) is not an involution: M*M != I");
  }
  for (const auto& r : rows) require_e3_length(n, r.size(), "relation row");

  const std::size_t supplied = echelonize(rows, e3_dim(n)).dim();
  EchelonBasis closed = s3_closure(action, rows);
  return {PresentationAccess::make(n, action, std::move(closed), std::move(label)), supplied};
}

Validation validate_presentation(std::size_t n, const IntMatrix& action, std::span<const IntVector> rows,
                                 std::string label) {
  return validate_presentation(n, to_rational(action), rows, std::move(label));
}

std::vector<IntVector> orbit_generators(const OperadPresentation& p) {
  std::vector<IntVector> generators;
  EchelonBasis covered(e3_dim(p.n()));
  for (const auto& r : p.relations().rows()) {
    if (covered.dim() == p.relations().dim()) break;
    if (span_contains(covered, r)) continue;
    generators.push_back(r);
    covered = s3_closure(p.action(), generators);
  }
  return generators;
}

std::size_t dim_space3(const OperadPresentation& p) {
  return e3_dim(p.n()) - p.relations().dim();
}

OperadPresentation change_basis(const OperadPresentation& p, const QMatrix& b) {
  const std::size_t n = p.n();
  if (b.rows() != n || b.cols() != n) throw DimensionError("change_basis: matrix size differs from n");
  const auto b_inv = invert(b);
  if (!b_inv) throw SingularMatrixError("change_basis: matrix is singular");

  QMatrix action = multiply(multiply(b, p.action()), *b_inv);

  // e_p = sum_i Binv[p][i] e'_i, so v'(rho,i,j) = sum_{p,q} v(rho,p,q) Binv[p][i] Binv[q][j].
  std::vector<IntVector> rows;
  for (const auto& r : p.relations().rows()) {
    QVector out(r.size());
    for (Coset rho : kCosets) {
      for (std::size_t pp = 1; pp <= n; ++pp)
        for (std::size_t qq = 1; qq <= n; ++qq) {
          const Integer& c = r[E3Index{rho, pp, qq}.flat(n)];
          if (sgn(c) == 0) continue;
          for (std::size_t i = 1; i <= n; ++i) {
            const Rational& bi = (*b_inv)(pp - 1, i - 1);
            if (sgn(bi) == 0) continue;
            for (std::size_t j = 1; j <= n; ++j) {
              out[E3Index{rho, i, j}.flat(n)] += c * bi * (*b_inv)(qq - 1, j - 1);
            }
          }
        }
    }
    rows.push_back(clear_denominators(out));
  }
  return validate_presentation(n, action, rows, p.label()).presentation;
}

bool equal_presentation(const OperadPresentation& a, const OperadPresentation& b) {
  return a.n() == b.n() && a.action() == b.action() && span_equal(a.relations(), b.relations());
}

std::vector<MonomialTerm> monomial_terms(const OperadPresentation& p, std::span<const Integer> v) {
  require_e3_length(p.n(), v.size(), "monomial_terms");
  std::vector<MonomialTerm> terms;
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (sgn(v[pos]) == 0) continue;
    const E3Index b = E3Index::from_flat(p.n(), pos);
    terms.push_back({v[pos], b.p, b.q, representative(b.rho).image()});
  }
  return terms;
}

std::vector<std::string> default_symbols(std::size_t n) {
  if (n == 1) return {"*"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("*" + std::to_string(i));
  return out;
}

std::string monomial_render(const OperadPresentation& p, std::span<const Integer> v,
                            const std::vector<std::string>& symbols) {
  if (symbols.size() != p.n()) throw DimensionError("monomial_render: need one symbol per operation");
  const auto terms = monomial_terms(p, v);
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Integer magnitude = abs(t.coefficient);
    if (magnitude != 1) os << magnitude << ' ';
    os << "(x" << t.variables[0] << ' ' << symbols[t.inner_op - 1] << " x" << t.variables[1] << ") "
       << symbols[t.outer_op - 1] << " x" << t.variables[2];
    first = false;
  }
  return os.str();
}

std::string monomial_render(const OperadPresentation& p, std::span<const Integer> v) {
  return monomial_render(p, v, default_symbols(p.n()));
}

}  // namespace manin
