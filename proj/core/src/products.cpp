#include "manin/products.hpp"

#include <vector>

namespace manin {

namespace {

std::string join_label(const std::string& a, const char* op, const std::string& b) {
  return "(" + (a.empty() ? "?" : a) + op + (b.empty() ? "?" : b) + ")";
}

}  // namespace

std::size_t tau_position(std::size_t n1, std::size_t n2, std::size_t position) {
  const std::size_t n = n1 * n2;
  const E3Index b = E3Index::from_flat(n, position);
  const std::size_t i = (b.p - 1) / n2 + 1, k = (b.p - 1) % n2 + 1;
  const std::size_t j = (b.q - 1) / n2 + 1, l = (b.q - 1) % n2 + 1;
  const std::size_t f1 = E3Index{b.rho, i, j}.flat(n1);
  const std::size_t f2 = E3Index{b.rho, k, l}.flat(n2);
  return f1 * e3_dim(n2) + f2;
}

IntVector tau_embed(std::size_t n1, std::size_t n2, std::span<const Integer> v) {
  const std::size_t n = n1 * n2;
  if (v.size() != e3_dim(n)) throw DimensionError("tau_embed: vector length is not 3(n1 n2)^2");
  IntVector out(e3_dim(n1) * e3_dim(n2));
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (sgn(v[pos]) != 0) out[tau_position(n1, n2, pos)] = v[pos];
  }
  return out;
}

SignVector koszul_signs(std::size_t n) {
  std::vector<int> s(e3_dim(n), -1);
  for (std::size_t i = 0; i < n * n; ++i) s[i] = 1;
  return SignVector(std::move(s));
}

EchelonBasis white_relations_by_intersection(const OperadPresentation& p1, const OperadPresentation& p2) {
  const std::size_t n1 = p1.n(), n2 = p2.n(), n = n1 * n2;
  const std::size_t d1 = e3_dim(n1), d2 = e3_dim(n2), big = d1 * d2;
  if (n == 0) return EchelonBasis(0);

  // K = R1 (x) E2(3) + E1(3) (x) R2
  std::vector<IntVector> spanning;
  spanning.reserve(p1.relations().dim() * d2 + d1 * p2.relations().dim());
  for (const auto& r : p1.relations().rows()) {
    for (std::size_t b = 0; b < d2; ++b) {
      IntVector v(big);
      for (std::size_t f1 = 0; f1 < d1; ++f1) v[f1 * d2 + b] = r[f1];
      spanning.push_back(std::move(v));
    }
  }
  for (std::size_t a = 0; a < d1; ++a) {
    for (const auto& r : p2.relations().rows()) {
      IntVector v(big);
      std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(a * d2));
      spanning.push_back(std::move(v));
    }
  }
  const EchelonBasis k = echelonize(std::move(spanning), big);

  std::vector<std::size_t> positions(e3_dim(n));
  std::vector<IntVector> diagonal;
  diagonal.reserve(positions.size());
  for (std::size_t pos = 0; pos < positions.size(); ++pos) {
    positions[pos] = tau_position(n1, n2, pos);
    IntVector e(big);
    e[positions[pos]] = 1;
    diagonal.push_back(std::move(e));
  }
  const EchelonBasis image_of_tau = echelonize(std::move(diagonal), big);

  const EchelonBasis meet = intersect(k, image_of_tau);
  std::vector<IntVector> pulled;
  pulled.reserve(meet.dim());
  for (const auto& r : meet.rows()) {
    IntVector w(positions.size());
    for (std::size_t pos = 0; pos < positions.size(); ++pos) w[pos] = r[positions[pos]];
    pulled.push_back(std::move(w));
  }
  return echelonize(std::move(pulled), e3_dim(n));
}

EchelonBasis white_relations_by_kernel(const OperadPresentation& p1, const OperadPresentation& p2) {
  const std::size_t n1 = p1.n(), n2 = p2.n(), n = n1 * n2;
  if (n == 0) return EchelonBasis(0);
  const IntMatrix q1 = quotient_coords(p1.relations());
  const IntMatrix q2 = quotient_coords(p2.relations());
  const std::size_t d2 = e3_dim(n2);

  IntMatrix composite(q1.rows() * q2.rows(), e3_dim(n));
  for (std::size_t pos = 0; pos < composite.cols(); ++pos) {
    const std::size_t t = tau_position(n1, n2, pos);
    const std::size_t f1 = t / d2, f2 = t % d2;
    for (std::size_t a = 0; a < q1.rows(); ++a) {
      if (sgn(q1(a, f1)) == 0) continue;
      for (std::size_t b = 0; b < q2.rows(); ++b) composite(a * q2.rows() + b, pos) = q1(a, f1) * q2(b, f2);
    }
  }
  return kernel(composite);
}

OperadPresentation white(const OperadPresentation& p1, const OperadPresentation& p2) {
  EchelonBasis relations = white_relations_by_intersection(p1, p2);
  if (!(relations == white_relations_by_kernel(p1, p2))) {
    throw InternalError("white product: intersection and kernel routes disagree");
  }
  const std::size_t n = p1.n() * p2.n();
  Validation v = validate_presentation(n, kron(p1.action(), p2.action()), relations.rows(),
                                       join_label(p1.label(), " o ", p2.label()));
  if (v.closure_enlarged()) throw InternalError("white product: relations are not S3-invariant");
  return std::move(v.presentation);
}

OperadPresentation koszul_dual(const OperadPresentation& p) {
  QMatrix action = transpose(p.action());
  for (std::size_t i = 0; i < action.rows(); ++i)
    for (auto& x : action.row(i)) x = -x;
  const EchelonBasis perp = signed_complement(p.relations(), koszul_signs(p.n()));
  Validation v = validate_presentation(p.n(), action, perp.rows(), p.label().empty() ? "" : p.label() + "^!");
  if (v.closure_enlarged()) throw InternalError("koszul dual: annihilator is not S3-invariant");
  return std::move(v.presentation);
}

OperadPresentation black(const OperadPresentation& p1, const OperadPresentation& p2) {
  return koszul_dual(white(koszul_dual(p1), koszul_dual(p2))).with_label(join_label(p1.label(), " * ", p2.label()));
}

QMatrix factor_swap_matrix(std::size_t n1, std::size_t n2) {
  QMatrix b(n1 * n2, n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t k = 0; k < n2; ++k) b(i * n2 + k, k * n1 + i) = 1;
  return b;
}

}  // namespace manin
