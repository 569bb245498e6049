#pragma once

// Binary quadratic operads P(E, R) and the S3-module E(3).
//
// E(3) = k S3 (x)_{k S2} (E (x) E) is stored as three copies of E (x) E,
// one per coset representative id, (13), (23). The basis element
// (rho, p, q) stands for rho (x) (e_p (x) e_q) and reads as the monomial
// (x_rho(1) *_q x_rho(2)) *_p x_rho(3); its flat position is
// block(rho) * n^2 + (p-1) * n + (q-1), zero-based.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "manin/exactlin.hpp"
#include "manin/perm3.hpp"

namespace manin {

class InvalidActionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

inline std::size_t e3_dim(std::size_t n) { return 3 * n * n; }

/// Basis label of E(3); p and q are 1-based generator indices.
struct E3Index {
  Coset rho = Coset::id;
  std::size_t p = 1;
  std::size_t q = 1;

  std::size_t flat(std::size_t n) const;
  static E3Index from_flat(std::size_t n, std::size_t position);

  friend bool operator==(const E3Index&, const E3Index&) = default;
};

/// A binary quadratic operad presented by generators and relations.
/// Row i of action() holds the coordinates of e_i^(12); relations() is an
/// S3-invariant subspace of E(3).
class OperadPresentation {
 public:
  OperadPresentation() = default;

  std::size_t n() const { return n_; }
  const QMatrix& action() const { return action_; }
  const EchelonBasis& relations() const { return relations_; }
  const std::string& label() const { return label_; }

  OperadPresentation with_label(std::string label) const;

 private:
  friend struct PresentationAccess;
  OperadPresentation(std::size_t n, QMatrix action, EchelonBasis relations, std::string label)
      : n_(n), action_(std::move(action)), relations_(std::move(relations)), label_(std::move(label)) {}

  std::size_t n_ = 0;
  QMatrix action_;
  EchelonBasis relations_;
  std::string label_;
};

struct Validation {
  OperadPresentation presentation;
  std::size_t supplied_rank = 0;  // rank of the rows as given, before closure

  bool closure_enlarged() const { return presentation.relations().dim() != supplied_rank; }
};

/// Checks that `action` is an n x n involution and the rows have length
/// 3n^2, then closes the rows under S3.
Validation validate_presentation(std::size_t n, const QMatrix& action, std::span<const IntVector> rows,
                                 std::string label = {});
Validation validate_presentation(std::size_t n, const IntMatrix& action, std::span<const IntVector> rows,
                                 std::string label = {});

/// Left action of sigma on E(3). With sigma * rho = rho' * pi:
/// pi = id gives (rho', p, q); pi = (12) gives sum_t M[q][t] (rho', p, t).
QVector s3_act(const QMatrix& action, const Perm3& sigma, std::span<const Rational> v);
QVector s3_act(const OperadPresentation& p, const Perm3& sigma, std::span<const Rational> v);
/// Integer variant; throws if the image has non-integer entries.
IntVector s3_act(const OperadPresentation& p, const Perm3& sigma, std::span<const Integer> v);

/// Smallest S3-submodule of E(3) containing `rows`, saturated under (12) and (13).
EchelonBasis s3_closure(const QMatrix& action, std::span<const IntVector> rows);

/// Relation rows whose S3-closure already equals the whole relation space,
/// picked greedily in canonical row order.
std::vector<IntVector> orbit_generators(const OperadPresentation& p);

/// dim P(3) = 3n^2 - dim R.
std::size_t dim_space3(const OperadPresentation& p);

/// Rewrites P in the generators e'_i = sum_j B_ij e_j.
OperadPresentation change_basis(const OperadPresentation& p, const QMatrix& b);

bool equal_presentation(const OperadPresentation& a, const OperadPresentation& b);

struct MonomialTerm {
  Integer coefficient;
  std::size_t outer_op = 1;
  std::size_t inner_op = 1;
  std::array<int, 3> variables{1, 2, 3};  // (rho(1), rho(2), rho(3))

  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

std::vector<MonomialTerm> monomial_terms(const OperadPresentation& p, std::span<const Integer> v);

/// "*" for a single operation, "*1", "*2", ... otherwise.
std::vector<std::string> default_symbols(std::size_t n);

/// Renders v as a signed sum of (x_a s_q x_b) s_p x_c, e.g.
/// "(x1 * x2) * x3 - (x3 * x2) * x1". The zero vector renders as "0".
std::string monomial_render(const OperadPresentation& p, std::span<const Integer> v,
                            const std::vector<std::string>& symbols);
std::string monomial_render(const OperadPresentation& p, std::span<const Integer> v);

}  // namespace manin
