#pragma once

// White and black Manin products and Koszul duals.
//
// Generators of E1 (x) E2 are flattened as (i, k) -> (i-1) n2 + k. The
// embedding tau : E(3) -> E1(3) (x) E2(3) sends (rho, (i,k), (j,l)) to the
// pure tensor (rho, i, j) (x) (rho, k, l), placed at kron position
// flat1 * 3 n2^2 + flat2 (zero-based).

#include <cstddef>
#include <span>

#include "manin/exactlin.hpp"
#include "manin/operad.hpp"

namespace manin {

class InternalError : public Error {
 public:
  using Error::Error;
};

/// Zero-based kron position of tau(e_position).
std::size_t tau_position(std::size_t n1, std::size_t n2, std::size_t position);

IntVector tau_embed(std::size_t n1, std::size_t n2, std::span<const Integer> v);

/// +1 on the id block, -1 on the (13) and (23) blocks: the Koszul pairing
/// <(rho,f_p,f_q), (rho',e_r,e_s)> = sgn(rho) [rho=rho'][p=r][q=s].
SignVector koszul_signs(std::size_t n);

/// tau^{-1}(K cap D) with K = R1 (x) E2(3) + E1(3) (x) R2 and D = im tau,
/// computed by subspace intersection.
EchelonBasis white_relations_by_intersection(const OperadPresentation& p1, const OperadPresentation& p2);

/// Kernel of v -> (Q1 (x) Q2) tau(v) where Qi are quotient coordinates of Ri.
EchelonBasis white_relations_by_kernel(const OperadPresentation& p1, const OperadPresentation& p2);

/// White product. Both relation routes are evaluated and must agree;
/// a disagreement throws InternalError.
OperadPresentation white(const OperadPresentation& p1, const OperadPresentation& p2);

/// P^! = P(E^v, R^perp): action -M^T, relations the signed annihilator of R.
OperadPresentation koszul_dual(const OperadPresentation& p);

/// (P1^! o P2^!)^!.
OperadPresentation black(const OperadPresentation& p1, const OperadPresentation& p2);

/// Permutation matrix relabelling the generators of white(p1, p2) as
/// generators of white(p2, p1): row (i-1) n2 + k has its 1 in column (k-1) n1 + i.
QMatrix factor_swap_matrix(std::size_t n1, std::size_t n2);

}  // namespace manin
