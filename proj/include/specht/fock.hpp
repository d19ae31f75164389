#pragma once

#include <map>
#include <string>
#include <vector>

#include "specht/laurent.hpp"
#include "specht/tableau.hpp"

namespace specht {

// Vector of the combinatorial level-l Fock space: coloured multipartitions
// with Laurent coefficients.
using FockVector = std::map<Multipartition, Laurent>;

FockVector fock_basis_vector(const Multipartition& mp);

FockVector apply_f(const CartanType& ct, const Multicharge& kappa, int i, const FockVector& v);
FockVector apply_e(const CartanType& ct, const Multicharge& kappa, int i, const FockVector& v);
// K_i = q^{(a_i,a_i)/2 h_i}
FockVector apply_k(const CartanType& ct, const Multicharge& kappa, int i, const FockVector& v);

// K_q(lambda) and K_q(lambda, nu): degree generating functions of standard
// tableaux, optionally restricted by residue word.
Laurent k_statistic(const CartanType& ct, const Multicharge& kappa, const Multipartition& mp);
Laurent k_statistic(const CartanType& ct, const Multicharge& kappa, const Multipartition& mp,
                    const std::vector<int>& nu);

// Sum over multipartitions of matching content of K_q(l,nu) K_q(l,nu').
Laurent dim_formula_rhs(const CartanType& ct, const Multicharge& kappa, const RootVector& beta,
                        const std::vector<int>& nu, const std::vector<int>& nu_prime);

struct CommutatorReport {
    bool pass = true;
    std::string witness;
};
// (e_i f_j - f_j e_i) = delta_ij [d_i(lambda)]_{q_i} on all multipartitions
// of size <= n_max.
CommutatorReport commutator_check(const CartanType& ct, const Multicharge& kappa, int n_max);

struct CategorificationReport {
    bool pass = true;
    std::string witness;
};
// Infinite type: the addable-node expansion of ch F_i Sp^lambda computed
// from tableau statistics against Specht characters from the module layer.
CategorificationReport categorification_check(const CartanType& ct, const Multicharge& kappa,
                                              int n_max);

}  // namespace specht
