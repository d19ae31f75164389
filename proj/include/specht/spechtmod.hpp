#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "specht/laurent.hpp"
#include "specht/module.hpp"
#include "specht/tableau.hpp"

namespace specht {

struct GarnirGenerator {
    Node node;
    Tableau garnir_tab;
    Perm word;        // permutation of the Garnir tableau
    SparseVec vec;    // expansion in the row-strict basis
    int degree = 0;   // internal (unshifted) degree
};

struct BlockKey {
    int degree = 0;
    std::vector<int> residues;
    auto operator<=>(const BlockKey&) const = default;
};

enum class GarnirMode { exact, conjectured };

using Character = std::map<std::vector<int>, Laurent>;

// Graded Specht module Sp^lambda presented as the quotient of the
// permutation module by the Garnir submodule, with all linear algebra done
// per (degree, residue-word) block.
class SpechtModule {
public:
    SpechtModule(CartanType ct, Multicharge kappa, Multipartition shape,
                 GarnirMode mode = GarnirMode::exact, bool reverse_seed_order = false);

    const CartanType& cartan_type() const { return ct_; }
    const Multicharge& multicharge() const { return kappa_; }
    const Multipartition& shape() const { return shape_; }
    RowModule& pe() { return *pe_; }
    Engine& engine() { return *engine_; }

    int pe_dimension() const { return pe_->dimension(); }
    Tableau basis_tableau(int idx) const;
    const std::vector<int>& standard_indices() const { return std_indices_; }
    int shift() const { return shift_; }

    const std::vector<GarnirGenerator>& garnir_generators() const { return generators_; }
    const std::map<BlockKey, EchelonSpan>& garnir_blocks() const { return garnir_; }
    int garnir_rank() const;

    Laurent graded_dimension() const;     // of the quotient, shift applied
    Character graded_character() const;   // of the quotient, shift applied
    Character pe_character() const;       // of the permutation module, unshifted

    // g^lambda_A in the Pe basis; affine type solves the segment-swap
    // embedding and pushes it through the row concatenations.
    SparseVec garnir_element(const Node& a);
    SparseVec conjectured_garnir_element(const Node& a);

    bool in_garnir_submodule(const SparseVec& v) const;

    struct BasisReport {
        bool spanning = true;
        bool independent = true;
        Laurent graded_dims;
        std::string witness;
        bool pass() const { return spanning && independent; }
    };
    BasisReport verify_basis();

    bool cyclotomic_annihilates(std::string* witness = nullptr);

    BlockKey block_of(const SparseVec& v) const;

private:
    void build_submodule(bool reverse_seed_order);

    CartanType ct_;
    Multicharge kappa_;
    Multipartition shape_;
    GarnirMode mode_;
    std::unique_ptr<Engine> engine_;
    std::unique_ptr<RowModule> pe_;
    int shift_ = 0;
    std::vector<int> std_indices_;
    std::vector<GarnirGenerator> generators_;
    std::map<BlockKey, EchelonSpan> garnir_;
    std::map<Node, SparseVec> garnir_cache_;
};

struct BranchReport {
    bool pass = false;
    Character lhs, rhs;
};
// ch E_i Sp^lambda against the removable-node expansion (infinite type).
BranchReport branch_check(const CartanType& ct, const Multicharge& kappa,
                          const Multipartition& shape, int i);

struct ConjectureNodeResult {
    Node node;
    bool match = false;
    bool solve_failed = false;
    std::string detail;
};

struct ConjectureReport {
    bool all_match = true;
    bool basis_pass = false;
    std::vector<ConjectureNodeResult> nodes;
    Laurent graded_dims;
};
// Affine type: socle-embedding Garnir elements against the brick-sum
// candidates, plus the standard-basis verification with the candidates.
ConjectureReport conjecture_check(const CartanType& ct, const Multicharge& kappa,
                                  const Multipartition& shape);

}  // namespace specht
