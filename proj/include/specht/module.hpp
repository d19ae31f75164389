#pragma once

#include <map>
#include <vector>

#include "specht/klr.hpp"
#include "specht/linalg.hpp"
#include "specht/perm.hpp"

namespace specht {

// Convolution product of one-dimensional segment modules L(k_1;l_1) o ... o
// L(k_s;l_s), presented on the cyclic generator m with e(nu)m = delta, all
// x_i m = 0 and psi_j m = 0 for j, j+1 inside one segment.  The basis is
// { psi_w m : w row-strict for the segment layout }.
class RowModule {
public:
    RowModule(Engine& engine, std::vector<std::pair<int, int>> segments);

    int size() const { return n_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::pair<int, int>>& segments() const { return segments_; }
    const std::vector<int>& initial_residues() const { return nu_lambda_; }

    const std::vector<int>& basis_line(int idx) const { return basis_[idx]; }
    int index_of(const std::vector<int>& line) const;      // -1 if absent
    int basis_degree(int idx) const { return degrees_[idx]; }
    const std::vector<int>& basis_residues(int idx) const { return res_[idx]; }

    bool row_strict(const std::vector<int>& line) const;

    // psi_w m expanded over the basis.
    const SparseVec& reduce_word_vector(const std::vector<int>& line);
    // Evaluate a normal-form algebra element on m.
    SparseVec evaluate(const NFElement& e);

    SparseVec apply_x(int i, const SparseVec& v);
    SparseVec apply_psi(int j, const SparseVec& v);
    SparseVec apply_e(const std::vector<int>& nu, const SparseVec& v) const;
    // psi_w . v by the preferred reduced expression of w.
    SparseVec apply_psi_perm(const Perm& w, SparseVec v);

    Engine& engine() { return engine_; }

private:
    const SparseVec& act_x(int i, int idx);
    const SparseVec& act_psi(int j, int idx);

    Engine& engine_;
    std::vector<std::pair<int, int>> segments_;
    int n_ = 0;
    int nu_id_ = -1;
    std::vector<int> nu_lambda_;
    std::vector<int> segment_of_;               // position (1-based) -> segment index
    std::vector<std::vector<int>> basis_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> res_;
    std::map<std::vector<int>, SparseVec> reduce_memo_;
    std::map<std::pair<int, int>, SparseVec> x_act_memo_, psi_act_memo_;
};

}  // namespace specht
