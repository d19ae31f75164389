#include "specht/spechtmod.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace specht {

namespace {

std::vector<std::pair<int, int>> segments_of(const Multicharge& kappa,
                                             const Multipartition& shape) {
    std::vector<std::pair<int, int>> segs;
    for (int t = 1; t <= shape.level(); ++t)
        for (int r = 1; r <= shape.rows(t); ++r)
            segs.emplace_back(kappa[t - 1] - r + 1, shape.row_length(t, r));
    return segs;
}

void axpy(SparseVec& out, const Rat& c, const SparseVec& v) {
    if (c == 0) return;
    for (auto& [i, x] : v) {
        Rat nv = (out.count(i) ? out[i] : Rat(0)) + c * x;
        if (nv == 0) out.erase(i);
        else out[i] = nv;
    }
}

}  // namespace

SpechtModule::SpechtModule(CartanType ct, Multicharge kappa, Multipartition shape,
                           GarnirMode mode, bool reverse_seed_order)
    : ct_(ct), kappa_(std::move(kappa)), shape_(std::move(shape)), mode_(mode) {
    if (shape_.level() != static_cast<int>(kappa_.size()))
        throw std::invalid_argument("multicharge level does not match shape");
    if (mode_ == GarnirMode::conjectured && !ct_.is_affine())
        throw std::invalid_argument("conjectured Garnir elements are affine-only");
    engine_ = std::make_unique<Engine>(ct_);
    pe_ = std::make_unique<RowModule>(*engine_, segments_of(kappa_, shape_));
    shift_ = shape_.size() == 0 ? 0 : degree(ct_, kappa_, Tableau::initial(shape_));
    for (int i = 0; i < pe_->dimension(); ++i)
        if (basis_tableau(i).is_standard()) std_indices_.push_back(i);
    build_submodule(reverse_seed_order);
}

Tableau SpechtModule::basis_tableau(int idx) const {
    return Tableau(shape_, pe_->basis_line(idx));
}

BlockKey SpechtModule::block_of(const SparseVec& v) const {
    if (v.empty()) throw std::invalid_argument("block of zero vector");
    int first = v.begin()->first;
    BlockKey key{pe_->basis_degree(first), pe_->basis_residues(first)};
#ifndef NDEBUG
    for (auto& [i, c] : v)
        assert(pe_->basis_degree(i) == key.degree && pe_->basis_residues(i) == key.residues);
#endif
    return key;
}

SparseVec SpechtModule::garnir_element(const Node& a) {
    auto it = garnir_cache_.find(a);
    if (it != garnir_cache_.end()) return it->second;
    if (!is_garnir_node(shape_, a)) throw std::invalid_argument("not a Garnir node");

    SparseVec out;
    if (!ct_.is_affine()) {
        Tableau g = garnir_tableau(shape_, a);
        int idx = pe_->index_of(g.entries());
        assert(idx >= 0);
        out[idx] = Rat(1);
        garnir_cache_.emplace(a, out);
        return out;
    }

    // Affine type: solve for the one-dimensional segment-swap image inside
    // L(K+L1;L2) o L(K;L1) and push through the row concatenations.
    const int r = a.row, c = a.col, t = a.comp;
    const int row_len = shape_.row_length(t, r);
    const int K = kappa_[t - 1] - r;
    const int L1 = c, L2 = row_len - c + 1;
    const int np = L1 + L2;

    RowModule swap_mod(*engine_, {{K + L1, L2}, {K, L1}});
    std::vector<int> nu0(np);
    for (int i = 0; i < np; ++i) nu0[i] = ct_.residue(static_cast<long long>(K) + i);

    std::vector<int> candidates;
    for (int i = 0; i < swap_mod.dimension(); ++i)
        if (swap_mod.basis_residues(i) == nu0) candidates.push_back(i);
    if (candidates.empty()) throw std::runtime_error("empty candidate space in Garnir solve");

    const int ncol = static_cast<int>(candidates.size());
    const int gens = np + (np - 1);
    SparseMatrix m(gens * swap_mod.dimension(), ncol);
    for (int cidx = 0; cidx < ncol; ++cidx) {
        SparseVec unit;
        unit[candidates[cidx]] = Rat(1);
        int row_base = 0;
        for (int i = 1; i <= np; ++i, row_base += swap_mod.dimension())
            for (auto& [bi, cv] : swap_mod.apply_x(i, unit)) m.set(row_base + bi, cidx, cv);
        for (int j = 1; j <= np - 1; ++j, row_base += swap_mod.dimension())
            for (auto& [bi, cv] : swap_mod.apply_psi(j, unit)) m.set(row_base + bi, cidx, cv);
    }
    LinearSolution sol = solve(m, std::vector<Rat>(gens * swap_mod.dimension(), Rat(0)));
    if (sol.nullspace.size() != 1) {
        std::ostringstream os;
        os << "Garnir solve space has dimension " << sol.nullspace.size() << " at node " << a;
        throw std::runtime_error(os.str());
    }
    // normalise the coefficient of psi_{w[L2,L1]} (u(x)u) to 1
    Perm lead = w_block_swap(np, L2, L1);
    int lead_idx = swap_mod.index_of(lead.one_line());
    assert(lead_idx >= 0);
    Rat lead_coeff = 0;
    const auto& null = sol.nullspace[0];
    for (int cidx = 0; cidx < ncol; ++cidx)
        if (candidates[cidx] == lead_idx) lead_coeff = null[cidx];
    if (lead_coeff == 0) throw std::runtime_error("Garnir solve has no leading term");

    int off = 0;
    for (int tc = 1; tc < t; ++tc)
        for (int rr = 1; rr <= shape_.rows(tc); ++rr) off += shape_.row_length(tc, rr);
    for (int rr = 1; rr < r; ++rr) off += shape_.row_length(t, rr);
    off += c - 1;

    const int n = shape_.size();
    for (int cidx = 0; cidx < ncol; ++cidx) {
        Rat coeff = null[cidx] / lead_coeff;
        if (coeff == 0) continue;
        const std::vector<int>& small = swap_mod.basis_line(candidates[cidx]);
        std::vector<int> big(n);
        for (int i = 1; i <= n; ++i) big[i - 1] = i;
        for (int i = 0; i < np; ++i) big[off + i] = off + small[i];
        axpy(out, coeff, pe_->reduce_word_vector(big));
    }
#ifndef NDEBUG
    {
        Tableau g = garnir_tableau(shape_, a);
        int gidx = pe_->index_of(g.entries());
        assert(gidx >= 0 && out.count(gidx) && out.at(gidx) == 1);
        block_of(out);  // asserts purity
    }
#endif
    garnir_cache_.emplace(a, out);
    return out;
}

SparseVec SpechtModule::conjectured_garnir_element(const Node& a) {
    if (!ct_.is_affine()) throw std::invalid_argument("conjectured elements are affine-only");
    BrickDecomposition bd = brick_decomposition(ct_, kappa_, shape_, a);
    const int ell = ct_.rank();
    const Rat sign = (ell % 2 == 0) ? Rat(1) : Rat(-1);

    int base_idx = pe_->index_of(bd.dominant_tableau.entries());
    assert(base_idx >= 0);
    SparseVec base;
    base[base_idx] = Rat(1);

    const int nbricks = static_cast<int>(bd.bricks.size());
    if (nbricks <= 1) return base;

    const int arow = bd.row_r_bricks, brow = bd.row_r1_bricks;
    SparseVec total;
    for (const Perm& u : coset_representatives(arow, brow)) {
        std::vector<int> word = u.canonical_word();
        SparseVec v = base;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            // tau_r = (-1)^l psi_{w_r} + 1
            SparseVec moved = pe_->apply_psi_perm(bd.brick_transpositions[*it - 1], v);
            SparseVec next = v;
            axpy(next, sign, moved);
            v = std::move(next);
        }
        axpy(total, Rat(1), v);
    }
    return total;
}

void SpechtModule::build_submodule(bool reverse_seed_order) {
    std::vector<Node> nodes = garnir_nodes(shape_);
    if (reverse_seed_order) std::reverse(nodes.begin(), nodes.end());

    std::deque<SparseVec> queue;
    for (const Node& a : nodes) {
        SparseVec g = (mode_ == GarnirMode::exact) ? garnir_element(a)
                                                   : conjectured_garnir_element(a);
        GarnirGenerator gen;
        gen.node = a;
        gen.garnir_tab = garnir_tableau(shape_, a);
        gen.word = garnir_word(shape_, a);
        gen.vec = g;
        if (!g.empty()) gen.degree = block_of(g).degree;
        generators_.push_back(gen);
        if (g.empty()) continue;
        if (garnir_[block_of(g)].insert(g)) queue.push_back(std::move(g));
    }

    const int n = shape_.size();
    while (!queue.empty()) {
        SparseVec v = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            SparseVec w = pe_->apply_x(i, v);
            if (w.empty()) continue;
            if (garnir_[block_of(w)].insert(w)) queue.push_back(std::move(w));
        }
        for (int j = 1; j <= n - 1; ++j) {
            SparseVec w = pe_->apply_psi(j, v);
            if (w.empty()) continue;
            if (garnir_[block_of(w)].insert(w)) queue.push_back(std::move(w));
        }
    }
}

int SpechtModule::garnir_rank() const {
    int rk = 0;
    for (auto& [k, span] : garnir_) rk += span.rank();
    return rk;
}

bool SpechtModule::in_garnir_submodule(const SparseVec& v) const {
    if (v.empty()) return true;
    auto it = garnir_.find(block_of(v));
    if (it == garnir_.end()) return false;
    return it->second.contains(v);
}

Laurent SpechtModule::graded_dimension() const {
    Laurent out;
    std::map<BlockKey, int> dims;
    for (int i = 0; i < pe_->dimension(); ++i)
        ++dims[BlockKey{pe_->basis_degree(i), pe_->basis_residues(i)}];
    for (auto& [key, d] : dims) {
        int rk = 0;
        auto it = garnir_.find(key);
        if (it != garnir_.end()) rk = it->second.rank();
        out += Laurent::q_power(key.degree + shift_, d - rk);
    }
    return out;
}

Character SpechtModule::graded_character() const {
    Character ch;
    std::map<BlockKey, int> dims;
    for (int i = 0; i < pe_->dimension(); ++i)
        ++dims[BlockKey{pe_->basis_degree(i), pe_->basis_residues(i)}];
    for (auto& [key, d] : dims) {
        int rk = 0;
        auto it = garnir_.find(key);
        if (it != garnir_.end()) rk = it->second.rank();
        if (d - rk == 0) continue;
        ch[key.residues] += Laurent::q_power(key.degree + shift_, d - rk);
    }
    return ch;
}

Character SpechtModule::pe_character() const {
    Character ch;
    for (int i = 0; i < pe_->dimension(); ++i)
        ch[pe_->basis_residues(i)] += Laurent::q_power(pe_->basis_degree(i));
    return ch;
}

SpechtModule::BasisReport SpechtModule::verify_basis() {
    BasisReport rep;
    std::map<BlockKey, std::vector<int>> all, std;
    for (int i = 0; i < pe_->dimension(); ++i)
        all[BlockKey{pe_->basis_degree(i), pe_->basis_residues(i)}].push_back(i);
    for (int i : std_indices_)
        std[BlockKey{pe_->basis_degree(i), pe_->basis_residues(i)}].push_back(i);

    Laurent dims;
    for (auto& [key, idxs] : all) {
        EchelonSpan span;
        int garnir_rank = 0;
        auto it = garnir_.find(key);
        if (it != garnir_.end()) {
            for (auto& [p, row] : it->second.rows()) span.insert(row);
            garnir_rank = it->second.rank();
        }
        int added = 0;
        auto st = std.find(key);
        if (st != std.end()) {
            for (int i : st->second) {
                SparseVec unit;
                unit[i] = Rat(1);
                if (span.insert(unit)) ++added;
            }
        }
        const int nstd = (st == std.end()) ? 0 : static_cast<int>(st->second.size());
        if (added != nstd) {
            rep.independent = false;
            std::ostringstream os;
            os << "dependent standard vectors in degree " << key.degree;
            rep.witness = os.str();
        }
        if (span.rank() != static_cast<int>(idxs.size())) {
            rep.spanning = false;
            std::ostringstream os;
            os << "standard vectors span defect in degree " << key.degree;
            rep.witness = os.str();
        }
        dims += Laurent::q_power(key.degree + shift_, static_cast<long long>(idxs.size()) - garnir_rank);
    }
    rep.graded_dims = dims;
    return rep;
}

bool SpechtModule::cyclotomic_annihilates(std::string* witness) {
    DominantWeight lam = weight_of_multicharge(ct_, kappa_);
    for (int i = 0; i < pe_->dimension(); ++i) {
        const std::vector<int>& nu = pe_->basis_residues(i);
        if (nu.empty()) continue;
        int p = lam.mult(nu[0]);
        SparseVec v;
        v[i] = Rat(1);
        for (int k = 0; k < p; ++k) v = pe_->apply_x(1, v);
        if (!v.empty() && !in_garnir_submodule(v)) {
            if (witness) {
                std::ostringstream os;
                os << "x_1^" << p << " survives on basis vector " << i;
                *witness = os.str();
            }
            return false;
        }
    }
    return true;
}

BranchReport branch_check(const CartanType& ct, const Multicharge& kappa,
                          const Multipartition& shape, int i) {
    if (ct.is_affine())
        throw std::invalid_argument("branch comparison is proved in infinite type only");
    BranchReport rep;
    SpechtModule full(ct, kappa, shape);
    Character ch = full.graded_character();
    for (auto& [nu, poly] : ch) {
        if (nu.empty() || nu.back() != i) continue;
        std::vector<int> head(nu.begin(), nu.end() - 1);
        rep.lhs[head] += poly;
    }
    for (const Node& b : removable_nodes(ct, kappa, shape, i)) {
        int db = d_statistics(ct, kappa, shape, b).d_below;
        SpechtModule sub(ct, kappa, shape.without_node(b));
        for (auto& [nu, poly] : sub.graded_character())
            rep.rhs[nu] += Laurent::q_power(db) * poly;
    }
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

ConjectureReport conjecture_check(const CartanType& ct, const Multicharge& kappa,
                                  const Multipartition& shape) {
    if (!ct.is_affine()) throw std::invalid_argument("conjecture is affine-only");
    ConjectureReport rep;
    SpechtModule exact(ct, kappa, shape);
    for (const Node& a : garnir_nodes(shape)) {
        ConjectureNodeResult res;
        res.node = a;
        try {
            SparseVec lhs = exact.garnir_element(a);
            SparseVec rhs = exact.conjectured_garnir_element(a);
            res.match = lhs == rhs;
            if (!res.match) res.detail = "socle and brick-sum elements differ";
        } catch (const std::exception& ex) {
            res.solve_failed = true;
            res.detail = ex.what();
        }
        if (!res.match) rep.all_match = false;
        rep.nodes.push_back(std::move(res));
    }
    SpechtModule conj(ct, kappa, shape, GarnirMode::conjectured);
    auto basis = conj.verify_basis();
    rep.basis_pass = basis.pass();
    rep.graded_dims = basis.graded_dims;
    return rep;
}

}  // namespace specht
