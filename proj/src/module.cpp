#include "specht/module.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace specht {

RowModule::RowModule(Engine& engine, std::vector<std::pair<int, int>> segments)
    : engine_(engine), segments_(std::move(segments)) {
    for (auto& [k, len] : segments_) {
        if (len < 0) throw std::invalid_argument("negative segment length");
        n_ += len;
    }
    nu_lambda_.reserve(n_);
    segment_of_.assign(n_ + 1, 0);
    int pos = 0;
    for (size_t s = 0; s < segments_.size(); ++s) {
        auto [k, len] = segments_[s];
        for (int j = 0; j < len; ++j) {
            nu_lambda_.push_back(engine_.cartan_type().residue(static_cast<long long>(k) + j));
            segment_of_[++pos] = static_cast<int>(s);
        }
    }
    nu_id_ = engine_.intern(nu_lambda_);

    // Enumerate the row-strict lines: each segment takes an increasing run.
    std::vector<int> lens;
    for (auto& [k, len] : segments_)
        if (len > 0) lens.push_back(len);
    std::vector<int> line;
    std::function<void(size_t, std::vector<int>&)> rec = [&](size_t seg, std::vector<int>& rem) {
        if (seg == lens.size()) {
            basis_.push_back(line);
            return;
        }
        int sz = lens[seg];
        std::vector<int> idx(sz);
        for (int k = 0; k < sz; ++k) idx[k] = k;
        for (;;) {
            std::vector<int> rest;
            std::vector<char> used(rem.size(), 0);
            for (int k : idx) {
                line.push_back(rem[k]);
                used[k] = 1;
            }
            for (size_t k = 0; k < rem.size(); ++k)
                if (!used[k]) rest.push_back(rem[k]);
            rec(seg + 1, rest);
            line.resize(line.size() - sz);
            int i = sz - 1;
            while (i >= 0 && idx[i] == static_cast<int>(rem.size()) - (sz - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
        }
    };
    std::vector<int> all(n_);
    for (int k = 0; k < n_; ++k) all[k] = k + 1;
    rec(0, all);

    std::sort(basis_.begin(), basis_.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int la = Perm(a).length(), lb = Perm(b).length();
        if (la != lb) return la < lb;
        return a < b;
    });
    for (size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));

    degrees_.resize(basis_.size());
    res_.resize(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        PBWKey k;
        k.w = basis_[i];
        k.exps.assign(n_, 0);
        k.nu = nu_id_;
        degrees_[i] = engine_.term_degree(k);
        res_[i] = Perm(basis_[i]).act_on_places(nu_lambda_);
    }
}

int RowModule::index_of(const std::vector<int>& line) const {
    auto it = index_.find(line);
    return it == index_.end() ? -1 : it->second;
}

bool RowModule::row_strict(const std::vector<int>& line) const {
    for (int k = 1; k < n_; ++k)
        if (segment_of_[k] == segment_of_[k + 1] && line[k - 1] > line[k]) return false;
    return true;
}

const SparseVec& RowModule::reduce_word_vector(const std::vector<int>& line) {
    auto it = reduce_memo_.find(line);
    if (it != reduce_memo_.end()) return it->second;

    SparseVec out;
    if (row_strict(line)) {
        out[index_.at(line)] = Rat(1);
        return reduce_memo_.emplace(line, std::move(out)).first->second;
    }
    // psi_k m = 0 for the same-segment descent k; rewrite via the canonical
    // word of w s_k followed by the letter k.
    int k = 0;
    for (int p = 1; p < n_; ++p)
        if (segment_of_[p] == segment_of_[p + 1] && line[p - 1] > line[p]) { k = p; break; }
    assert(k > 0);
    std::vector<int> u = line;
    std::swap(u[k - 1], u[k]);
    std::vector<int> word = Perm(u).canonical_word();
    word.push_back(k);
    NFElement e = engine_.word_element(word, std::vector<int>(n_, 0), nu_lambda_);
    PBWKey lead;
    lead.w = line;
    lead.exps.assign(n_, 0);
    lead.nu = nu_id_;
    auto lt = e.find(lead);
    assert(lt != e.end() && lt->second == 1);
    e.erase(lt);
    // psi_w m = -(lower terms) m
    for (auto& [key, c] : e) {
        bool pure = true;
        for (int x : key.exps)
            if (x) { pure = false; break; }
        if (!pure || key.nu != nu_id_) continue;
        const SparseVec& sub = reduce_word_vector(key.w);
        for (auto& [bidx, bc] : sub) {
            Rat nv = (out.count(bidx) ? out[bidx] : Rat(0)) - c * bc;
            if (nv == 0) out.erase(bidx);
            else out[bidx] = nv;
        }
    }
    return reduce_memo_.emplace(line, std::move(out)).first->second;
}

SparseVec RowModule::evaluate(const NFElement& e) {
    SparseVec out;
    for (auto& [key, c] : e) {
        if (key.nu != nu_id_) continue;
        bool pure = true;
        for (int x : key.exps)
            if (x) { pure = false; break; }
        if (!pure) continue;
        const SparseVec& sub = reduce_word_vector(key.w);
        for (auto& [bidx, bc] : sub) {
            Rat nv = (out.count(bidx) ? out[bidx] : Rat(0)) + c * bc;
            if (nv == 0) out.erase(bidx);
            else out[bidx] = nv;
        }
    }
    return out;
}

const SparseVec& RowModule::act_x(int i, int idx) {
    auto key = std::make_pair(i, idx);
    auto it = x_act_memo_.find(key);
    if (it != x_act_memo_.end()) return it->second;
    PBWKey k;
    k.w = basis_[idx];
    k.exps.assign(n_, 0);
    k.nu = nu_id_;
    NFElement e;
    e.emplace(k, Rat(1));
    SparseVec v = evaluate(engine_.mult_x(i, e));
    return x_act_memo_.emplace(key, std::move(v)).first->second;
}

const SparseVec& RowModule::act_psi(int j, int idx) {
    auto key = std::make_pair(j, idx);
    auto it = psi_act_memo_.find(key);
    if (it != psi_act_memo_.end()) return it->second;
    PBWKey k;
    k.w = basis_[idx];
    k.exps.assign(n_, 0);
    k.nu = nu_id_;
    NFElement e;
    e.emplace(k, Rat(1));
    SparseVec v = evaluate(engine_.mult_psi(j, e));
    return psi_act_memo_.emplace(key, std::move(v)).first->second;
}

SparseVec RowModule::apply_x(int i, const SparseVec& v) {
    SparseVec out;
    for (auto& [idx, c] : v) {
        for (auto& [b, bc] : act_x(i, idx)) {
            Rat nv = (out.count(b) ? out[b] : Rat(0)) + c * bc;
            if (nv == 0) out.erase(b);
            else out[b] = nv;
        }
    }
    return out;
}

SparseVec RowModule::apply_psi(int j, const SparseVec& v) {
    SparseVec out;
    for (auto& [idx, c] : v) {
        for (auto& [b, bc] : act_psi(j, idx)) {
            Rat nv = (out.count(b) ? out[b] : Rat(0)) + c * bc;
            if (nv == 0) out.erase(b);
            else out[b] = nv;
        }
    }
    return out;
}

SparseVec RowModule::apply_e(const std::vector<int>& nu, const SparseVec& v) const {
    SparseVec out;
    for (auto& [idx, c] : v)
        if (res_[idx] == nu) out.emplace(idx, c);
    return out;
}

SparseVec RowModule::apply_psi_perm(const Perm& w, SparseVec v) {
    std::vector<int> word = w.canonical_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_psi(*it, v);
    return v;
}

}  // namespace specht
