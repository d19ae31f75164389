#include "specht/klr.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace specht {

void add_term(NFElement& e, const PBWKey& k, const Rat& c) {
    if (c == 0) return;
    auto it = e.find(k);
    if (it == e.end()) {
        e.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) e.erase(it);
}

NFElement& operator+=(NFElement& a, const NFElement& b) {
    for (auto& [k, c] : b) add_term(a, k, c);
    return a;
}

NFElement& operator-=(NFElement& a, const NFElement& b) {
    for (auto& [k, c] : b) add_term(a, k, -c);
    return a;
}

NFElement operator*(const Rat& c, const NFElement& a) {
    NFElement out;
    if (c == 0) return out;
    for (auto& [k, v] : a) out.emplace(k, c * v);
    return out;
}

bool is_zero(const NFElement& a) { return a.empty(); }

int Engine::intern(const std::vector<int>& nu) {
    auto it = word_ids_.find(nu);
    if (it != word_ids_.end()) return it->second;
    for (int i : nu) ct_.check_index(i);
    int id = static_cast<int>(words_.size());
    words_.push_back(nu);
    word_ids_.emplace(nu, id);
    return id;
}

NFElement Engine::idempotent(const std::vector<int>& nu) {
    PBWKey k;
    const int n = static_cast<int>(nu.size());
    k.w.resize(n);
    for (int i = 0; i < n; ++i) k.w[i] = i + 1;
    k.exps.assign(n, 0);
    k.nu = intern(nu);
    NFElement e;
    e.emplace(k, Rat(1));
    return e;
}

std::vector<int> Engine::top_word(const PBWKey& k) const {
    return Perm(k.w).act_on_places(words_[k.nu]);
}

NFElement Engine::mult_e(const std::vector<int>& nu, const NFElement& e) {
    NFElement out;
    for (auto& [k, c] : e)
        if (top_word(k) == nu) out.emplace(k, c);
    return out;
}

NFElement Engine::shifted_by(const NFElement& base, const std::vector<int>& exps) const {
    bool zero = true;
    for (int x : exps)
        if (x) { zero = false; break; }
    if (zero) return base;
    NFElement out;
    for (auto& [k, c] : base) {
        PBWKey nk = k;
        for (size_t i = 0; i < exps.size(); ++i) nk.exps[i] += exps[i];
        out.emplace(std::move(nk), c);
    }
    return out;
}

NFElement Engine::mult_x(int r, const NFElement& e) {
    NFElement out;
    for (auto& [k, c] : e) {
        const NFElement& base = [&]() -> const NFElement& {
            auto key = std::make_tuple(r, k.w, k.nu);
            auto it = x_memo_.find(key);
            if (it != x_memo_.end()) return it->second;
            NFElement v = mult_x_base(r, k.w, k.nu);
            return x_memo_.emplace(key, std::move(v)).first->second;
        }();
        out += c * shifted_by(base, k.exps);
    }
    return out;
}

NFElement Engine::mult_x_base(int r, const std::vector<int>& w_line, int nu_id) {
    const std::vector<int>& nu = words_[nu_id];
    const int n = static_cast<int>(nu.size());
    if (r < 1 || r > n) throw std::out_of_range("x index");
    Perm w(w_line);
    std::vector<int> J = w.canonical_word();
    const int m = static_cast<int>(J.size());

    // mu[t]: residue word immediately right of letter t.
    std::vector<std::vector<int>> mu(m);
    if (m > 0) {
        mu[m - 1] = nu;
        for (int t = m - 2; t >= 0; --t) {
            mu[t] = mu[t + 1];
            std::swap(mu[t][J[t + 1] - 1], mu[t][J[t + 1]]);
        }
    }

    NFElement out;
    int idx = r;
    for (int t = 0; t < m; ++t) {
        const int j = J[t];
        if (idx == j || idx == j + 1) {
            if (mu[t][j - 1] == mu[t][j]) {
                std::vector<int> sub;
                sub.reserve(m - 1);
                for (int s = 0; s < m; ++s)
                    if (s != t) sub.push_back(J[s]);
                NFElement corr = word_element(sub, std::vector<int>(n, 0), nu);
                if (idx == j) out -= corr;
                else out += corr;
            }
            idx = (idx == j) ? j + 1 : j;
        }
    }
    assert(idx == w.inverse()(r));
    PBWKey lead;
    lead.w = w_line;
    lead.exps.assign(n, 0);
    lead.exps[idx - 1] = 1;
    lead.nu = nu_id;
    add_term(out, lead, Rat(1));
    return out;
}

BivarPoly Engine::q_polynomial(const CartanType& ct, int i, int j) {
    ct.check_index(i);
    ct.check_index(j);
    BivarPoly q;
    if (i == j) return q;
    if (i > j) {
        BivarPoly m = q_polynomial(ct, j, i);
        for (auto& [pq, c] : m) q[{pq.second, pq.first}] = c;
        return q;
    }
    // now i < j
    if (j != i + 1) {
        q[{0, 0}] = 1;
        return q;
    }
    if (i == 0) {
        q[{1, 0}] = 1;  // u
        q[{0, 2}] = 1;  // v^2
    } else if (ct.is_affine() && j == ct.rank()) {
        q[{2, 0}] = 1;  // u^2
        q[{0, 1}] = 1;  // v
    } else {
        q[{1, 0}] = 1;
        q[{0, 1}] = 1;
    }
    return q;
}

// (Q_{ij}(x_j, x_{j+1}) - Q_{ij}(x_{j+2}, x_{j+1})) / (x_j - x_{j+2}) applied
// on the left of e; exponents are (x_j, x_{j+1}, x_{j+2}).
NFElement Engine::apply_braid_error(int j, const std::vector<int>& mu, NFElement e) {
    NFElement out;
    if (mu[j - 1] != mu[j + 1]) return out;
    BivarPoly q = q_polynomial(ct_, mu[j - 1], mu[j]);
    for (auto& [pq, coef] : q) {
        auto [p, qq] = pq;
        for (int s = 0; s <= p - 1; ++s) {
            // coef * x_j^s x_{j+1}^qq x_{j+2}^{p-1-s}
            NFElement piece = e;
            for (int k = 0; k < s; ++k) piece = mult_x(j, piece);
            for (int k = 0; k < qq; ++k) piece = mult_x(j + 1, piece);
            for (int k = 0; k < p - 1 - s; ++k) piece = mult_x(j + 2, piece);
            out += Rat(coef) * piece;
        }
    }
    return out;
}

const std::vector<Engine::Move>& Engine::canonical_moves(const std::vector<int>& word, int n) {
    auto it = path_memo_.find(word);
    if (it != path_memo_.end()) return it->second;

    std::vector<Move> moves;
    std::vector<int> w = word;

    // Bring letter c (a descent of the product of w[lo..hi)) to position hi-1.
    std::function<void(int, int, int)> to_back = [&](int lo, int hi, int c) {
        if (w[hi - 1] == c) return;
        int u = w[hi - 1];
        to_back(lo, hi - 1, c);
        if (std::abs(u - c) >= 2) {
            std::swap(w[hi - 2], w[hi - 1]);
            moves.push_back({hi - 2, false});
        } else {
            to_back(lo, hi - 2, u);
            w[hi - 3] = c;
            w[hi - 2] = u;
            w[hi - 1] = c;
            moves.push_back({hi - 3, true});
        }
    };

    for (int end = static_cast<int>(w.size()); end >= 1; --end) {
        std::vector<int> prefix(w.begin(), w.begin() + end);
        Perm z = Perm::from_word(n, prefix);
        int c = z.first_descent();
        assert(c != 0);
        to_back(0, end, c);
    }
    assert(Perm::from_word(n, word).canonical_word() == w);
    return path_memo_.emplace(word, std::move(moves)).first->second;
}

NFElement Engine::mult_psi(int r, const NFElement& e) {
    NFElement out;
    for (auto& [k, c] : e) {
        const NFElement& base = [&]() -> const NFElement& {
            auto key = std::make_tuple(r, k.w, k.nu);
            auto it = psi_memo_.find(key);
            if (it != psi_memo_.end()) return it->second;
            NFElement v = mult_psi_base(r, k.w, k.nu);
            return psi_memo_.emplace(key, std::move(v)).first->second;
        }();
        out += c * shifted_by(base, k.exps);
    }
    return out;
}

NFElement Engine::mult_psi_base(int r, const std::vector<int>& w_line, int nu_id) {
    const std::vector<int>& nu = words_[nu_id];
    const int n = static_cast<int>(nu.size());
    if (r < 1 || r >= n) throw std::out_of_range("psi index");
    Perm w(w_line);

    // s_r w: swap the values r, r+1.
    std::vector<int> srw_line = w_line;
    for (auto& v : srw_line) {
        if (v == r) v = r + 1;
        else if (v == r + 1) v = r;
    }
    Perm srw(srw_line);
    const std::vector<int> zero(n, 0);

    if (srw.length() > w.length()) {
        // growing case: normalise the word r . can(w)
        std::vector<int> w0 = w.canonical_word();
        w0.insert(w0.begin(), r);
        const auto& moves = canonical_moves(w0, n);

        NFElement out;
        PBWKey lead;
        lead.w = srw_line;
        lead.exps = zero;
        lead.nu = nu_id;
        add_term(out, lead, Rat(1));

        std::vector<int> cur = w0;
        for (const Move& mv : moves) {
            if (mv.braid) {
                int a = cur[mv.pos];
                int b = cur[mv.pos + 1];
                int j = std::min(a, b);
                int sign = (a == j + 1) ? 1 : -1;
                std::vector<int> suffix(cur.begin() + mv.pos + 3, cur.end());
                std::vector<int> musuf = Perm::from_word(n, suffix).act_on_places(nu);
                if (musuf[j - 1] == musuf[j + 1]) {
                    NFElement err = word_element(suffix, zero, nu);
                    err = apply_braid_error(j, musuf, std::move(err));
                    for (int t = mv.pos - 1; t >= 0; --t) err = mult_psi(cur[t], err);
                    out += Rat(sign) * err;
                }
                cur[mv.pos] = b;
                cur[mv.pos + 1] = a;
                cur[mv.pos + 2] = b;
            } else {
                std::swap(cur[mv.pos], cur[mv.pos + 1]);
            }
        }
#ifndef NDEBUG
        for (auto& [k, c] : out)
            assert(Perm(k.w).length() <= srw.length() &&
                   (Perm(k.w).length() == srw.length() || Perm(k.w).length() <= srw.length() - 3));
#endif
        return out;
    }

    // shrinking case: psi_r^2 via the quadratic relation
    Perm u = srw;  // length(u) = length(w) - 1
    NFElement d = mult_psi_base(r, u.one_line(), nu_id);
    PBWKey lead;
    lead.w = w_line;
    lead.exps = zero;
    lead.nu = nu_id;
    auto it = d.find(lead);
    assert(it != d.end() && it->second == 1);
    d.erase(it);  // d is now the lower-order part L

    std::vector<int> mu = u.act_on_places(nu);
    NFElement out;
    BivarPoly q = q_polynomial(ct_, mu[r - 1], mu[r]);
    if (!q.empty()) {
        PBWKey base;
        base.w = u.one_line();
        base.exps = zero;
        base.nu = nu_id;
        NFElement uelt;
        uelt.emplace(base, Rat(1));
        for (auto& [pq, coef] : q) {
            NFElement piece = uelt;
            for (int k = 0; k < pq.first; ++k) piece = mult_x(r, piece);
            for (int k = 0; k < pq.second; ++k) piece = mult_x(r + 1, piece);
            out += Rat(coef) * piece;
        }
    }
    if (!d.empty()) {
        NFElement tail = mult_psi(r, d);
        out -= tail;
    }
    return out;
}

NFElement Engine::word_element(const std::vector<int>& word, const std::vector<int>& exps,
                               const std::vector<int>& nu) {
    PBWKey k;
    const int n = static_cast<int>(nu.size());
    k.w.resize(n);
    for (int i = 0; i < n; ++i) k.w[i] = i + 1;
    k.exps = exps;
    k.nu = intern(nu);
    NFElement e;
    e.emplace(k, Rat(1));
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = mult_psi(*it, e);
    return e;
}

NFElement Engine::psi_times(const Perm& w, NFElement e) {
    std::vector<int> word = w.canonical_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = mult_psi(*it, e);
    return e;
}

NFElement Engine::psi_block(const std::vector<int>& block_word, const std::vector<int>& sizes,
                            const std::vector<int>& nu) {
    return psi_block_times(block_word, sizes, idempotent(nu));
}

NFElement Engine::psi_block_times(const std::vector<int>& block_word, const std::vector<int>& sizes,
                                  NFElement e) {
    if (e.empty()) return e;
    const int n = static_cast<int>(e.begin()->first.exps.size());
    int total = 0;
    for (int s : sizes) total += s;
    if (total != n) throw std::invalid_argument("block sizes must sum to word length");
    std::vector<int> cur = sizes;
    for (auto it = block_word.rbegin(); it != block_word.rend(); ++it) {
        const int i = *it;
        if (i < 1 || i >= static_cast<int>(cur.size()))
            throw std::out_of_range("block index out of range");
        int off = 0;
        for (int k = 0; k < i - 1; ++k) off += cur[k];
        Perm f = block_transposition(n, off, cur[i - 1], cur[i]);
        e = psi_times(f, std::move(e));
        std::swap(cur[i - 1], cur[i]);
    }
    return e;
}

int Engine::term_degree(const PBWKey& k) const {
    const std::vector<int>& nu = words_[k.nu];
    std::vector<int> J = Perm(k.w).canonical_word();
    std::vector<int> cur = nu;
    int deg = 0;
    for (auto it = J.rbegin(); it != J.rend(); ++it) {
        int j = *it;
        deg -= ct_.bilinear(cur[j - 1], cur[j]);
        std::swap(cur[j - 1], cur[j]);
    }
    for (size_t rr = 0; rr < k.exps.size(); ++rr)
        deg += k.exps[rr] * ct_.bilinear(nu[rr], nu[rr]);
    return deg;
}

std::optional<int> Engine::degree(const NFElement& e) const {
    std::optional<int> d;
    for (auto& [k, c] : e) {
        int dk = term_degree(k);
        if (!d) d = dk;
        else if (*d != dk) return std::nullopt;
    }
    return d;
}

bool Engine::homogeneous(const NFElement& e) const {
    return e.empty() || degree(e).has_value();
}

}  // namespace specht
