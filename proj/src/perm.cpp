#include "specht/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace specht {

Perm::Perm(int n) : line_(n) {
    std::iota(line_.begin(), line_.end(), 1);
}

Perm::Perm(std::vector<int> one_line) : line_(std::move(one_line)) {
    std::vector<char> seen(line_.size(), 0);
    for (int v : line_) {
        if (v < 1 || v > size() || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        seen[v - 1] = 1;
    }
}

Perm Perm::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("simple reflection index");
    Perm w(n);
    std::swap(w.line_[i - 1], w.line_[i]);
    return w;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
    // Build by left multiplication starting from the last letter:
    // (s_j * w)(x) = s_j(w(x)) swaps the values j, j+1.
    Perm w(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int j = *it;
        if (j < 1 || j >= n) throw std::out_of_range("word letter out of range");
        for (auto& v : w.line_) {
            if (v == j) v = j + 1;
            else if (v == j + 1) v = j;
        }
    }
    return w;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (line_[i - 1] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(line_.size());
    for (int i = 1; i <= size(); ++i) inv[line_[i - 1] - 1] = i;
    return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> out(line_.size());
    for (int i = 1; i <= size(); ++i) out[i - 1] = line_[rhs.line_[i - 1] - 1];
    return Perm(std::move(out));
}

int Perm::length() const {
    int n = size(), inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (line_[i] > line_[j]) ++inv;
    return inv;
}

Perm Perm::extended(int n) const {
    if (n < size()) throw std::invalid_argument("cannot shrink");
    std::vector<int> out = line_;
    for (int v = size() + 1; v <= n; ++v) out.push_back(v);
    return Perm(std::move(out));
}

int Perm::first_descent() const {
    for (int i = 1; i < size(); ++i)
        if (line_[i - 1] > line_[i]) return i;
    return 0;
}

std::vector<int> Perm::canonical_word() const {
    std::vector<int> rec;
    std::vector<int> cur = line_;
    for (;;) {
        int d = 0;
        for (int i = 1; i < size(); ++i)
            if (cur[i - 1] > cur[i]) { d = i; break; }
        if (d == 0) break;
        rec.push_back(d);
        std::swap(cur[d - 1], cur[d]);
    }
    std::reverse(rec.begin(), rec.end());
    return rec;
}

std::ostream& operator<<(std::ostream& os, const Perm& w) {
    os << '[';
    for (int i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w.one_line()[i];
    }
    return os << ']';
}

Perm w_block_swap(int n, int a, int b) {
    if (a < 0 || b < 0 || a + b > n) throw std::invalid_argument("w[a,b] out of range");
    std::vector<int> line(n);
    for (int x = 1; x <= a; ++x) line[x - 1] = x + b;
    for (int x = a + 1; x <= a + b; ++x) line[x - 1] = x - a;
    for (int x = a + b + 1; x <= n; ++x) line[x - 1] = x;
    return Perm(std::move(line));
}

Perm block_transposition(int n, int c, int a, int b) {
    if (c < 0 || c + a + b > n) throw std::invalid_argument("S_2(c,a,b) out of range");
    std::vector<int> line(n);
    for (int x = 1; x <= c; ++x) line[x - 1] = x;
    for (int x = 1; x <= a; ++x) line[c + x - 1] = c + x + b;
    for (int x = a + 1; x <= a + b; ++x) line[c + x - 1] = c + x - a;
    for (int x = c + a + b + 1; x <= n; ++x) line[x - 1] = x;
    return Perm(std::move(line));
}

Perm shifted(const Perm& w, int k, int n) {
    std::vector<int> word = w.canonical_word();
    for (auto& j : word) j += k;
    return Perm::from_word(n, word);
}

Perm block_permutation(const std::vector<int>& word, const std::vector<int>& sizes) {
    const int t = static_cast<int>(sizes.size());
    for (int s : sizes)
        if (s < 0) throw std::invalid_argument("negative block size");
    for (int j : word)
        if (j < 1 || j >= t) throw std::out_of_range("block index out of range");
    Perm u = Perm::from_word(t, word);
    Perm uinv = u.inverse();
    // Interval k of [1..n] has size sizes[u^{-1}(k)-1]; the block A_j is
    // interval u(j), and the one-line notation concatenates A_1,...,A_t.
    std::vector<int> start(t + 1, 0);
    int acc = 0;
    std::vector<int> ilen(t);
    for (int k = 1; k <= t; ++k) {
        ilen[k - 1] = sizes[uinv(k) - 1];
        start[k - 1] = acc;
        acc += ilen[k - 1];
    }
    std::vector<int> line;
    line.reserve(acc);
    for (int j = 1; j <= t; ++j) {
        int k = u(j);
        for (int d = 1; d <= ilen[k - 1]; ++d) line.push_back(start[k - 1] + d);
    }
    return Perm(std::move(line));
}

bool block_word_reduced(const std::vector<int>& word, int t) {
    Perm u = Perm::from_word(t, word);
    return u.length() == static_cast<int>(word.size());
}

bool bruhat_leq(const Perm& v, const Perm& w) {
    if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
    Perm a = v, b = w;
    // Consume the canonical word of the larger element from its right end
    // via the lifting property.
    for (;;) {
        int i = b.first_descent();
        if (i == 0) return a.is_identity();
        Perm si = Perm::simple(b.size(), i);
        b = b * si;
        if (a.has_descent(i)) a = a * si;
    }
}

bool left_order_leq(const Perm& v, const Perm& w) {
    if (v.size() != w.size()) throw std::invalid_argument("size mismatch");
    return w.length() == (w * v.inverse()).length() + v.length();
}

bool is_fully_commutative(const Perm& w) {
    const auto& line = w.one_line();
    const int n = w.size();
    // 321 pattern: look for i<j with line[i]>line[j] and some k>j below line[j].
    for (int j = 1; j + 1 < n; ++j) {
        int best_left = 0;
        for (int i = 0; i < j; ++i) best_left = std::max(best_left, line[i]);
        if (best_left <= line[j]) continue;
        for (int k = j + 1; k < n; ++k)
            if (line[k] < line[j]) return false;
    }
    return true;
}

std::vector<Perm> coset_representatives(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative block");
    std::vector<Perm> out;
    const int N = m + n;
    std::vector<int> comb(m);
    std::iota(comb.begin(), comb.end(), 1);
    for (;;) {
        std::vector<int> line(N);
        std::vector<char> used(N + 1, 0);
        for (int i = 0; i < m; ++i) { line[i] = comb[i]; used[comb[i]] = 1; }
        int pos = m;
        for (int v = 1; v <= N; ++v)
            if (!used[v]) line[pos++] = v;
        out.emplace_back(std::move(line));
        if (m == 0) break;
        // next m-combination of {1..N}
        int i = m - 1;
        while (i >= 0 && comb[i] == N - (m - 1 - i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

}  // namespace specht
