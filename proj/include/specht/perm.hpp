#pragma once

#include <vector>
#include <cstdint>
#include <iosfwd>

namespace specht {

// Element of a finite symmetric group S_n, stored in one-line notation:
// line[i] = w(i+1), values 1..n.  Words multiply as functions, so the word
// (j_1,...,j_r) denotes s_{j_1} s_{j_2} ... s_{j_r} applied right to left.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                       // identity
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int n) { return Perm(n); }
    static Perm simple(int n, int i);           // s_i in S_n, 1 <= i <= n-1
    static Perm from_word(int n, const std::vector<int>& word);

    int size() const { return static_cast<int>(line_.size()); }
    int operator()(int x) const { return line_[x - 1]; }
    const std::vector<int>& one_line() const { return line_; }

    bool is_identity() const;
    Perm inverse() const;
    Perm operator*(const Perm& rhs) const;      // (w*v)(x) = w(v(x))
    bool operator==(const Perm& o) const { return line_ == o.line_; }
    bool operator!=(const Perm& o) const { return line_ != o.line_; }
    bool operator<(const Perm& o) const { return line_ < o.line_; }

    int length() const;                         // inversion count
    // Pad with fixed points up to size n.
    Perm extended(int n) const;

    // w acting on places of a sequence: (w.nu)_i = nu_{w^{-1}(i)}.
    template <class T>
    std::vector<T> act_on_places(const std::vector<T>& v) const {
        std::vector<T> out(v.size());
        for (int i = 1; i <= size(); ++i) out[line_[i - 1] - 1] = v[i - 1];
        return out;
    }

    // Smallest i with w(i) > w(i+1), or 0 if none (identity).
    int first_descent() const;
    bool has_descent(int i) const { return line_[i - 1] > line_[i]; }

    // The preferred reduced expression: repeatedly record the smallest
    // descent i and swap positions i, i+1; the recorded list reversed.
    std::vector<int> canonical_word() const;

private:
    std::vector<int> line_;
};

std::ostream& operator<<(std::ostream& os, const Perm& w);

// w[a,b]: 1..a up by b, a+1..a+b down by a, rest fixed.
Perm w_block_swap(int n, int a, int b);
// shf_c(w[a,b])
Perm block_transposition(int n, int c, int a, int b);
// shf_k(w): all letters of a reduced word shifted up by k.
Perm shifted(const Perm& w, int k, int n);

// Block permutation S_{i_1}...S_{i_p}(a_1,...,a_t); result lives in
// S_{a_1+...+a_t}.  Word letters act on block positions.
Perm block_permutation(const std::vector<int>& word, const std::vector<int>& sizes);
// Whether the defining expression (each S_i expanded by its grid word) is
// reduced; equivalent to the word being reduced on unit sizes.
bool block_word_reduced(const std::vector<int>& word, int t);

bool bruhat_leq(const Perm& v, const Perm& w);
// v <=_L w: some reduced expression of w ends with one of v.
bool left_order_leq(const Perm& v, const Perm& w);
bool is_fully_commutative(const Perm& w);   // no 321 pattern

// Minimal-length left coset representatives of S_m x S_n in S_{m+n}.
std::vector<Perm> coset_representatives(int m, int n);

}  // namespace specht
