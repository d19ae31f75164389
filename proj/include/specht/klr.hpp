#pragma once

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "specht/cartan.hpp"
#include "specht/perm.hpp"
#include "specht/rational.hpp"

namespace specht {

// PBW monomial psi_w x^a e(nu); nu is an interned residue-word id.
struct PBWKey {
    std::vector<int> w;     // one-line notation
    std::vector<int> exps;  // x exponents, length n
    int nu = -1;
    auto operator<=>(const PBWKey&) const = default;
};

// Linear combination of PBW monomials with rational coefficients.
using NFElement = std::map<PBWKey, Rat>;

void add_term(NFElement& e, const PBWKey& k, const Rat& c);
NFElement& operator+=(NFElement& a, const NFElement& b);
NFElement& operator-=(NFElement& a, const NFElement& b);
NFElement operator*(const Rat& c, const NFElement& a);
bool is_zero(const NFElement& a);

// Bivariate polynomial with integer coefficients: (p,q) -> coeff of u^p v^q.
using BivarPoly = std::map<std::pair<int, int>, long long>;

// Exact arithmetic in the quiver Hecke algebra R(beta): left multiplication
// by generators with full rewriting into the psi_w x^a e(nu) basis.
class Engine {
public:
    explicit Engine(CartanType ct) : ct_(ct) {}
    const CartanType& cartan_type() const { return ct_; }

    int intern(const std::vector<int>& nu);
    const std::vector<int>& residue_word(int id) const { return words_[id]; }

    NFElement idempotent(const std::vector<int>& nu);

    NFElement mult_e(const std::vector<int>& nu, const NFElement& e);
    NFElement mult_x(int r, const NFElement& e);
    NFElement mult_psi(int r, const NFElement& e);

    // psi_{j_1} ... psi_{j_k} x^a e(nu), any word (not necessarily reduced).
    NFElement word_element(const std::vector<int>& word, const std::vector<int>& exps,
                           const std::vector<int>& nu);
    // psi_w * e, via the preferred reduced expression of w.
    NFElement psi_times(const Perm& w, NFElement e);

    // Psi_{i_1}...Psi_{i_p}(a_1,...,a_t) e(nu).
    NFElement psi_block(const std::vector<int>& block_word, const std::vector<int>& sizes,
                        const std::vector<int>& nu);
    // Psi_{i_1}...Psi_{i_p}(a_1,...,a_t) applied to an element.
    NFElement psi_block_times(const std::vector<int>& block_word, const std::vector<int>& sizes,
                              NFElement e);

    // Residue word at the top of a term: w . nu.
    std::vector<int> top_word(const PBWKey& k) const;

    int term_degree(const PBWKey& k) const;
    // Common degree of all terms, or nullopt for 0 / inhomogeneous input.
    std::optional<int> degree(const NFElement& e) const;
    bool homogeneous(const NFElement& e) const;

    static BivarPoly q_polynomial(const CartanType& ct, int i, int j);

private:
    struct Move {
        int pos;
        bool braid;  // false: commutation swap at pos; true: (a,b,a)->(b,a,b)
    };

    NFElement mult_x_base(int r, const std::vector<int>& w_line, int nu_id);
    NFElement mult_psi_base(int r, const std::vector<int>& w_line, int nu_id);
    const std::vector<Move>& canonical_moves(const std::vector<int>& word, int n);
    NFElement shifted_by(const NFElement& base, const std::vector<int>& exps) const;
    NFElement apply_braid_error(int j, const std::vector<int>& mu, NFElement e);

    CartanType ct_;
    std::vector<std::vector<int>> words_;
    std::map<std::vector<int>, int> word_ids_;
    std::map<std::tuple<int, std::vector<int>, int>, NFElement> psi_memo_, x_memo_;
    std::map<std::vector<int>, std::vector<Move>> path_memo_;
};

}  // namespace specht
