#pragma once

#include <map>
#include <iosfwd>

namespace specht {

// Cartan data for the two type-C families.  The infinite case has index
// set {0,1,2,...}; the affine case C_l^(1) has index set {0,...,l}.
class CartanType {
public:
    enum class Kind { c_infinity, c_affine };

    static CartanType infinity() { return CartanType(Kind::c_infinity, 0); }
    static CartanType affine(int rank);

    Kind kind() const { return kind_; }
    bool is_affine() const { return kind_ == Kind::c_affine; }
    int rank() const { return rank_; }

    bool valid_index(int i) const;
    void check_index(int i) const;

    int symmetrizer(int i) const;           // d_i
    int cartan(int i, int j) const;         // a_ij
    int bilinear(int i, int j) const;       // (alpha_i, alpha_j) = d_i a_ij
    int residue(long long k) const;         // pi_l(k)

    bool operator==(const CartanType& o) const {
        return kind_ == o.kind_ && rank_ == o.rank_;
    }

private:
    CartanType(Kind k, int r) : kind_(k), rank_(r) {}
    Kind kind_;
    int rank_;
};

// Element of the positive root cone Q+: finitely supported multiplicity
// map index -> coefficient >= 0.
class RootVector {
public:
    RootVector() = default;
    static RootVector simple(int i) { RootVector b; b.add(i, 1); return b; }

    void add(int i, int mult = 1);
    int coeff(int i) const;
    int height() const;
    const std::map<int, int>& coeffs() const { return coeffs_; }

    RootVector operator+(const RootVector& o) const;
    bool operator==(const RootVector& o) const { return coeffs_ == o.coeffs_; }
    bool operator<(const RootVector& o) const { return coeffs_ < o.coeffs_; }

private:
    std::map<int, int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RootVector& b);

// Dominant integral weight: multiplicity map index -> coefficient >= 0.
class DominantWeight {
public:
    DominantWeight() = default;
    static DominantWeight fundamental(int i) {
        DominantWeight w;
        w.add(i, 1);
        return w;
    }
    void add(int i, int mult = 1);
    int mult(int i) const;
    const std::map<int, int>& mults() const { return mults_; }
    bool operator==(const DominantWeight& o) const { return mults_ == o.mults_; }

private:
    std::map<int, int> mults_;
};

// (alpha_i, beta)
int bilinear_with_root(const CartanType& ct, int i, const RootVector& beta);
// <alpha_i^vee, Lambda - beta>
int weight_pairing(const CartanType& ct, int i, const DominantWeight& lambda,
                   const RootVector& beta);

}  // namespace specht
