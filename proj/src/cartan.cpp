#include "specht/cartan.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace specht {

CartanType CartanType::affine(int rank) {
    if (rank < 2) throw std::invalid_argument("affine rank must be >= 2");
    return CartanType(Kind::c_affine, rank);
}

bool CartanType::valid_index(int i) const {
    if (i < 0) return false;
    return is_affine() ? i <= rank_ : true;
}

void CartanType::check_index(int i) const {
    if (!valid_index(i)) throw std::out_of_range("index outside I");
}

int CartanType::symmetrizer(int i) const {
    check_index(i);
    if (i == 0) return 2;
    if (is_affine() && i == rank_) return 2;
    return 1;
}

int CartanType::cartan(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return 2;
    if (i == 1 && j == 0) return -2;
    if (is_affine() && i == rank_ - 1 && j == rank_) return -2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
}

int CartanType::bilinear(int i, int j) const {
    return symmetrizer(i) * cartan(i, j);
}

int CartanType::residue(long long k) const {
    if (!is_affine()) return static_cast<int>(std::llabs(k));
    const long long m = 2LL * rank_;
    long long r = ((k % m) + m) % m;
    return static_cast<int>(r <= rank_ ? r : m - r);
}

void RootVector::add(int i, int mult) {
    if (mult == 0) return;
    int& c = coeffs_[i];
    c += mult;
    if (c < 0) throw std::invalid_argument("negative root coefficient");
    if (c == 0) coeffs_.erase(i);
}

int RootVector::coeff(int i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? 0 : it->second;
}

int RootVector::height() const {
    int h = 0;
    for (auto& [i, c] : coeffs_) h += c;
    return h;
}

RootVector RootVector::operator+(const RootVector& o) const {
    RootVector out = *this;
    for (auto& [i, c] : o.coeffs_) out.add(i, c);
    return out;
}

std::ostream& operator<<(std::ostream& os, const RootVector& b) {
    bool first = true;
    for (auto& [i, c] : b.coeffs()) {
        if (!first) os << "+";
        first = false;
        if (c != 1) os << c << "*";
        os << "a" << i;
    }
    if (first) os << "0";
    return os;
}

void DominantWeight::add(int i, int mult) {
    if (mult == 0) return;
    int& c = mults_[i];
    c += mult;
    if (c < 0) throw std::invalid_argument("negative weight multiplicity");
    if (c == 0) mults_.erase(i);
}

int DominantWeight::mult(int i) const {
    auto it = mults_.find(i);
    return it == mults_.end() ? 0 : it->second;
}

int bilinear_with_root(const CartanType& ct, int i, const RootVector& beta) {
    int s = 0;
    for (auto& [j, c] : beta.coeffs()) s += c * ct.bilinear(i, j);
    return s;
}

int weight_pairing(const CartanType& ct, int i, const DominantWeight& lambda,
                   const RootVector& beta) {
    ct.check_index(i);
    int s = lambda.mult(i);
    for (auto& [j, c] : beta.coeffs()) s -= c * ct.cartan(i, j);
    return s;
}

}  // namespace specht
