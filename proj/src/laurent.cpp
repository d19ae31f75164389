#include "specht/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace specht {

Laurent::Laurent(long long constant) {
    if (constant != 0) c_[0] = constant;
}

Laurent Laurent::q_power(int e, long long c) {
    Laurent p;
    if (c != 0) p.c_[e] = c;
    return p;
}

long long Laurent::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
}

void Laurent::set(int e, long long v) {
    if (v == 0) c_.erase(e);
    else c_[e] = v;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (auto& [e, v] : o.c_) set(e, coeff(e) + v);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (auto& [e, v] : o.c_) set(e, coeff(e) - v);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    return r += o;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    return r -= o;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto& [e1, v1] : c_)
        for (auto& [e2, v2] : o.c_) r.set(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

long long Laurent::at_one() const {
    long long s = 0;
    for (auto& [e, v] : c_) s += v;
    return s;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

std::string Laurent::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
        if (!first && v > 0) os << "+";
        first = false;
        if (e == 0) {
            os << v;
            continue;
        }
        if (v == -1) os << "-";
        else if (v != 1) os << v << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) {
    return os << p.to_string();
}

Laurent quantum_integer(int n) {
    if (n < 0) throw std::invalid_argument("quantum integer of negative n");
    return quantum_integer_scaled(n, 1);
}

Laurent quantum_integer_scaled(int n, int d) {
    bool neg = n < 0;
    if (neg) n = -n;
    Laurent p;
    for (int e = -(n - 1); e <= n - 1; e += 2) p += Laurent::q_power(e * d);
    return neg ? -p : p;
}

}  // namespace specht
