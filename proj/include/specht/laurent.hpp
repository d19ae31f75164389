#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <iosfwd>

namespace specht {

// Integer Laurent polynomial in q.  No zero coefficients are stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(long long constant);                       // NOLINT(implicit)
    static Laurent q_power(int e, long long c = 1);

    bool is_zero() const { return c_.empty(); }
    long long coeff(int e) const;
    const std::map<int, long long>& coeffs() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return c_ != o.c_; }

    long long at_one() const;                          // evaluate at q = 1
    Laurent bar() const;                               // q -> q^{-1}

    std::string to_string() const;                     // e.g. "q^-1+2+q^3"

private:
    void set(int e, long long v);
    std::map<int, long long> c_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

// Balanced quantum integer [n]_q = (q^n - q^-n)/(q - q^-1), n >= 0.
Laurent quantum_integer(int n);
// [n]_{q_i} with q_i = q^d.
Laurent quantum_integer_scaled(int n, int d);

}  // namespace specht
