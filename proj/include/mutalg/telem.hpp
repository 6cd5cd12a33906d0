#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

namespace mutalg {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; long is 64-bit on the supported targets
inline Int to_int(long long x) { return Int(static_cast<long>(x)); }

// Element a + b t of Z[t]/(t^2 - 1).
struct TElem {
    Int a = 0;
    Int b = 0;

    TElem() = default;
    TElem(long a_) : a(a_), b(0) {}
    TElem(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    TElem(long long a_, long long b_) : a(to_int(a_)), b(to_int(b_)) {}

    static TElem t() { return TElem(0, 1); }

    bool is_zero() const { return a == 0 && b == 0; }
    // a pure element lies in Z or in tZ
    bool is_pure() const { return a == 0 || b == 0; }
    bool in_z() const { return b == 0; }
    bool in_tz() const { return a == 0; }

    Int eval_at(int s) const { return s == 1 ? Int(a + b) : Int(a - b); }

    TElem times_t() const { return TElem(b, a); }

    friend bool operator==(const TElem& x, const TElem& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const TElem& x, const TElem& y) { return !(x == y); }

    friend TElem operator+(const TElem& x, const TElem& y) { return TElem(x.a + y.a, x.b + y.b); }
    friend TElem operator-(const TElem& x, const TElem& y) { return TElem(x.a - y.a, x.b - y.b); }
    friend TElem operator-(const TElem& x) { return TElem(-x.a, -x.b); }
    friend TElem operator*(const TElem& x, const TElem& y) {
        return TElem(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend TElem operator*(const Int& k, const TElem& x) { return TElem(k * x.a, k * x.b); }

    TElem& operator+=(const TElem& y) { a += y.a; b += y.b; return *this; }
};

// sgn(a + bt) = sgn(a + b)
int t_sign(const TElem& x);

// "a+bt" with the abbreviations "0", "t", "-t", "3", "-2t", "1-t"
std::string to_string(const TElem& x);

// Accepts the forms produced by to_string; throws std::invalid_argument otherwise.
TElem parse_telem(const std::string& s);

std::ostream& operator<<(std::ostream& os, const TElem& x);

}  // namespace mutalg
