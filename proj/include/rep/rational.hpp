#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace rep {

// Exact rational scalar. All arithmetic in the toolkit goes through this
// type; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

// a + eps*b with eps^2 = 0; the value part of any computation agrees with
// the plain rational computation on the value parts.
struct DualScalar {
    Rat a;  // value part
    Rat b;  // infinitesimal part

    DualScalar() : a(0), b(0) {}
    DualScalar(Rat value) : a(std::move(value)), b(0) {}
    DualScalar(Rat value, Rat eps) : a(std::move(value)), b(std::move(eps)) {}

    DualScalar& operator+=(const DualScalar& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    DualScalar& operator-=(const DualScalar& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    DualScalar& operator*=(const DualScalar& o) {
        b = a * o.b + b * o.a;
        a *= o.a;
        return *this;
    }

    friend DualScalar operator+(DualScalar x, const DualScalar& y) { return x += y; }
    friend DualScalar operator-(DualScalar x, const DualScalar& y) { return x -= y; }
    friend DualScalar operator*(DualScalar x, const DualScalar& y) { return x *= y; }
    friend bool operator==(const DualScalar& x, const DualScalar& y) {
        return x.a == y.a && x.b == y.b;
    }
};

}  // namespace rep
