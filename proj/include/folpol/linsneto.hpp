#pragma once
#include <array>
#include <string>

namespace folpol {

// a + b j with j a primitive cube root of unity, j^2 = -1 - j.
struct EisensteinInt {
    long long a = 0, b = 0;

    EisensteinInt() = default;
    EisensteinInt(long long a_, long long b_ = 0) : a(a_), b(b_) {}
    static EisensteinInt j() { return {0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    EisensteinInt conj() const { return {a - b, -b}; }
    EisensteinInt operator-() const { return {-a, -b}; }
    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) { return {x.a - y.a, x.b - y.b}; }
    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const EisensteinInt& x, const EisensteinInt& y) { return !(x == y); }
    std::string str() const;
};

long long norm(const EisensteinInt& z);  // a^2 - ab + b^2
// Euclidean division with N(r) < N(y).
void divmod(const EisensteinInt& x, const EisensteinInt& y, EisensteinInt& q, EisensteinInt& r);
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);
bool is_unit(const EisensteinInt& z);

struct PencilDegree {
    EisensteinInt alpha1, beta1;  // coprime numerator and denominator
    std::array<long long, 4> N{};
    long long radicand = 0;
    long long d0_radicand = 0;  // 3 + sqrt(radicand), -1 when not a perfect square
    long long d0_norms = 0;     // N1 + N2 + N3 + N4
    bool agree() const { return d0_radicand == d0_norms; }
};
// Degree of a generic invariant curve of the pencil member alpha = num / den.
PencilDegree pencil_degree(const EisensteinInt& num, const EisensteinInt& den);

// (S, F_inf) - (S, F_0 minus S) for N invariant lines through a radial point.
int radial_local_terms(int N);
struct RadialCheck {
    int closed_form = 0;
    int engine = 0;
    int to_poles = 0, to_rest = 0;
};
// Builds x dy - y dx, the lines y = k x (k = 1..N) and an adapted balanced equation.
RadialCheck radial_local_terms_engine(int N);

}  // namespace folpol
