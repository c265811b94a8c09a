#include "folpol/linsneto.hpp"

#include <cmath>

#include "folpol/errors.hpp"
#include "folpol/parse.hpp"
#include "folpol/projective.hpp"

namespace folpol {

std::string EisensteinInt::str() const {
    if (b == 0) return std::to_string(a);
    std::string jb = (b == 1 ? "" : b == -1 ? "-" : std::to_string(b)) + "j";
    if (a == 0) return jb;
    return std::to_string(a) + (b > 0 ? " + " : " - ") + (b > 0 ? jb : jb.substr(1));
}

long long norm(const EisensteinInt& z) { return z.a * z.a - z.a * z.b + z.b * z.b; }

namespace {

long long round_div(long long n, long long d) {
    // nearest integer to n / d, d > 0
    long long q = n / d, r = n % d;
    if (r < 0) r += d, --q;
    if (2 * r >= d) ++q;
    return q;
}

}  // namespace

void divmod(const EisensteinInt& x, const EisensteinInt& y, EisensteinInt& q, EisensteinInt& r) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    long long n = norm(y);
    EisensteinInt p = x * y.conj();
    q = {round_div(p.a, n), round_div(p.b, n)};
    r = x - q * y;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    while (!y.is_zero()) {
        EisensteinInt q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

bool is_unit(const EisensteinInt& z) { return norm(z) == 1; }

PencilDegree pencil_degree(const EisensteinInt& num, const EisensteinInt& den) {
    PencilDegree r;
    if (den.is_zero()) throw ExcludedParameter("alpha = infinity");
    EisensteinInt g = gcd(num, den);
    EisensteinInt rem;
    divmod(num, g, r.alpha1, rem);
    divmod(den, g, r.beta1, rem);
    const EisensteinInt& a = r.alpha1;
    const EisensteinInt& b = r.beta1;
    EisensteinInt j = EisensteinInt::j();
    if (a == b) throw ExcludedParameter("alpha = 1");
    if (a == j * b) throw ExcludedParameter("alpha = j");
    if (a == j * j * b) throw ExcludedParameter("alpha = j^2");
    r.N = {norm(a), norm(b), norm(a - b), norm(a + j * b)};
    r.radicand = 9;
    for (long long n : r.N) r.radicand += 3 * (n * n - 2 * n);
    long long s = r.radicand < 0 ? -1 : std::llround(std::sqrt(static_cast<long double>(r.radicand)));
    while (s > 0 && s * s > r.radicand) --s;
    while (s >= 0 && (s + 1) * (s + 1) <= r.radicand) ++s;
    r.d0_radicand = (s >= 0 && s * s == r.radicand) ? 3 + s : -1;
    r.d0_norms = r.N[0] + r.N[1] + r.N[2] + r.N[3];
    return r;
}

int radial_local_terms(int N) {
    if (N < 1) throw InvalidInput("N must be positive");
    return N * N - 2 * N;
}

RadialCheck radial_local_terms_engine(int N) {
    RadialCheck r;
    r.closed_form = radial_local_terms(N);
    BivariatePoly S(1);
    for (int k = 1; k <= N; ++k) S *= BivariatePoly::y() - BivariatePoly::x() * Scalar(k);
    LocalCurveTerm t = local_curve_term(parse_form("x dy - y dx"), S);
    r.to_poles = t.to_poles;
    r.to_rest = t.to_rest;
    r.engine = t.correction();
    return r;
}

}  // namespace folpol
