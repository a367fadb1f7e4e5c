#ifndef SIGNSYM_ARITH_HPP
#define SIGNSYM_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "signsym/perm.hpp"

namespace signsym::arith {

// Canonical representative of q mod n in [0, n).
inline long long mod_reduce(long long q, long long n) {
    long long r = q % n;
    return r < 0 ? r + n : r;
}

// Jacobi symbol (a | n) for odd n >= 1, arbitrary a.
// Multiplicative in both arguments; (a | 1) = 1.
inline Sign jacobi(long long a, long long n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd and positive");
    a = mod_reduce(a, n);
    if (n == 1) return 1;
    if (std::gcd(a, n) != 1) throw std::domain_error("jacobi: gcd(a, n) != 1");
    Sign s = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long m8 = n % 8;
            if (m8 == 3 || m8 == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : throw std::logic_error("jacobi: internal");
}

// (-1)^((q-1)/2) read off the residue of q mod 4 (q odd, possibly negative).
inline Sign minus_one_to_half(long long q) {
    if (q % 2 == 0) throw std::domain_error("minus_one_to_half: q must be odd");
    return mod_reduce(q, 4) == 1 ? 1 : -1;
}

// The multiplication-by-q permutation of Z/nZ, or of its quotient by
// negation when eps = -1 (class of x canonically represented by min(x, n-x)).
inline FinitePermutation mult_permutation(long long n, long long q, Sign eps) {
    if (n <= 0) throw std::domain_error("mult_permutation: n must be positive");
    q = mod_reduce(q, n);
    if (std::gcd(q == 0 ? n : q, n) != 1) throw std::domain_error("mult_permutation: gcd(q, n) != 1");
    if (eps == 1) {
        std::vector<size_t> img(static_cast<size_t>(n));
        for (long long x = 0; x < n; ++x) img[static_cast<size_t>(x)] = static_cast<size_t>((x * q) % n);
        return FinitePermutation(std::move(img));
    }
    sign_check(eps);
    long long classes = n / 2 + 1; // representatives 0..floor(n/2)
    std::vector<size_t> img(static_cast<size_t>(classes));
    for (long long x = 0; x < classes; ++x) {
        long long y = (x * q) % n;
        long long rep = std::min(y, (n - y) % n);
        img[static_cast<size_t>(x)] = static_cast<size_t>(rep);
    }
    return FinitePermutation(std::move(img));
}

// Brute-force sign of multiplication by q on <eps> \ Z/nZ. This is the
// oracle against which the closed forms below are validated.
inline Sign sgn_eps_bruteforce(long long n, long long q, Sign eps) {
    return mult_permutation(n, q, eps).sign();
}

// Closed form for sgn+_n(q), by the four-way case split on n mod 4.
inline Sign sgn_plus(long long n, long long q) {
    if (n <= 0) throw std::domain_error("sgn_plus: n must be positive");
    q = mod_reduce(q, n);
    if (std::gcd(q == 0 ? n : q, n) != 1) throw std::domain_error("sgn_plus: gcd(q, n) != 1");
    if (n <= 2) return 1;
    switch (n % 4) {
        case 0: return minus_one_to_half(q);
        case 1:
        case 3: return jacobi(q, n);
        default: return 1; // n = 2 mod 4
    }
}

// Closed form for sgn-_n(q).
inline Sign sgn_minus(long long n, long long q) {
    if (n <= 0) throw std::domain_error("sgn_minus: n must be positive");
    q = mod_reduce(q, n);
    if (std::gcd(q == 0 ? n : q, n) != 1) throw std::domain_error("sgn_minus: gcd(q, n) != 1");
    if (n <= 2) return 1;
    switch (n % 4) {
        case 0: return jacobi(n, q); // q is odd here since gcd(q, n) = 1
        case 1: return jacobi(q, n);
        default: return 1; // n = 2, 3 mod 4
    }
}

struct SignPair {
    Sign lhs;
    Sign rhs;
    bool consistent() const { return lhs == rhs; }
};

// Both sides of the multiplicative decomposition of sgn+_{mn}, evaluated by
// brute force: sgn+_{mn}(q) vs sgn+_m(q)^n * sgn+_n(q)^m.
inline SignPair crt_plus_sides(long long m, long long n, long long q) {
    if (std::gcd(m, n) != 1) throw std::domain_error("crt check: gcd(m, n) != 1");
    Sign lhs = sgn_eps_bruteforce(m * n, q, +1);
    Sign a = sgn_eps_bruteforce(m, q, +1);
    Sign b = sgn_eps_bruteforce(n, q, +1);
    Sign rhs = 1;
    if (n % 2 == 1 && a == -1) rhs = -rhs;
    if (m % 2 == 1 && b == -1) rhs = -rhs;
    return {lhs, rhs};
}

// Both sides of the decomposition of sgn-_{mn}(q):
//   sgn+_m(q)^floor((n-1)/2) * sgn-_m(q)^n * sgn+_n(q)^floor((m-1)/2) * sgn-_n(q)^m.
// The cross exponent on the sgn+ factors is floor((n-1)/2): the number of
// negation-free classes of Z/nZ, i.e. ceil((n+1)/2) minus the number of
// 2-torsion points.
inline SignPair crt_minus_sides(long long m, long long n, long long q) {
    if (std::gcd(m, n) != 1) throw std::domain_error("crt check: gcd(m, n) != 1");
    Sign lhs = sgn_eps_bruteforce(m * n, q, -1);
    auto pow_sign = [](Sign s, long long e) { return (e % 2 == 0) ? 1 : s; };
    Sign rhs = 1;
    rhs *= pow_sign(sgn_eps_bruteforce(m, q, +1), (n - 1) / 2);
    rhs *= pow_sign(sgn_eps_bruteforce(m, q, -1), n);
    rhs *= pow_sign(sgn_eps_bruteforce(n, q, +1), (m - 1) / 2);
    rhs *= pow_sign(sgn_eps_bruteforce(n, q, -1), m);
    return {lhs, rhs};
}

} // namespace signsym::arith

#endif
