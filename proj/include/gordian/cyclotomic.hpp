#pragma once

#include <gordian/polynomial.hpp>

#include <map>
#include <mutex>

namespace gordian {

/// Phi_n, by dividing x^n - 1 by Phi_d for every proper divisor d.
inline IntPoly cyclotomic(unsigned long n) {
    if (n == 0) throw DomainError("cyclotomic index must be positive");
    static std::mutex mu;
    static std::map<unsigned long, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly p = IntPoly::monomial(1, n) - IntPoly::constant(1);
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d == 0) p = exact_quotient(p, cyclotomic(d));
    }
    std::lock_guard lock(mu);
    cache.emplace(n, p);
    return p;
}

/// True when the monic polynomial b divides a in Z[x].
inline bool divides_monic(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero() || b.lead() != 1) throw DomainError("divides_monic needs a monic divisor");
    std::vector<Integer> r = a.coeffs();
    const long db = b.degree();
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        const long shift = static_cast<long>(r.size()) - 1 - db;
        const Integer lr = r.back();
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(shift + i)] -= lr * b.coeffs()[static_cast<std::size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r.empty();
}

/// True when q(2cos(2 pi m/n)) == 0 for a reduced fraction m/n.
/// 2cos(2 pi m/n) has degree phi(n)/2 >= sqrt(n/2)/2 over Q, so large n
/// cannot be a root of a low-degree q and needs no cyclotomic work.
inline bool vanishes_at_rational_turn(const IntPoly& q, const Integer& n) {
    if (q.is_zero()) return true;
    const long deg = q.degree();
    if (deg == 0) return false;
    if (n > Integer(8) * deg * deg) return false;
    // L(t) = t^deg q(t + 1/t) vanishes at primitive n-th roots of unity iff Phi_n | L.
    IntPoly t2p1({1, 0, 1});
    IntPoly L;
    IntPoly pw = IntPoly::constant(1);
    for (long i = 0; i <= deg; ++i) {
        if (q.coeff(static_cast<std::size_t>(i)) != 0) {
            L = L + q.coeff(static_cast<std::size_t>(i)) * (pw * IntPoly::monomial(1, static_cast<std::size_t>(deg - i)));
        }
        pw = pw * t2p1;
    }
    return divides_monic(cyclotomic(static_cast<unsigned long>(n)), L);
}

}  // namespace gordian
