#include "reflcat/numtheory.hpp"

#include "reflcat/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace reflcat {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

unsigned euler_phi(unsigned n) {
    if (n == 0) throw DomainError("euler_phi(0)");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

// Exact division a / b in Z[x] for monic b; remainder must vanish.
std::vector<Integer> div_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw ComputationError("cyclotomic division underflow");
    std::vector<Integer> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw ComputationError("cyclotomic division not exact");
    return q;
}

std::vector<Integer> compute_cyclotomic(unsigned l) {
    // x^l - 1
    std::vector<Integer> num(l + 1, 0);
    num[0] = -1;
    num[l] = 1;
    for (unsigned d : divisors(l)) {
        if (d == l) continue;
        num = div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned l) {
    if (l == 0) throw DomainError("cyclotomic_polynomial(0)");
    static std::mutex mu;
    static std::map<unsigned, std::vector<Integer>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(l);
        if (it != cache.end()) return it->second;
    }
    // Compute outside the lock; divisor recursion re-enters this function.
    std::vector<Integer> phi = compute_cyclotomic(l);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(l, std::move(phi)).first->second;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace reflcat
