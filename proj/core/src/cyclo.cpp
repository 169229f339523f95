#include "reflcat/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reflcat {

namespace {

/// Per-conductor reduction data, built once and shared (immutable).
struct ConductorContext {
    unsigned ell = 1;
    unsigned phi = 1;
    std::vector<Rational> min_poly; // Phi_l, length phi+1, monic
    // power_row[k] = coefficients of x^k mod Phi_l, k = 0 .. max_pow
    std::vector<std::vector<Rational>> power_row;

    explicit ConductorContext(unsigned l) : ell(l), phi(euler_phi(l)) {
        const auto& zphi = cyclotomic_polynomial(l);
        min_poly.reserve(zphi.size());
        for (const auto& c : zphi) min_poly.emplace_back(c);

        const unsigned max_pow = std::max(2 * phi >= 2 ? 2 * phi - 2 : 0u, l - 1);
        power_row.resize(max_pow + 1);
        for (unsigned k = 0; k <= max_pow && k < phi; ++k) {
            power_row[k].assign(phi, 0);
            power_row[k][k] = 1;
        }
        for (unsigned k = phi; k <= max_pow; ++k) {
            // x^k = x * x^(k-1), folding the spill at degree phi via
            // x^phi = -(Phi_l - x^phi).
            const auto& prev = power_row[k - 1];
            std::vector<Rational> row(phi, 0);
            for (unsigned i = 1; i < phi; ++i) row[i] = prev[i - 1];
            const Rational& spill = prev[phi - 1];
            if (spill != 0)
                for (unsigned i = 0; i < phi; ++i) row[i] -= spill * min_poly[i];
            power_row[k] = std::move(row);
        }
    }

    static const ConductorContext& get(unsigned l) {
        if (l == 0) throw DomainError("conductor must be >= 1");
        static std::mutex mu;
        static std::map<unsigned, std::unique_ptr<ConductorContext>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(l);
        if (it == cache.end())
            it = cache.emplace(l, std::make_unique<ConductorContext>(l)).first;
        return *it->second;
    }
};

// Generic reduction of an arbitrary-degree coefficient vector mod Phi_l.
std::vector<Rational> reduce_mod_phi(const ConductorContext& ctx, std::vector<Rational> raw) {
    if (raw.size() <= ctx.power_row.size()) {
        std::vector<Rational> out(ctx.phi, 0);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (raw[k] == 0) continue;
            if (k < ctx.phi) {
                out[k] += raw[k];
            } else {
                const auto& row = ctx.power_row[k];
                for (unsigned i = 0; i < ctx.phi; ++i) out[i] += raw[k] * row[i];
            }
        }
        return out;
    }
    // Long division fallback for very high degrees.
    for (std::size_t i = raw.size(); i-- > ctx.phi;) {
        Rational c = raw[i];
        if (c == 0) continue;
        raw[i] = 0;
        for (unsigned j = 0; j < ctx.phi; ++j) raw[i - ctx.phi + j] -= c * ctx.min_poly[j];
    }
    raw.resize(ctx.phi);
    return raw;
}

long positive_mod(long k, unsigned l) {
    long m = k % static_cast<long>(l);
    if (m < 0) m += static_cast<long>(l);
    return m;
}

} // namespace

CycloNum::CycloNum() : conductor_(1), coeffs_(1, Rational(0)) {}

CycloNum CycloNum::rational(const Rational& r, unsigned conductor) {
    const auto& ctx = ConductorContext::get(conductor);
    std::vector<Rational> c(ctx.phi, 0);
    c[0] = r;
    return CycloNum(conductor, std::move(c));
}

CycloNum CycloNum::root_of_unity(unsigned conductor, long k) {
    const auto& ctx = ConductorContext::get(conductor);
    const long e = positive_mod(k, conductor);
    std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, 0);
    raw[static_cast<std::size_t>(e)] = 1;
    return CycloNum(conductor, reduce_mod_phi(ctx, std::move(raw)));
}

CycloNum CycloNum::from_coeffs(unsigned conductor, std::vector<Rational> raw) {
    const auto& ctx = ConductorContext::get(conductor);
    return CycloNum(conductor, reduce_mod_phi(ctx, std::move(raw)));
}

bool CycloNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycloNum::is_integer() const { return is_rational() && is_integral(coeffs_[0]); }

Rational CycloNum::to_rational() const {
    if (!is_rational())
        throw DomainError("to_rational on an irrational cyclotomic value: " + str());
    return coeffs_[0];
}

CycloNum CycloNum::promoted(unsigned m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw DomainError("cannot promote conductor " + std::to_string(conductor_) +
                          " into " + std::to_string(m));
    const auto& ctx = ConductorContext::get(m);
    const unsigned stride = m / conductor_;
    std::vector<Rational> out(ctx.phi, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& row = ctx.power_row[i * stride];
        for (unsigned j = 0; j < ctx.phi; ++j) out[j] += coeffs_[i] * row[j];
    }
    return CycloNum(m, std::move(out));
}

CycloNum CycloNum::galois(long t) const {
    const long tm = positive_mod(t, conductor_);
    if (gcd_u(static_cast<unsigned>(tm), conductor_) != 1)
        throw InvalidAutomorphismError("galois exponent " + std::to_string(t) +
                                       " not coprime to conductor " + std::to_string(conductor_));
    const auto& ctx = ConductorContext::get(conductor_);
    std::vector<Rational> out(ctx.phi, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& row = ctx.power_row[(i * static_cast<unsigned long>(tm)) % conductor_];
        for (unsigned j = 0; j < ctx.phi; ++j) out[j] += coeffs_[i] * row[j];
    }
    return CycloNum(conductor_, std::move(out));
}

CycloNum CycloNum::conj() const {
    if (conductor_ <= 2) return *this;
    return galois(static_cast<long>(conductor_) - 1);
}

namespace {

std::size_t poly_degree(const std::vector<Rational>& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d; // number of coefficients; 0 means zero polynomial
}

} // namespace

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic value");
    if (is_rational()) return rational(Rational(1) / coeffs_[0], conductor_);

    // Extended Euclid for gcd(a, Phi_l) over Q[x]; Phi_l is irreducible so
    // the gcd is a nonzero constant c with u*a + v*Phi = c, giving a^-1 = u/c.
    const auto& ctx = ConductorContext::get(conductor_);
    std::vector<Rational> r0 = ctx.min_poly;
    std::vector<Rational> r1 = coeffs_;
    std::vector<Rational> s0{Rational(0)};
    std::vector<Rational> s1{Rational(1)};

    while (true) {
        const std::size_t d1 = poly_degree(r1);
        if (d1 == 0) throw ComputationError("xgcd hit zero remainder before a constant");
        if (d1 == 1) break; // r1 is a nonzero constant
        // r0 = q*r1 + rem
        std::vector<Rational> rem = r0;
        const std::size_t d0 = poly_degree(rem);
        std::vector<Rational> q(d0 >= d1 ? d0 - d1 + 1 : 1, 0);
        const Rational lead = r1[d1 - 1];
        for (std::size_t i = d0; i-- > d1 - 1;) {
            if (rem[i] == 0) continue;
            Rational f = rem[i] / lead;
            q[i + 1 - d1] = f;
            for (std::size_t j = 0; j < d1; ++j) rem[i + 1 - d1 + j] -= f * r1[j];
        }
        // s2 = s0 - q*s1
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }

    const Rational c = r1[0];
    std::vector<Rational> u = std::move(s1);
    for (auto& x : u) x /= c;
    return CycloNum(conductor_, reduce_mod_phi(ctx, std::move(u)));
}

CycloNum CycloNum::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return CycloNum(conductor_, std::move(c));
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (conductor_ == o.conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    const unsigned l = static_cast<unsigned>(lcm_u(conductor_, o.conductor_));
    *this = promoted(l);
    return *this += o.promoted(l);
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (conductor_ == o.conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    const unsigned l = static_cast<unsigned>(lcm_u(conductor_, o.conductor_));
    *this = promoted(l);
    return *this -= o.promoted(l);
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (conductor_ != o.conductor_) {
        const unsigned l = static_cast<unsigned>(lcm_u(conductor_, o.conductor_));
        *this = promoted(l);
        return *this *= o.promoted(l);
    }
    const auto& ctx = ConductorContext::get(conductor_);
    const unsigned phi = ctx.phi;
    std::vector<Rational> prod(2 * phi - 1, 0);
    for (unsigned i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce_mod_phi(ctx, std::move(prod));
    return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const unsigned l = static_cast<unsigned>(lcm_u(a.conductor_, b.conductor_));
    return a.promoted(l).coeffs_ == b.promoted(l).coeffs_;
}

std::string CycloNum::key() const {
    std::string s = std::to_string(conductor_);
    s += ':';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += coeffs_[i].get_str();
    }
    return s;
}

std::string CycloNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "z" << conductor_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycloNum pow(const CycloNum& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    CycloNum acc = CycloNum::rational(1, a.conductor());
    CycloNum base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool is_root_of_unity(const CycloNum& a) {
    if (a.is_zero()) return false;
    const CycloNum one = CycloNum::rational(1, a.conductor());
    CycloNum p = a;
    for (unsigned m = 1; m <= 2 * a.conductor(); ++m) {
        if (p == one) return true;
        p *= a;
    }
    return false;
}

} // namespace reflcat
