#include "reflcat/invariants.hpp"

#include "reflcat/errors.hpp"

#include <map>
#include <mutex>

namespace reflcat {

namespace {

// (1/|W|) sum_w chi(w^-1) / det(I - qw), truncated at D. The sum is grouped
// by characteristic polynomial (a class function), so only one series
// inversion runs per distinct det(I - qw).
QSeries molien_average(const ReflectionGroup& g, const CharacterFn* chi, unsigned trunc) {
    const auto& classes = g.char_poly_classes();
    std::vector<CycloNum> weight(classes.polys.size(), CycloNum::rational(0, g.conductor()));
    const CycloNum one = CycloNum::rational(1, g.conductor());
    for (std::size_t i = 0; i < g.order(); ++i) {
        const CycloNum& v = chi ? chi->value(g.inverse_index(i)) : one;
        weight[classes.slot[i]] += v;
    }
    QSeries acc(trunc);
    for (std::size_t s = 0; s < classes.polys.size(); ++s) {
        if (weight[s].is_zero()) continue;
        acc.add_scaled(QSeries::inverse_of_poly(classes.polys[s], trunc), weight[s]);
    }
    Rational scale(1);
    scale /= static_cast<unsigned long>(g.order());
    return acc.scaled(CycloNum::rational(scale, g.conductor()));
}

} // namespace

namespace {

QPolynomial fake_degree_given(const ReflectionGroup& g, const CharacterFn& chi,
                              const std::vector<unsigned>& degrees) {
    const unsigned trunc = series_truncation(g);
    QSeries s = molien_average(g, &chi, trunc);
    // multiplicity series in P times Hilb(P^W)^-1 = prod (1 - q^(d_i))
    for (unsigned d : degrees) s.mul_one_minus_qd(d);

    const unsigned nstar = g.N_star();
    std::vector<Rational> coeffs(nstar + 1, 0);
    Rational total(0);
    for (unsigned k = 0; k <= trunc; ++k) {
        const CycloNum& c = s.coeff(k);
        if (c.is_zero()) continue;
        if (k > nstar)
            throw ComputationError(g.spec().str() + ": fake degree coefficient above N* (char " +
                                   chi.label() + ")");
        if (!c.is_integer() || c.to_rational() < 0)
            throw ComputationError(g.spec().str() +
                                   ": fake degree has a non-integral or negative coefficient (char " +
                                   chi.label() + ")");
        coeffs[k] = c.to_rational();
        total += coeffs[k];
    }
    if (total != chi.dim())
        throw ComputationError(g.spec().str() +
                               ": fake degree coefficients do not sum to dim (char " +
                               chi.label() + ")");
    return QPolynomial(std::move(coeffs));
}

std::vector<unsigned> exponents_of(const QPolynomial& f, unsigned dim) {
    std::vector<unsigned> out;
    out.reserve(dim);
    const auto& c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const unsigned long mult = c[k].get_num().get_ui();
        for (unsigned long i = 0; i < mult; ++i) out.push_back(static_cast<unsigned>(k));
    }
    return out;
}

} // namespace

QSeries hilbert_invariants(const ReflectionGroup& g) {
    QSeries s = molien_average(g, nullptr, series_truncation(g));
    for (unsigned k = 0; k <= s.trunc_order(); ++k) {
        if (!s.coeff(k).is_integer() || s.coeff(k).to_rational() < 0)
            throw ComputationError(g.spec().str() +
                                   ": Molien series has a non-integral or negative coefficient");
    }
    return s;
}

InvariantProfile compute_invariant_profile(const ReflectionGroup& g) {
    const unsigned trunc = series_truncation(g);
    QSeries hilbert = hilbert_invariants(g);

    // Greedy degree peeling, smallest exponent first: the least k >= 1 with a
    // nonzero coefficient is the next degree; multiply by (1 - q^k) and
    // repeat n times. The final series must collapse to 1.
    QSeries work = hilbert;
    std::vector<unsigned> degrees;
    for (unsigned step = 0; step < g.rank(); ++step) {
        unsigned d = 0;
        for (unsigned k = 1; k <= trunc; ++k) {
            if (!work.coeff(k).is_zero()) {
                if (work.coeff(k).to_rational() < 0)
                    throw ComputationError(g.spec().str() + ": negative discrepancy while peeling");
                d = k;
                break;
            }
        }
        if (d == 0)
            throw ComputationError(g.spec().str() + ": Molien series exhausted before rank degrees");
        degrees.push_back(d);
        work.mul_one_minus_qd(d);
    }
    if (!work.is_one())
        throw ComputationError(g.spec().str() +
                               ": invariant ring is not a polynomial algebra on the peeled degrees");

    // Classical identities.
    Integer prod = 1;
    unsigned long sum = 0;
    for (unsigned d : degrees) {
        prod *= d;
        sum += d;
    }
    if (prod != static_cast<unsigned long>(g.order()))
        throw ComputationError(g.spec().str() + ": product of degrees does not equal |W|");
    if (sum != static_cast<unsigned long>(g.N_star()) + g.rank())
        throw ComputationError(g.spec().str() + ": sum of degrees does not equal N* + n");

    if (!g.expected_degrees().empty() && degrees != g.expected_degrees())
        throw InvariantViolationError(g.spec().str() +
                                      ": computed degrees disagree with the catalog");

    InvariantProfile profile{std::move(degrees), {}, std::move(hilbert)};
    const CharacterFn vdual = character(g, CharLabel::v_dual());
    profile.coexponents = exponents_of(fake_degree_given(g, vdual, profile.degrees), vdual.dim());
    return profile;
}

const InvariantProfile& invariant_profile(const ReflectionGroup& g) {
    static std::mutex mu;
    static std::map<std::string, InvariantProfile> cache;
    const std::string key = g.spec().str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    InvariantProfile p = compute_invariant_profile(g);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(p)).first->second;
}

QPolynomial fake_degree(const ReflectionGroup& g, const CharacterFn& chi) {
    const unsigned trunc = series_truncation(g);
    QSeries s = molien_average(g, &chi, trunc);
    // multiplicity series in P times Hilb(P^W)^-1 = prod (1 - q^(d_i))
    for (unsigned d : invariant_profile(g).degrees) s.mul_one_minus_qd(d);

    const unsigned nstar = g.N_star();
    std::vector<Rational> coeffs(nstar + 1, 0);
    Rational total(0);
    for (unsigned k = 0; k <= trunc; ++k) {
        const CycloNum& c = s.coeff(k);
        if (c.is_zero()) continue;
        if (k > nstar)
            throw ComputationError(g.spec().str() + ": fake degree coefficient above N* (char " +
                                   chi.label() + ")");
        if (!c.is_integer() || c.to_rational() < 0)
            throw ComputationError(g.spec().str() +
                                   ": fake degree has a non-integral or negative coefficient (char " +
                                   chi.label() + ")");
        coeffs[k] = c.to_rational();
        total += coeffs[k];
    }
    if (total != chi.dim())
        throw ComputationError(g.spec().str() +
                               ": fake degree coefficients do not sum to dim (char " +
                               chi.label() + ")");
    return QPolynomial(std::move(coeffs));
}

std::vector<unsigned> exponents(const ReflectionGroup& g, const CharacterFn& chi) {
    const QPolynomial f = fake_degree(g, chi);
    std::vector<unsigned> out;
    out.reserve(chi.dim());
    const auto& c = f.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        const unsigned long mult = c[k].get_num().get_ui();
        for (unsigned long i = 0; i < mult; ++i) out.push_back(static_cast<unsigned>(k));
    }
    return out;
}

long c_value(const ReflectionGroup& g, const CharacterFn& chi) {
    const Rational dim(chi.dim());
    CycloNum acc = CycloNum::rational(0, g.conductor());
    const CycloNum one = CycloNum::rational(1, g.conductor());
    for (const auto& r : g.reflections())
        acc += one - chi.value(r.element) * CycloNum::rational(Rational(1) / dim, g.conductor());
    if (!acc.is_integer())
        throw DomainError(g.spec().str() + ": character \"" + chi.label() +
                          "\" is not z-homogeneous (c value " + acc.str() + ")");
    const long c = static_cast<long>(acc.to_rational().get_num().get_si());

    // Independent route through the local data (the z = N + N* - sum over
    // stabilizers identity): c_U = N + N* - (1/dim) sum_H e_H n_{H,0}.
    Rational cross = Rational(g.N()) + Rational(g.N_star());
    Rational stab(0);
    for (std::size_t hidx = 0; hidx < g.hyperplanes().size(); ++hidx) {
        const auto nh = local_data(g, hidx, chi);
        stab += Rational(g.hyperplanes()[hidx].e_H) * Rational(static_cast<unsigned long>(nh[0]));
    }
    cross -= stab / dim;
    if (cross != c)
        throw ComputationError(g.spec().str() + ": c_U cross-check failed for \"" + chi.label() +
                               "\"");
    return c;
}

std::vector<unsigned long> local_data(const ReflectionGroup& g, std::size_t hyperplane,
                                      const CharacterFn& chi) {
    const Hyperplane& hp = g.hyperplanes()[hyperplane];
    const unsigned eH = hp.e_H;
    std::vector<unsigned long> out(eH);
    unsigned long total = 0;
    for (unsigned j = 0; j < eH; ++j) {
        // n_{H,j} = (1/e_H) sum_{w in W_H} chi(w) det(w)^j
        CycloNum acc = chi.value(0); // identity contributes chi(1) * 1
        for (std::uint32_t ridx : hp.reflections)
            acc += chi.value(ridx) * pow(g.element_det(ridx), j);
        acc *= CycloNum::rational(Rational(1, eH), g.conductor());
        if (!acc.is_integer() || acc.to_rational() < 0)
            throw ComputationError(g.spec().str() + ": non-integral local datum for \"" +
                                   chi.label() + "\" at hyperplane " + std::to_string(hyperplane));
        out[j] = acc.to_rational().get_num().get_ui();
        total += out[j];
    }
    if (total != chi.dim())
        throw ComputationError(g.spec().str() + ": local data do not sum to dim for \"" +
                               chi.label() + "\"");
    return out;
}

} // namespace reflcat
