#include "reflcat/groups.hpp"

#include "reflcat/errors.hpp"
#include "reflcat/numtheory.hpp"
#include "reflcat/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace reflcat {

namespace {

unsigned long factorial(unsigned n) {
    unsigned long f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

unsigned long ipow(unsigned long b, unsigned e) {
    unsigned long r = 1;
    while (e--) r *= b;
    return r;
}

// Reflections of Sym(n) acting on the irreducible (n-1)-dimensional root
// basis of A_(n-1): s_i = I - e_i * C_i where C is the Cartan matrix.
std::vector<CycMatrix> sym_generators(unsigned n) {
    const unsigned r = n - 1;
    std::vector<CycMatrix> gens;
    for (unsigned i = 0; i < r; ++i) {
        CycMatrix m = CycMatrix::identity(r, 1);
        m.set(i, i, CycloNum::rational(-1, 1));
        if (i > 0) m.set(i, i - 1, CycloNum::rational(1, 1));
        if (i + 1 < r) m.set(i, i + 1, CycloNum::rational(1, 1));
        gens.push_back(std::move(m));
    }
    return gens;
}

std::vector<CycMatrix> imprimitive_generators(unsigned de, unsigned e, unsigned n) {
    const unsigned d = de / e;
    std::vector<CycMatrix> gens;
    if (d > 1) {
        CycMatrix t = CycMatrix::identity(n, de);
        t.set(0, 0, CycloNum::root_of_unity(de, static_cast<long>(e)));
        gens.push_back(std::move(t));
    }
    if (e > 1 && n >= 2) {
        // e1 -> zeta^(-1) e2, e2 -> zeta e1
        CycMatrix s = CycMatrix::identity(n, de);
        s.set(0, 0, CycloNum::rational(0, de));
        s.set(1, 1, CycloNum::rational(0, de));
        s.set(1, 0, CycloNum::root_of_unity(de, -1));
        s.set(0, 1, CycloNum::root_of_unity(de, 1));
        gens.push_back(std::move(s));
    }
    for (unsigned i = 0; i + 1 < n; ++i) {
        CycMatrix p = CycMatrix::identity(n, de);
        p.set(i, i, CycloNum::rational(0, de));
        p.set(i + 1, i + 1, CycloNum::rational(0, de));
        p.set(i, i + 1, CycloNum::rational(1, de));
        p.set(i + 1, i, CycloNum::rational(1, de));
        gens.push_back(std::move(p));
    }
    return gens;
}

const std::set<unsigned>& supported_st_numbers() {
    static const std::set<unsigned> k = {4, 7, 11, 12, 13, 15, 19, 22, 23, 24, 28, 30, 31};
    return k;
}

CatalogInfo imprimitive_info(unsigned de, unsigned e, unsigned n) {
    if (n == 0 || de == 0 || e == 0)
        throw GroupSpecError("imprimitive parameters must be positive");
    if (de % e != 0)
        throw GroupSpecError("G(de,e,n) requires e to divide the first parameter");
    const unsigned d = de / e;
    if (de == 1 && n >= 2)
        throw GroupSpecError("G(1,1,n) acts reducibly; request Sym(n) instead");
    if (n == 1) {
        if (d == 1)
            throw GroupSpecError("G(" + std::to_string(de) + "," + std::to_string(e) +
                                 ",1) collapses to the trivial group");
        if (e > 1)
            throw GroupSpecError("G(de,e,1) is a redundant presentation; request Cyc(" +
                                 std::to_string(d) + ") instead");
    }
    if (de == 2 && e == 2 && n == 2)
        throw GroupSpecError("G(2,2,2) is reducible");

    CatalogInfo info;
    info.rank = n;
    info.conductor = de;
    info.order = ipow(de, n) * factorial(n) / e;
    for (unsigned i = 1; i < n; ++i) info.degrees.push_back(i * de);
    info.degrees.push_back(d * n);
    std::sort(info.degrees.begin(), info.degrees.end());
    info.well_generated = (d == 1 || e == 1);
    info.psi_order = (d > 1 && e > 1) ? e : 1;
    info.generators = imprimitive_generators(de, e, n);
    return info;
}

} // namespace

CatalogInfo catalog_info(const GroupSpec& spec, const BuildOptions& opts) {
    switch (spec.kind) {
        case SpecKind::Sym: {
            if (spec.n < 2) throw GroupSpecError("Sym(n) requires n >= 2");
            CatalogInfo info;
            info.rank = spec.n - 1;
            info.conductor = 1;
            info.order = factorial(spec.n);
            for (unsigned d = 2; d <= spec.n; ++d) info.degrees.push_back(d);
            info.well_generated = true;
            info.psi_order = 1;
            info.generators = sym_generators(spec.n);
            return info;
        }
        case SpecKind::Cyc: {
            if (spec.de < 2) throw GroupSpecError("Cyc(d) requires d >= 2");
            return imprimitive_info(spec.de, 1, 1);
        }
        case SpecKind::Dih: {
            if (spec.e < 3)
                throw GroupSpecError("Dih(e) requires e >= 3 (Dih(2) is reducible)");
            return imprimitive_info(spec.e, spec.e, 2);
        }
        case SpecKind::Imprimitive:
            return imprimitive_info(spec.de, spec.e, spec.n);
        case SpecKind::ShephardTodd: {
            if (!supported_st_numbers().count(spec.st))
                throw GroupSpecError("Shephard-Todd group G" + std::to_string(spec.st) +
                                     " is not in the supported catalog");
            const std::string dir = resolve_data_dir(opts.data_dir);
            GroupTable t = load_group_table(group_table_path(dir, spec.st));
            if (t.st != spec.st)
                throw DataFileError("generator table declares st " + std::to_string(t.st) +
                                    " but was loaded for G" + std::to_string(spec.st));
            CatalogInfo info;
            info.rank = t.rank;
            info.conductor = t.conductor;
            info.order = t.order;
            info.degrees = t.degrees;
            std::sort(info.degrees.begin(), info.degrees.end());
            info.well_generated = t.well_generated;
            info.psi_order = t.psi_order;
            info.psi_rows = t.psi_rows;
            info.generators = t.generators;
            return info;
        }
    }
    throw GroupSpecError("unhandled group spec");
}

std::vector<CycMatrix> generator_matrices(const GroupSpec& spec, const BuildOptions& opts) {
    return catalog_info(spec, opts).generators;
}

std::vector<CycMatrix> enumerate_closure(const std::vector<CycMatrix>& generators,
                                         std::size_t cap) {
    if (generators.empty()) throw DomainError("cannot enumerate without generators");
    const unsigned n = generators[0].dim();
    const unsigned l = generators[0].conductor();
    std::vector<CycMatrix> elements;
    std::unordered_map<std::string, std::uint32_t> index;
    elements.push_back(CycMatrix::identity(n, l));
    index.emplace(elements[0].key(), 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            CycMatrix prod = elements[head] * g;
            std::string key = prod.key();
            if (index.count(key)) continue;
            if (elements.size() >= cap)
                throw OrderCapError("group closure exceeded the element cap of " +
                                    std::to_string(cap));
            index.emplace(std::move(key), static_cast<std::uint32_t>(elements.size()));
            elements.push_back(std::move(prod));
        }
    }
    return elements;
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

} // namespace

ReflectionGroup build_from_generators(const GroupSpec& spec, CatalogInfo info,
                                      const BuildOptions& opts) {
    Integer degree_product = 1;
    for (unsigned d : info.degrees) degree_product *= d;
    if (degree_product != info.order)
        throw InvariantViolationError(spec.str() +
                                      ": catalog order does not match the degree product");

    if (info.order > opts.order_cap && !opts.allow_large)
        throw OrderCapError(spec.str() + " has order " + std::to_string(info.order) +
                            " above the cap " + std::to_string(opts.order_cap) +
                            "; pass allow_large / --allow-large to proceed");

    ReflectionGroup g;
    g.spec_ = spec;
    g.rank_ = info.rank;
    g.conductor_ = info.conductor;

    g.elements_ = enumerate_closure(info.generators, info.order + 1);
    if (g.elements_.size() != info.order)
        throw InvariantViolationError(
            spec.str() + ": enumeration found " + std::to_string(g.elements_.size()) +
            " elements, expected " + std::to_string(info.order));

    const std::size_t count = g.elements_.size();
    g.index_.reserve(count * 2);
    for (std::size_t i = 0; i < count; ++i)
        g.index_.emplace(g.elements_[i].key(), static_cast<std::uint32_t>(i));

    g.traces_.reserve(count);
    g.dets_.reserve(count);
    for (const auto& m : g.elements_) {
        g.traces_.push_back(m.trace());
        g.dets_.push_back(m.det());
    }

    // Closure under inversion, verified by locating each exact inverse.
    g.inverse_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto it = g.index_.find(g.elements_[i].inverse().key());
        if (it == g.index_.end())
            throw InvariantViolationError(spec.str() + ": element inverse missing from closure");
        g.inverse_[i] = it->second;
    }

    // Pseudo-reflections: rank(M - I) == 1. Hyperplanes grouped by the
    // canonical normal covector of the fixed space.
    std::unordered_map<std::string, std::uint32_t> hyperplane_index;
    for (std::size_t i = 1; i < count; ++i) {
        if (g.elements_[i].rank_minus_identity() != 1) continue;
        std::vector<CycloNum> normal = g.elements_[i].hyperplane_normal();
        const std::string hkey = normalized_row_key(normal);
        auto [it, inserted] =
            hyperplane_index.emplace(hkey, static_cast<std::uint32_t>(g.hyperplanes_.size()));
        if (inserted) {
            Hyperplane hp;
            const CycloNum lead_inv =
                normal[std::distance(normal.begin(),
                                     std::find_if(normal.begin(), normal.end(),
                                                  [](const CycloNum& c) { return !c.is_zero(); }))]
                    .inverse();
            for (auto& c : normal) c *= lead_inv;
            hp.normal = std::move(normal);
            g.hyperplanes_.push_back(std::move(hp));
        }
        const std::uint32_t hidx = it->second;
        Reflection r;
        r.element = static_cast<std::uint32_t>(i);
        r.hyperplane = hidx;
        r.determinant = g.dets_[i];
        g.hyperplanes_[hidx].reflections.push_back(r.element);
        g.reflections_.push_back(std::move(r));
    }
    if (g.reflections_.empty())
        throw InvariantViolationError(spec.str() + ": no pseudo-reflections found");

    for (auto& hp : g.hyperplanes_)
        hp.e_H = static_cast<unsigned>(hp.reflections.size()) + 1;

    // W-orbits of hyperplanes under the generator action on normals.
    {
        UnionFind uf(g.hyperplanes_.size());
        std::vector<CycMatrix> gen_inverses;
        gen_inverses.reserve(info.generators.size());
        for (const auto& gen : info.generators) gen_inverses.push_back(gen.inverse());
        for (std::uint32_t hi = 0; hi < g.hyperplanes_.size(); ++hi) {
            for (const auto& ginv : gen_inverses) {
                std::vector<CycloNum> moved = CycMatrix::row_times(g.hyperplanes_[hi].normal, ginv);
                auto it = hyperplane_index.find(normalized_row_key(std::move(moved)));
                if (it == hyperplane_index.end())
                    throw InvariantViolationError(spec.str() +
                                                  ": hyperplane set not closed under the action");
                uf.unite(hi, it->second);
            }
        }
        std::unordered_map<std::uint32_t, unsigned> orbit_id;
        for (std::uint32_t hi = 0; hi < g.hyperplanes_.size(); ++hi) {
            const std::uint32_t root = uf.find(hi);
            auto [it, inserted] = orbit_id.emplace(root, static_cast<unsigned>(orbit_id.size()));
            g.hyperplanes_[hi].orbit = it->second;
        }
    }

    // Structural identities, verified eagerly.
    const unsigned N = g.N();
    const unsigned Nstar = g.N_star();
    if ((N + Nstar) % g.rank_ != 0)
        throw InvariantViolationError(spec.str() + ": (N + N*) is not divisible by the rank");
    g.h_ = (N + Nstar) / g.rank_;

    unsigned long eH_sum = 0;
    for (const auto& hp : g.hyperplanes_) {
        eH_sum += hp.e_H;
        if (g.rank_ >= 2 && hp.e_H >= g.h_)
            throw InvariantViolationError(spec.str() + ": found e_H >= h in rank >= 2");
    }
    if (eH_sum != static_cast<unsigned long>(g.rank_) * g.h_)
        throw InvariantViolationError(spec.str() + ": sum of e_H does not equal n*h");

    const CycloNum one = CycloNum::rational(1, g.conductor_);
    for (const auto& r : g.reflections_) {
        if (r.determinant == one)
            throw InvariantViolationError(spec.str() + ": reflection with determinant 1");
        if (pow(r.determinant, g.hyperplanes_[r.hyperplane].e_H) != one)
            throw InvariantViolationError(spec.str() +
                                          ": reflection determinant order does not divide e_H");
    }

    if (info.well_generated && g.h_ != info.degrees.back())
        throw InvariantViolationError(spec.str() +
                                      ": well-generated flag inconsistent with h = d_n");

    g.catalog_ = std::move(info);
    return g;
}

ReflectionGroup build(const GroupSpec& spec, const BuildOptions& opts) {
    return build_from_generators(spec, catalog_info(spec, opts), opts);
}

std::optional<std::uint32_t> ReflectionGroup::element_index(const CycMatrix& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const ReflectionGroup::CharPolyClasses& ReflectionGroup::char_poly_classes() const {
    std::call_once(*charpoly_once_, [this] {
        auto classes = std::make_unique<CharPolyClasses>();
        classes->slot.resize(elements_.size());
        std::unordered_map<std::string, std::uint32_t> seen;
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            std::vector<CycloNum> cp = char_poly_one_minus_q(elements_[i]);
            std::string key;
            for (const auto& c : cp) {
                key += c.key();
                key += '|';
            }
            auto [it, inserted] =
                seen.emplace(std::move(key), static_cast<std::uint32_t>(classes->polys.size()));
            if (inserted) classes->polys.push_back(std::move(cp));
            classes->slot[i] = it->second;
        }
        charpoly_classes_ = std::move(classes);
    });
    return *charpoly_classes_;
}

} // namespace reflcat
