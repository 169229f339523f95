#include "reflcat/characters.hpp"

#include "reflcat/errors.hpp"
#include "reflcat/qseries.hpp"

#include <random>

namespace reflcat {

std::string CharLabel::str() const {
    switch (kind) {
        case Kind::Triv: return "triv";
        case Kind::DetPow:
            if (param == 1) return "det";
            return "det^" + std::to_string(param);
        case Kind::V: return "V";
        case Kind::VDual: return "V_dual";
        case Kind::Ext: return "ext(" + std::to_string(param) + ")";
        case Kind::ExtDual: return "ext_dual(" + std::to_string(param) + ")";
        case Kind::TwistV: return "twist(V," + std::to_string(param) + ")";
    }
    return "?";
}

namespace {

// chi_{Lambda^k V}(w) = e_k(eigenvalues of w) = (-1)^k [q^k] det(I - qw).
CycloNum exterior_trace(const ReflectionGroup& g, std::size_t element, unsigned k) {
    const auto& cp = g.char_poly_classes();
    const CycloNum& c = cp.polys[cp.slot[element]][k];
    return (k % 2 == 0) ? c : -c;
}

} // namespace

CharacterFn::CharacterFn(const ReflectionGroup& g, CharLabel label) {
    group_ = &g;
    label_ = label.str();
    const std::size_t count = g.order();
    values_.reserve(count);

    switch (label.kind) {
        case CharLabel::Kind::Triv: {
            values_.assign(count, CycloNum::rational(1, g.conductor()));
            break;
        }
        case CharLabel::Kind::DetPow: {
            if (label.param < 0) throw DomainError("det power must be nonnegative");
            for (std::size_t i = 0; i < count; ++i)
                values_.push_back(pow(g.element_det(i), label.param));
            break;
        }
        case CharLabel::Kind::V: {
            for (std::size_t i = 0; i < count; ++i) values_.push_back(g.element_trace(i));
            break;
        }
        case CharLabel::Kind::VDual: {
            // trace(w^-1): the unitary-free dual character
            for (std::size_t i = 0; i < count; ++i)
                values_.push_back(g.element_trace(g.inverse_index(i)));
            break;
        }
        case CharLabel::Kind::Ext:
        case CharLabel::Kind::ExtDual: {
            const long k = label.param;
            if (k < 0 || k > static_cast<long>(g.rank()))
                throw DomainError("exterior power k must satisfy 0 <= k <= rank");
            const bool dual = label.kind == CharLabel::Kind::ExtDual;
            for (std::size_t i = 0; i < count; ++i) {
                const std::size_t j = dual ? g.inverse_index(i) : i;
                values_.push_back(exterior_trace(g, j, static_cast<unsigned>(k)));
            }
            break;
        }
        case CharLabel::Kind::TwistV: {
            const long a = label.param;
            for (std::size_t i = 0; i < count; ++i)
                values_.push_back(g.element_trace(i).galois(a));
            break;
        }
    }
    validate();
}

CharacterFn CharacterFn::from_values(const ReflectionGroup& g, std::vector<CycloNum> values,
                                     std::string label) {
    if (values.size() != g.order())
        throw DomainError("character value count does not match the group order");
    CharacterFn f;
    f.group_ = &g;
    f.values_ = std::move(values);
    f.label_ = std::move(label);
    f.validate();
    return f;
}

void CharacterFn::validate() {
    const CycloNum& at_identity = values_[0];
    if (!at_identity.is_integer() || at_identity.to_rational() <= 0)
        throw DomainError("character dimension (value at identity) must be a positive integer");
    dim_ = static_cast<unsigned>(at_identity.to_rational().get_num().get_ui());

    // Class-function spot check on random conjugate pairs.
    const ReflectionGroup& g = *group_;
    std::mt19937_64 rng(0x5eedu + g.order());
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int iter = 0; iter < 8; ++iter) {
        const std::size_t w = pick(rng), x = pick(rng);
        const CycMatrix conj = g.element(x) * g.element(w) * g.element(g.inverse_index(x));
        const auto idx = g.element_index(conj);
        if (!idx)
            throw InvariantViolationError("conjugation left the group (closure bug)");
        if (!(values_[*idx] == values_[w]))
            throw InvariantViolationError("character \"" + label_ +
                                          "\" is not constant on a conjugacy class");
    }
}

CharacterFn character(const ReflectionGroup& g, CharLabel label) { return CharacterFn(g, label); }

} // namespace reflcat
