#pragma once

#include "reflcat/groups.hpp"

#include <string>
#include <vector>

namespace reflcat {

/// Label of a constructible class function: triv, det^j, V, V*, exterior
/// powers of V and V*, and Galois twists of V.
struct CharLabel {
    enum class Kind { Triv, DetPow, V, VDual, Ext, ExtDual, TwistV };
    Kind kind = Kind::Triv;
    long param = 0; // j for DetPow, k for Ext/ExtDual, a for TwistV

    static CharLabel triv() { return {Kind::Triv, 0}; }
    static CharLabel det_pow(long j) { return {Kind::DetPow, j}; }
    static CharLabel det() { return det_pow(1); }
    static CharLabel v() { return {Kind::V, 0}; }
    static CharLabel v_dual() { return {Kind::VDual, 0}; }
    static CharLabel ext(long k) { return {Kind::Ext, k}; }
    static CharLabel ext_dual(long k) { return {Kind::ExtDual, k}; }
    static CharLabel twist_v(long a) { return {Kind::TwistV, a}; }

    std::string str() const;
};

/// A class function on a reflection group: one exact value per element,
/// index-aligned with the group's element list.
class CharacterFn {
public:
    /// Builds the labelled character from the matrix realization. Spot-checks
    /// constancy on a few random conjugate pairs.
    CharacterFn(const ReflectionGroup& g, CharLabel label);

    /// Raw values (test/diagnostic entry point); performs the same conjugacy
    /// spot checks and dimension validation as the labelled constructor.
    static CharacterFn from_values(const ReflectionGroup& g, std::vector<CycloNum> values,
                                   std::string label);

    const ReflectionGroup& group() const { return *group_; }
    const std::vector<CycloNum>& values() const { return values_; }
    const CycloNum& value(std::size_t i) const { return values_[i]; }
    unsigned dim() const { return dim_; }
    const std::string& label() const { return label_; }

private:
    CharacterFn() = default;
    void validate();

    const ReflectionGroup* group_ = nullptr;
    std::vector<CycloNum> values_;
    unsigned dim_ = 0;
    std::string label_;
};

CharacterFn character(const ReflectionGroup& g, CharLabel label);

} // namespace reflcat
