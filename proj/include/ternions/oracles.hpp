#pragma once

// Brute-force searches used to cross-check the structural criteria. They
// never call the criteria they check.

#include "ternions/tmodule.hpp"

namespace ternions::oracle {

/// Exists s with t s = I, searched over all of T.
bool ternion_has_inverse(const Ternion& t);

/// Exists (C, D) in T^2 with AC + BD = I, searched over all of T^2.
bool has_unimodular_witness(const TernionPair& pair);

/// Exists S' with S S' = I and S'' with S'' S = I. Each of the four
/// unknown columns/rows is searched independently over T^2.
bool has_inverse(const TernionMatrix2& s);

/// Right multiplication x -> x S on T^2 = F^6 is an F-linear bijection.
bool right_action_is_bijective(const TernionMatrix2& s);

/// |{t.(A, B) : t in T}| = |T|.
bool orbit_map_injective(const TernionPair& pair);

/// Matrix whose entries are the base-p digits of `index` (12 digits,
/// s11, s12, s21, s22 ternion-major, most significant first).
TernionMatrix2 matrix_from_index(const FieldSpec& spec, std::uint64_t index);

}  // namespace ternions::oracle
