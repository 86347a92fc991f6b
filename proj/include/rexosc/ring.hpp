#pragma once

#include <concepts>

#include "rexosc/scalar.hpp"

namespace rexosc {

// Commutative Q-algebra interface used by the generic Bell/Schur machinery:
// ring arithmetic plus scaling by exact rationals and a zero test.  Members
// are discovered by ADL (scale / is_zero free functions per type).
template <class R>
concept QAlgebra = requires(const R& a, const R& b, const Scalar& s) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a* b } -> std::convertible_to<R>;
    { scale(a, s) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

namespace detail {

// ADL trampolines: usable from class members whose own names would otherwise
// shadow the namespace-scope overloads.
template <class R>
bool ring_is_zero(const R& a) {
    return is_zero(a);
}

template <class R>
R ring_scale(const R& a, const Scalar& s) {
    return scale(a, s);
}

}  // namespace detail

}  // namespace rexosc
