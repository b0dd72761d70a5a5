#pragma once

#include <optional>

#include "legcob/laurent.hpp"
#include "legcob/planar.hpp"

namespace legcob {

// Kauffman bracket in the variable A: state sum over smoothings, each
// closed circle contributing -A^2 - A^-2, the empty diagram 1.
// Throws CrossingCapExceeded when the diagram has more than `cap`
// crossings.  `threads` > 1 splits the state space on the first few
// crossings; results are bit-identical for every thread count.
Laurent1 kauffman_bracket(const PD& d, int cap, int threads = 1);

// Jones polynomial in A: (-A)^{-3w} <D> with one circle factor divided
// out.  `writhe` overrides the orientation-trace writhe (used when a front
// supplies the orientation); DomainError on the empty diagram.
Laurent1 jones(const PD& d, int cap, std::optional<int> writhe = std::nullopt,
               int threads = 1);

// Dubrovnik form of the Kauffman two-variable polynomial, variables (a, z),
// normalized to 1 on the unknot.  DomainError on the empty diagram.
Laurent2 dubrovnik(const PD& d, int cap);

// f = a^{-w} * Dubrovnik; invariant of the underlying link.
Laurent2 f_poly(const PD& d, int cap,
                std::optional<int> writhe = std::nullopt);

// Kauffman-polynomial bound: every Legendrian representative satisfies
// tb <= -deg_a f - 1.
int tb_upper_bound(const PD& d, int cap,
                   std::optional<int> writhe = std::nullopt);

}  // namespace legcob
