#pragma once

#include "qgs/bigfloat.hpp"
#include "qgs/sum_spec.hpp"

namespace qgs {

inline constexpr std::int64_t kDirectSumCap = 100'000'000;

/// Term-by-term summation with a rigorous radius of at most
/// (term count)·2^(-prec+6). Sin and Cos sums come back with im == 0 exactly.
/// Work is split into fixed-size blocks reduced in index order, so the
/// result is bit-identical for any OpenMP thread count.
HighPrecComplex direct_sum(const SumSpec& s, Precision prec);

/// Plain single loop; kept as the reference the parallel kernel is tested against.
HighPrecComplex direct_sum_serial(const SumSpec& s, Precision prec);

}  // namespace qgs
