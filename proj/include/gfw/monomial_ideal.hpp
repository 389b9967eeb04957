#ifndef GFW_MONOMIAL_IDEAL_HPP
#define GFW_MONOMIAL_IDEAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gfw/algebra.hpp"

namespace gfw {

/// Weighted polynomial ring for monomial-ideal bookkeeping. Weights are the
/// cohomological degrees, hence positive and even.
struct WeightedRing {
    std::vector<std::string> names;
    std::vector<int> weights;
};

/// Chern ring in d variables: c1..cd with weights 2, 4, ..., 2d.
WeightedRing chern_ring(int d);

using ExpVec = std::vector<int>;

int weighted_degree(const WeightedRing& ring, const ExpVec& m);
std::string monomial_text(const WeightedRing& ring, const ExpVec& m);

/// Monomials grouped by degree; no member divides another.
struct MinGenSet {
    std::map<int, std::vector<ExpVec>> by_degree;

    long size() const;
};

/// Minimal generating set of the ideal of all monomials of weighted degree
/// > bound: exactly the monomials whose proper divisors all have degree
/// <= bound. Throws std::invalid_argument when bound < max weight.
MinGenSet truncation_kernel_min_gens(const WeightedRing& ring, int bound);

/// True iff every minimal generator degree of the degree-2d truncation kernel
/// of the d-variable Chern ring lies in [2d+2, 4d] with both endpoints attained.
bool min_gen_degree_range_check(int d);

/// Hilbert function of ring/(relation) through degree k_max:
/// dims(k) = #monomials of degree k - rank of multiplication by the relation
/// from degree k - |relation|. Throws unless the relation is homogeneous.
std::map<int, long> hilbert_principal_quotient(const AlgebraPresentation& ring,
                                               const Element& relation, int k_max);

}  // namespace gfw

#endif
