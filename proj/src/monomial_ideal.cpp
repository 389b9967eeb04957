#include "gfw/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "gfw/matrix.hpp"

namespace gfw {

WeightedRing chern_ring(int d) {
    if (d < 1)
        throw std::invalid_argument("chern_ring: d must be positive");
    WeightedRing ring;
    for (int i = 1; i <= d; ++i) {
        ring.names.push_back("c" + std::to_string(i));
        ring.weights.push_back(2 * i);
    }
    return ring;
}

int weighted_degree(const WeightedRing& ring, const ExpVec& m) {
    int deg = 0;
    for (size_t i = 0; i < m.size(); ++i)
        deg += ring.weights[i] * m[i];
    return deg;
}

std::string monomial_text(const WeightedRing& ring, const ExpVec& m) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.names[i];
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

long MinGenSet::size() const {
    long n = 0;
    for (const auto& [deg, gens] : by_degree)
        n += static_cast<long>(gens.size());
    return n;
}

MinGenSet truncation_kernel_min_gens(const WeightedRing& ring, int bound) {
    const int wmax = *std::max_element(ring.weights.begin(), ring.weights.end());
    if (bound < wmax)
        throw std::invalid_argument("truncation bound below the largest weight");
    // A monomial of degree > bound is a minimal generator exactly when
    // dividing out any single variable drops the degree to <= bound, i.e.
    // degree <= bound + min weight over its support.
    MinGenSet out;
    ExpVec current(ring.names.size(), 0);
    auto rec = [&](auto&& self, size_t var, int deg) -> void {
        if (var == ring.names.size()) {
            if (deg <= bound)
                return;
            for (size_t i = 0; i < current.size(); ++i)
                if (current[i] > 0 && deg - ring.weights[i] > bound)
                    return;
            out.by_degree[deg].push_back(current);
            return;
        }
        for (int e = 0; deg + e * ring.weights[var] <= bound + wmax; ++e) {
            current[var] = e;
            self(self, var + 1, deg + e * ring.weights[var]);
        }
        current[var] = 0;
    };
    rec(rec, 0, 0);
    for (auto& [deg, gens] : out.by_degree)
        std::sort(gens.begin(), gens.end());
    return out;
}

bool min_gen_degree_range_check(int d) {
    if (d < 1)
        throw std::invalid_argument("min_gen_degree_range_check: d must be positive");
    const MinGenSet gens = truncation_kernel_min_gens(chern_ring(d), 2 * d);
    if (gens.by_degree.empty())
        return false;
    const int lo = gens.by_degree.begin()->first;
    const int hi = gens.by_degree.rbegin()->first;
    return lo == 2 * d + 2 && hi == 4 * d;
}

std::map<int, long> hilbert_principal_quotient(const AlgebraPresentation& ring,
                                               const Element& relation, int k_max) {
    auto rel_deg = ring.homogeneous_degree(relation);
    if (!rel_deg)
        throw std::invalid_argument("relation must be homogeneous");
    std::map<int, long> dims;
    for (int k = 0; k <= k_max; ++k) {
        const auto basis = ring.basis_of_degree(k);
        long dim = static_cast<long>(basis.size());
        if (!relation.is_zero() && k >= *rel_deg) {
            const auto lower = ring.basis_of_degree(k - *rel_deg);
            std::map<Monomial, long> row_of;
            for (size_t i = 0; i < basis.size(); ++i)
                row_of.emplace(basis[i], static_cast<long>(i));
            SparseMatrix mult(static_cast<long>(basis.size()), static_cast<long>(lower.size()));
            for (size_t c = 0; c < lower.size(); ++c) {
                Element prod = ring.multiply(lower[c], relation);
                for (const auto& [m, v] : prod.terms)
                    mult.set(row_of.at(m), static_cast<long>(c), v);
            }
            dim -= rank(mult);
        }
        dims[k] = dim;
    }
    return dims;
}

}  // namespace gfw
