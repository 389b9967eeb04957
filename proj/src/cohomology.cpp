#include "gfw/cohomology.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace gfw {

namespace {

void require_within_cutoff(const DGA& dga, int k) {
    if (dga.max_valid_degree && k > *dga.max_valid_degree)
        throw std::domain_error("degree " + std::to_string(k) +
                                " exceeds the model's validity cutoff " +
                                std::to_string(*dga.max_valid_degree));
}

DifferentialSlice build_slice(const DGA& dga, int k, std::span<const Monomial> extra_codomain) {
    DifferentialSlice slice;
    slice.degree = k;
    if (k >= 0)
        slice.domain = dga.alg.basis_of_degree(k);
    std::vector<Element> images;
    images.reserve(slice.domain.size());
    std::set<Monomial> targets(extra_codomain.begin(), extra_codomain.end());
    for (const Monomial& m : slice.domain) {
        Element img = apply_derivation(dga.alg, dga.d, m);
        for (const auto& [t, c] : img.terms)
            targets.insert(t);
        images.push_back(std::move(img));
    }
    slice.codomain.assign(targets.begin(), targets.end());
    std::sort(slice.codomain.begin(), slice.codomain.end(),
              [&](const Monomial& a, const Monomial& b) { return dga.alg.basis_less(a, b); });
    std::map<Monomial, long> row_of;
    for (size_t i = 0; i < slice.codomain.size(); ++i)
        row_of.emplace(slice.codomain[i], static_cast<long>(i));
    slice.matrix = SparseMatrix(static_cast<long>(slice.codomain.size()),
                                static_cast<long>(slice.domain.size()));
    for (size_t c = 0; c < images.size(); ++c)
        for (const auto& [t, v] : images[c].terms)
            slice.matrix.set(row_of.at(t), static_cast<long>(c), v);
    return slice;
}

// Column vector of a over the slice's codomain; throws if a has stray monomials.
std::vector<Rat> codomain_vector(const DGA& dga, const DifferentialSlice& slice, const Element& a) {
    std::vector<Rat> v(slice.codomain.size());
    for (const auto& [m, c] : a.terms) {
        auto it = std::lower_bound(
            slice.codomain.begin(), slice.codomain.end(), m,
            [&](const Monomial& x, const Monomial& y) { return dga.alg.basis_less(x, y); });
        if (it == slice.codomain.end() || !(*it == m))
            throw std::logic_error("codomain_vector: monomial missing from codomain");
        v[static_cast<size_t>(it - slice.codomain.begin())] = c;
    }
    return v;
}

std::vector<Monomial> element_monomials(const Element& a) {
    std::vector<Monomial> out;
    out.reserve(a.terms.size());
    for (const auto& [m, c] : a.terms)
        out.push_back(m);
    return out;
}

}  // namespace

DifferentialSlice differential_slice(const DGA& dga, int k,
                                     std::span<const Monomial> extra_codomain) {
    if (k < 0)
        throw std::invalid_argument("differential_slice: negative degree");
    require_within_cutoff(dga, k);
    return build_slice(dga, k, extra_codomain);
}

SparseMatrix differential_matrix(const DGA& dga, int k) {
    return differential_slice(dga, k).matrix;
}

long BettiTable::dim(int k) const {
    auto it = dims.find(k);
    return it == dims.end() ? 0 : it->second;
}

BettiTable betti_table(const DGA& dga, std::string model_name, int k_max, int jobs) {
    if (k_max < 0)
        throw std::invalid_argument("betti_table: negative max degree");
    require_within_cutoff(dga, k_max);
    std::vector<long> basis_size(static_cast<size_t>(k_max) + 1);
    std::vector<long> d_rank(static_cast<size_t>(k_max) + 1);
    auto compute = [&](int k) {
        DifferentialSlice slice = build_slice(dga, k, {});
        basis_size[static_cast<size_t>(k)] = static_cast<long>(slice.domain.size());
        d_rank[static_cast<size_t>(k)] = rank(slice.matrix);
    };
    if (jobs <= 1) {
        for (int k = 0; k <= k_max; ++k)
            compute(k);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int k = next.fetch_add(1); k <= k_max; k = next.fetch_add(1))
                compute(k);
        };
        std::vector<std::thread> pool;
        const int n = std::min(jobs, k_max + 1);
        pool.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    BettiTable table;
    table.model = std::move(model_name);
    table.max_degree = k_max;
    for (int k = 0; k <= k_max; ++k) {
        const long ker = basis_size[static_cast<size_t>(k)] - d_rank[static_cast<size_t>(k)];
        const long prev_rank = k > 0 ? d_rank[static_cast<size_t>(k) - 1] : 0;
        table.dims[k] = ker - prev_rank;
    }
    return table;
}

std::optional<Element> is_coboundary(const DGA& dga, const Element& a) {
    if (a.is_zero())
        return Element::zero();
    auto deg = dga.alg.homogeneous_degree(a);
    if (!deg)
        throw std::invalid_argument("is_coboundary: element is not homogeneous");
    if (!apply_derivation(dga.alg, dga.d, a).is_zero())
        throw std::invalid_argument("is_coboundary: element is not closed");
    if (*deg == 0)
        return std::nullopt;
    require_within_cutoff(dga, *deg - 1);
    const auto seeds = element_monomials(a);
    DifferentialSlice slice = build_slice(dga, *deg - 1, seeds);
    auto x = solve(slice.matrix, codomain_vector(dga, slice, a));
    if (!x)
        return std::nullopt;
    Element primitive;
    for (size_t i = 0; i < slice.domain.size(); ++i)
        if ((*x)[i] != 0)
            primitive += Element::term(slice.domain[i], (*x)[i]);
    return primitive;
}

CheckReport verify_d_squared(const DGA& dga, int k_max) {
    CheckReport report;
    for (const GeneratorSpec& g : dga.alg.generators()) {
        if (g.degree > k_max)
            continue;
        ++report.checked;
        Element once = apply_derivation(dga.alg, dga.d, Monomial::gen(g.id));
        Element twice = apply_derivation(dga.alg, dga.d, once);
        if (!twice.is_zero())
            report.failures.push_back(
                {g.name, "d(d(" + g.name + ")) = " + dga.alg.element_string(twice)});
    }
    return report;
}

CheckReport verify_chain_map(const Morphism& f, const Derivation& d_source,
                             const Derivation& d_target, int k_max) {
    CheckReport report;
    for (const GeneratorSpec& g : f.source.generators()) {
        if (g.degree > k_max)
            continue;
        ++report.checked;
        Element lhs = apply_derivation(f.target, d_target, f.values.at(g.id));
        Element rhs = apply_morphism(f, apply_derivation(f.source, d_source, Monomial::gen(g.id)));
        if (!(lhs == rhs))
            report.failures.push_back(
                {g.name, "d(f(" + g.name + ")) = " + f.target.element_string(lhs) +
                             " but f(d(" + g.name + ")) = " + f.target.element_string(rhs)});
    }
    return report;
}

bool classes_independent(const DGA& dga, int k, std::span<const Element> cocycles) {
    if (cocycles.empty())
        return true;
    std::vector<Monomial> seeds;
    for (const Element& a : cocycles) {
        if (a.is_zero())
            return false;
        auto deg = dga.alg.homogeneous_degree(a);
        if (!deg || *deg != k)
            throw std::invalid_argument("classes_independent: cocycle not homogeneous of degree k");
        if (!apply_derivation(dga.alg, dga.d, a).is_zero())
            throw std::invalid_argument("classes_independent: input is not closed");
        for (const auto& [m, c] : a.terms)
            seeds.push_back(m);
    }
    require_within_cutoff(dga, k);
    DifferentialSlice slice = build_slice(dga, k - 1, seeds);
    const long nd = slice.matrix.cols();
    SparseMatrix joint(slice.matrix.rows(), nd + static_cast<long>(cocycles.size()));
    for (const auto& [rc, v] : slice.matrix.entries())
        joint.set(rc.first, rc.second, v);
    for (size_t i = 0; i < cocycles.size(); ++i) {
        auto col = codomain_vector(dga, slice, cocycles[i]);
        for (size_t r = 0; r < col.size(); ++r)
            if (col[r] != 0)
                joint.set(static_cast<long>(r), nd + static_cast<long>(i), col[r]);
    }
    return rank(joint) == rank(slice.matrix) + static_cast<long>(cocycles.size());
}

std::map<int, std::vector<Element>> cohomology_kernel_of_map(const Morphism& f,
                                                             const DGA& target, int k_max) {
    require_within_cutoff(target, k_max);
    std::map<int, std::vector<Element>> out;
    for (int k = 1; k <= k_max; ++k) {
        const std::vector<Monomial> domain = f.source.basis_of_degree(k);
        if (domain.empty())
            continue;
        std::vector<Element> images;
        std::vector<Monomial> seeds;
        images.reserve(domain.size());
        for (const Monomial& u : domain) {
            Element img = apply_morphism(f, Element::term(u));
            for (const auto& [m, c] : img.terms)
                seeds.push_back(m);
            images.push_back(std::move(img));
        }
        DifferentialSlice slice = build_slice(target, k - 1, seeds);
        const long nd = slice.matrix.cols();
        const long nu = static_cast<long>(domain.size());
        SparseMatrix joint(slice.matrix.rows(), nd + nu);
        for (const auto& [rc, v] : slice.matrix.entries())
            joint.set(rc.first, rc.second, v);
        for (long i = 0; i < nu; ++i) {
            auto col = codomain_vector(target, slice, images[static_cast<size_t>(i)]);
            for (size_t r = 0; r < col.size(); ++r)
                if (col[r] != 0)
                    joint.set(static_cast<long>(r), nd + i, col[r]);
        }
        std::vector<std::vector<Rat>> projected;
        for (const auto& w : kernel_basis(joint)) {
            std::vector<Rat> v(w.begin() + nd, w.end());
            if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; }))
                projected.push_back(std::move(v));
        }
        if (projected.empty())
            continue;
        std::vector<Element> basis;
        for (const auto& v : echelon_span(std::move(projected), nu)) {
            Element u;
            for (long i = 0; i < nu; ++i)
                if (v[static_cast<size_t>(i)] != 0)
                    u += Element::term(domain[static_cast<size_t>(i)], v[static_cast<size_t>(i)]);
            basis.push_back(std::move(u));
        }
        out.emplace(k, std::move(basis));
    }
    return out;
}

}  // namespace gfw
