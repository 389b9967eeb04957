#include "gfw/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gfw {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Dense integer working form with per-row denominators cleared; scaling rows
// changes neither rank, kernel, nor solution sets.
struct EchelonForm {
    std::vector<std::vector<Int>> rows;
    std::vector<long> pivot_cols;  // ascending
    long pivot_limit = 0;          // columns eligible as pivots

    long rank() const { return static_cast<long>(pivot_cols.size()); }
};

std::vector<std::vector<Int>> to_integer_rows(const SparseMatrix& m,
                                              std::span<const Rat> augment) {
    const long nc = m.cols() + (augment.empty() ? 0 : 1);
    std::vector<std::vector<Int>> rows(static_cast<size_t>(m.rows()));
    std::vector<std::vector<Rat>> rational(static_cast<size_t>(m.rows()),
                                           std::vector<Rat>(static_cast<size_t>(nc)));
    for (const auto& [rc, v] : m.entries())
        rational[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
    for (long r = 0; r < m.rows(); ++r) {
        if (!augment.empty())
            rational[static_cast<size_t>(r)][static_cast<size_t>(m.cols())] =
                augment[static_cast<size_t>(r)];
        Int scale = 1;
        for (const Rat& v : rational[static_cast<size_t>(r)])
            scale = lcm(scale, denominator(v));
        auto& out = rows[static_cast<size_t>(r)];
        out.resize(static_cast<size_t>(nc));
        for (long c = 0; c < nc; ++c) {
            const Rat& v = rational[static_cast<size_t>(r)][static_cast<size_t>(c)];
            out[static_cast<size_t>(c)] = numerator(v) * (scale / denominator(v));
        }
    }
    return rows;
}

// Fraction-free (Bareiss) forward elimination with row pivoting. The pivot in
// each column is the nonzero entry of smallest magnitude, which keeps the
// integer growth of monomial-basis matrices low. Divisions by the previous
// pivot are exact.
EchelonForm eliminate(std::vector<std::vector<Int>> rows, long pivot_limit) {
    EchelonForm ef;
    ef.pivot_limit = pivot_limit;
    const long nr = static_cast<long>(rows.size());
    const long nc = nr ? static_cast<long>(rows[0].size()) : 0;
    Int prev = 1;
    long r = 0;
    for (long c = 0; c < pivot_limit && r < nr; ++c) {
        long best = -1;
        for (long i = r; i < nr; ++i) {
            const Int& v = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (v == 0)
                continue;
            if (best < 0 || abs_int(v) < abs_int(rows[static_cast<size_t>(best)][static_cast<size_t>(c)]))
                best = i;
        }
        if (best < 0)
            continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(best)]);
        for (long i = r + 1; i < nr; ++i) {
            auto& row = rows[static_cast<size_t>(i)];
            const Int head = row[static_cast<size_t>(c)];
            const Int& pivot = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            for (long j = c + 1; j < nc; ++j) {
                Int t = pivot * row[static_cast<size_t>(j)] -
                        head * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
                Int q, rem;
                divide_qr(t, prev, q, rem);
                assert(rem == 0 && "Bareiss division must be exact");
                row[static_cast<size_t>(j)] = std::move(q);
            }
            row[static_cast<size_t>(c)] = 0;
        }
        prev = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        ef.pivot_cols.push_back(c);
        ++r;
    }
    ef.rows = std::move(rows);
    return ef;
}

EchelonForm eliminate_matrix(const SparseMatrix& m, std::span<const Rat> augment = {}) {
    return eliminate(to_integer_rows(m, augment), m.cols());
}

// Back-substitution for one kernel vector: free coordinate = 1.
std::vector<Rat> kernel_vector(const EchelonForm& ef, long free_col, long width) {
    std::vector<Rat> v(static_cast<size_t>(width));
    v[static_cast<size_t>(free_col)] = 1;
    for (long k = ef.rank() - 1; k >= 0; --k) {
        const auto& row = ef.rows[static_cast<size_t>(k)];
        const long pc = ef.pivot_cols[static_cast<size_t>(k)];
        Rat acc = 0;
        for (long c = pc + 1; c < width; ++c) {
            if (row[static_cast<size_t>(c)] != 0 && v[static_cast<size_t>(c)] != 0)
                acc += Rat(row[static_cast<size_t>(c)]) * v[static_cast<size_t>(c)];
        }
        v[static_cast<size_t>(pc)] = -acc / Rat(row[static_cast<size_t>(pc)]);
    }
    return v;
}

}  // namespace

void SparseMatrix::set(long r, long c, Rat v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of bounds");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseMatrix::add(long r, long c, const Rat& v) {
    if (v == 0)
        return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of bounds");
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
        return;
    }
    it->second += v;
    if (it->second == 0)
        entries_.erase(it);
}

const Rat& SparseMatrix::at(long r, long c) const {
    static const Rat kZero = 0;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of bounds");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

long rank(const SparseMatrix& m) {
    if (m.entries().empty())
        return 0;
    return eliminate_matrix(m).rank();
}

std::vector<std::vector<Rat>> kernel_basis(const SparseMatrix& m) {
    EchelonForm ef = eliminate_matrix(m);
    std::vector<std::vector<Rat>> basis;
    auto pivot_it = ef.pivot_cols.begin();
    for (long c = 0; c < m.cols(); ++c) {
        if (pivot_it != ef.pivot_cols.end() && *pivot_it == c) {
            ++pivot_it;
            continue;
        }
        basis.push_back(kernel_vector(ef, c, m.cols()));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const SparseMatrix& m, std::span<const Rat> b) {
    if (static_cast<long>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    static const Rat kZero = 0;
    if (m.rows() == 0)
        return std::vector<Rat>(static_cast<size_t>(m.cols()));
    std::vector<Rat> rhs(b.begin(), b.end());
    EchelonForm ef = eliminate_matrix(m, rhs);
    const long aug = m.cols();
    for (long r = ef.rank(); r < m.rows(); ++r)
        if (ef.rows[static_cast<size_t>(r)][static_cast<size_t>(aug)] != 0)
            return std::nullopt;
    std::vector<Rat> x(static_cast<size_t>(m.cols()), kZero);
    for (long k = ef.rank() - 1; k >= 0; --k) {
        const auto& row = ef.rows[static_cast<size_t>(k)];
        const long pc = ef.pivot_cols[static_cast<size_t>(k)];
        Rat acc(row[static_cast<size_t>(aug)]);
        for (long c = pc + 1; c < m.cols(); ++c)
            if (row[static_cast<size_t>(c)] != 0 && x[static_cast<size_t>(c)] != 0)
                acc -= Rat(row[static_cast<size_t>(c)]) * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(pc)] = acc / Rat(row[static_cast<size_t>(pc)]);
    }
    return x;
}

std::vector<std::vector<Rat>> echelon_span(std::vector<std::vector<Rat>> vectors, long width) {
    std::vector<std::vector<Rat>> basis;
    for (auto& v : vectors) {
        if (static_cast<long>(v.size()) != width)
            throw std::invalid_argument("echelon_span: inconsistent vector width");
        for (const auto& row : basis) {
            long pc = 0;
            while (row[static_cast<size_t>(pc)] == 0)
                ++pc;
            if (v[static_cast<size_t>(pc)] != 0) {
                const Rat f = v[static_cast<size_t>(pc)];
                for (long c = pc; c < width; ++c)
                    v[static_cast<size_t>(c)] -= f * row[static_cast<size_t>(c)];
            }
        }
        long pc = 0;
        while (pc < width && v[static_cast<size_t>(pc)] == 0)
            ++pc;
        if (pc == width)
            continue;
        const Rat lead = v[static_cast<size_t>(pc)];
        for (long c = pc; c < width; ++c)
            v[static_cast<size_t>(c)] /= lead;
        // keep earlier rows reduced against the new pivot
        for (auto& row : basis) {
            if (row[static_cast<size_t>(pc)] != 0) {
                const Rat f = row[static_cast<size_t>(pc)];
                for (long c = pc; c < width; ++c)
                    row[static_cast<size_t>(c)] -= f * v[static_cast<size_t>(c)];
            }
        }
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), [width](const auto& a, const auto& b) {
        for (long c = 0; c < width; ++c) {
            if (a[static_cast<size_t>(c)] == 0 && b[static_cast<size_t>(c)] != 0)
                return false;
            if (a[static_cast<size_t>(c)] != 0 && b[static_cast<size_t>(c)] == 0)
                return true;
        }
        return false;
    });
    return basis;
}

}  // namespace gfw
