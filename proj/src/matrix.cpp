#include "fxn/matrix.hpp"

#include <optional>
#include <stdexcept>

#include "fxn/errors.hpp"

namespace fxn {

namespace {

using Vec = std::vector<u64>;

// Incremental row echelon form that remembers how every reduced row was
// built from the vectors inserted so far.
class TrackedSpan {
   public:
    TrackedSpan(const FieldSpec& F, std::size_t n) : F_(F), n_(n) {}

    std::size_t size() const noexcept { return inserted_; }

    // (residual, combination) with w = residual + sum combination[j] * inserted_j
    std::pair<Vec, Vec> reduce(Vec w) const {
        Vec comb(inserted_, 0);
        for (const auto& row : rows_) {
            u64 c = w[row.pivot];
            if (c == 0) continue;
            for (std::size_t i = 0; i < n_; ++i) w[i] = F_.sub(w[i], F_.mul(c, row.vec[i]));
            for (std::size_t j = 0; j < row.comb.size(); ++j) comb[j] = F_.add(comb[j], F_.mul(c, row.comb[j]));
        }
        return {std::move(w), std::move(comb)};
    }

    // Inserts w; returns false (and inserts nothing) when w is already in the span.
    bool insert(const Vec& w) {
        auto [residual, comb] = reduce(w);
        std::optional<std::size_t> pivot;
        for (std::size_t i = 0; i < n_; ++i)
            if (residual[i] != 0) {
                pivot = i;
                break;
            }
        if (!pivot) return false;
        // residual = w - sum comb_j v_j, scaled so the pivot is one
        const u64 inv = F_.inv(residual[*pivot]);
        for (auto& v : residual) v = F_.mul(v, inv);
        Vec row_comb(inserted_ + 1, 0);
        for (std::size_t j = 0; j < inserted_; ++j) row_comb[j] = F_.mul(F_.neg(comb[j]), inv);
        row_comb[inserted_] = inv;
        for (auto& r : rows_) r.comb.resize(inserted_ + 1, 0);
        rows_.push_back({*pivot, std::move(residual), std::move(row_comb)});
        ++inserted_;
        return true;
    }

   private:
    struct Row {
        std::size_t pivot;
        Vec vec;
        Vec comb;
    };
    const FieldSpec& F_;
    std::size_t n_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

Vec mat_vec(const Matrix& a, const Vec& v) {
    const FieldSpec& F = a.spec();
    Vec out(a.dim(), 0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        u64 acc = 0;
        for (std::size_t j = 0; j < a.dim(); ++j) acc = F.add(acc, F.mul(a.raw(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

// x^d - sum_{i<d} comb[start + i] x^i
Poly relation_poly(const FieldSpec& F, const Vec& comb, std::size_t start, std::size_t d) {
    Vec coeffs(d + 1, 0);
    for (std::size_t i = 0; i < d; ++i) coeffs[i] = F.neg(comb[start + i]);
    coeffs[d] = 1;
    return Poly(F, std::move(coeffs));
}

}  // namespace

Matrix::Matrix(FieldSpec spec, std::size_t dim) : spec_(std::move(spec)), dim_(dim), entries_(dim * dim, 0) {}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t dim) {
    Matrix out(spec, dim);
    for (std::size_t i = 0; i < dim; ++i) out.raw_ref(i, i) = 1;
    return out;
}

Matrix Matrix::from_integers(const FieldSpec& spec, const std::vector<std::vector<std::int64_t>>& rows) {
    Matrix out(spec, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("Matrix::from_integers: matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) out.raw_ref(i, j) = spec.from_integer(rows[i][j]);
    }
    return out;
}

void Matrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
    if (!(v.spec() == spec_)) throw std::invalid_argument("Matrix::set: element from a different field");
    raw_ref(i, j) = v.value();
}

Matrix& Matrix::operator*=(const FieldElement& c) {
    if (!(c.spec() == spec_)) throw std::invalid_argument("matrix scalar from a different field");
    for (auto& v : entries_) v = spec_.mul(v, c.value());
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_ || !(a.spec_ == b.spec_)) throw std::invalid_argument("matrix product: shape or field mismatch");
    const FieldSpec& F = a.spec_;
    const std::size_t n = a.dim_;
    Matrix out(F, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            u64 aik = a.raw(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out.raw_ref(i, j) = F.add(out.raw(i, j), F.mul(aik, b.raw(k, j)));
        }
    return out;
}

Matrix companion_matrix(const Poly& f) {
    if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("companion_matrix: f must be monic of degree >= 1");
    const FieldSpec& F = f.spec();
    const auto m = static_cast<std::size_t>(f.degree());
    Matrix out(F, m);
    for (std::size_t i = 0; i + 1 < m; ++i) out.set(i, i + 1, FieldElement::one(F));
    for (std::size_t j = 0; j < m; ++j) out.set(m - 1, j, -f.coefficient(j));
    return out;
}

Matrix matrix_pow(const Matrix& a, u64 l) {
    Matrix result = Matrix::identity(a.spec(), a.dim());
    Matrix base = a;
    while (l > 0) {
        if (l & 1) result = result * base;
        l >>= 1;
        if (l > 0) base = base * base;
    }
    return result;
}

Poly char_poly(const Matrix& a) {
    const FieldSpec& F = a.spec();
    const std::size_t n = a.dim();
    if (n == 0) return Poly::constant(FieldElement::one(F));
    Matrix work = a;
    for (std::size_t k = n - 1; k >= 1; --k) {
        const u64 pivot = work.raw(k, k - 1);
        if (pivot == 0) return char_poly_krylov(a);
        const u64 pivot_inv = F.inv(pivot);
        // M = I except row k-1; M^{-1} = I except row k-1 equal to row k of work
        Matrix m = Matrix::identity(F, n);
        Matrix m_inv = Matrix::identity(F, n);
        for (std::size_t j = 0; j < n; ++j) {
            m.raw_ref(k - 1, j) = j == k - 1 ? pivot_inv : F.neg(F.mul(work.raw(k, j), pivot_inv));
            m_inv.raw_ref(k - 1, j) = work.raw(k, j);
        }
        work = m_inv * work * m;
    }
    // Frobenius form: ones on the subdiagonal, first row (c_1, ..., c_n)
    Vec coeffs(n + 1, 0);
    coeffs[n] = 1;
    for (std::size_t j = 0; j < n; ++j) coeffs[n - 1 - j] = F.neg(work.raw(0, j));
    return Poly(F, std::move(coeffs));
}

Poly char_poly_krylov(const Matrix& a) {
    const FieldSpec& F = a.spec();
    const std::size_t n = a.dim();
    TrackedSpan span(F, n);
    Poly result = Poly::constant(FieldElement::one(F));
    for (std::size_t s = 0; s < n && span.size() < n; ++s) {
        Vec v(n, 0);
        v[s] = 1;
        const std::size_t start = span.size();
        if (!span.insert(v)) continue;
        for (;;) {
            v = mat_vec(a, v);
            auto [residual, comb] = span.reduce(v);
            bool dependent = true;
            for (u64 r : residual)
                if (r != 0) {
                    dependent = false;
                    break;
                }
            if (dependent) {
                result *= relation_poly(F, comb, start, span.size() - start);
                break;
            }
            span.insert(v);
        }
    }
    return result;
}

Poly min_poly_in_quotient(const IrreducibleInfo& f, const FieldElement& scalar, u64 l) {
    const FieldSpec& F = f.spec();
    const std::size_t m = f.m;
    const Poly beta = (Poly::constant(scalar) * modpow_x(l, f.poly)) % f.poly;
    auto as_vec = [&](const Poly& p) {
        Vec v(m, 0);
        std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin());
        return v;
    };

    TrackedSpan span(F, m);
    Poly power = Poly::constant(FieldElement::one(F));
    span.insert(as_vec(power));
    Poly minimal(F);
    for (std::size_t d = 1; d <= m; ++d) {
        power = (power * beta) % f.poly;
        auto v = as_vec(power);
        auto [residual, comb] = span.reduce(v);
        bool dependent = true;
        for (u64 r : residual)
            if (r != 0) {
                dependent = false;
                break;
            }
        if (dependent) {
            minimal = relation_poly(F, comb, 0, d);
            break;
        }
        span.insert(v);
    }
    if (minimal.is_zero()) throw InternalError("min_poly_in_quotient: no dependency within degree m");
    const auto d = static_cast<std::size_t>(minimal.degree());
    if (m % d != 0) throw InternalError("min_poly_in_quotient: minimal degree does not divide m; f is not irreducible");
    Poly out = Poly::constant(FieldElement::one(F));
    for (std::size_t i = 0; i < m / d; ++i) out *= minimal;
    return out;
}

}  // namespace fxn
