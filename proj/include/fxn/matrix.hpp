#ifndef FXN_MATRIX_HPP
#define FXN_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fxn/field.hpp"
#include "fxn/poly.hpp"

namespace fxn {

/// Square matrix over a FieldSpec, row-major packed representatives.
class Matrix {
   public:
    Matrix(FieldSpec spec, std::size_t dim);
    static Matrix identity(const FieldSpec& spec, std::size_t dim);
    /// Rows of integers reduced into the prime subfield.
    static Matrix from_integers(const FieldSpec& spec, const std::vector<std::vector<std::int64_t>>& rows);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t dim() const noexcept { return dim_; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return FieldElement(spec_, raw(i, j)); }
    u64 raw(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, const FieldElement& v);

    Matrix& operator*=(const FieldElement& c);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Matrix a, const FieldElement& c) { return a *= c; }
    friend Matrix operator*(const FieldElement& c, Matrix a) { return a *= c; }
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_ && a.spec_ == b.spec_;
    }

   private:
    u64& raw_ref(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
    friend Poly char_poly(const Matrix& a);

    FieldSpec spec_;
    std::size_t dim_;
    std::vector<u64> entries_;
};

/// Companion matrix with ones on the superdiagonal and last row
/// (-a_0, ..., -a_{m-1}); its characteristic polynomial is f.
/// Throws std::invalid_argument unless f is monic of degree >= 1.
Matrix companion_matrix(const Poly& f);

/// A^l by square-and-multiply.
Matrix matrix_pow(const Matrix& a, u64 l);

/// det(xI - A): Danilevsky reduction to Frobenius form, falling back to
/// char_poly_krylov when a pivot vanishes.
Poly char_poly(const Matrix& a);

/// det(xI - A) from Krylov chains: each chain started at a standard basis
/// vector outside the current span contributes the relation polynomial of
/// its first dependency, and the characteristic polynomial is their product.
Poly char_poly_krylov(const Matrix& a);

/// Minimal polynomial of beta = scalar * x^l in F_q[x]/(f), raised to the
/// power m / deg, i.e. the characteristic polynomial of multiplication by beta.
/// Equals char_poly(scalar * A^l) for A = companion_matrix(f).
Poly min_poly_in_quotient(const IrreducibleInfo& f, const FieldElement& scalar, u64 l);

}  // namespace fxn

#endif
