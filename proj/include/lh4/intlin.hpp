#pragma once

#include "lh4/core.hpp"

#include <optional>

namespace lh4 {

/// Dense exact integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    }

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[index(r, c)]; }
    const Int& at(int r, int c) const { return data_[index(r, c)]; }

    std::vector<Int> column(int c) const;
    std::vector<Int> multiply(std::span<const Int> v) const;
    IntMatrix multiply(const IntMatrix& other) const;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    /// row[a] += k * row[b]
    void add_row(int a, int b, const Int& k);
    /// col[a] += k * col[b]
    void add_col(int a, int b, const Int& k);
    void negate_row(int r);
    void negate_col(int c);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("IntMatrix index");
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// P * A * Q = D with P, Q unimodular and D diagonal, non-negative,
/// each diagonal entry dividing the next.
struct SNFResult {
    IntMatrix p;
    IntMatrix d;
    IntMatrix q;
};

SNFResult smith_normal_form(const IntMatrix& a);

/// A * U = H with U unimodular; H in column echelon form with positive
/// pivots descending by row, entries left of a pivot reduced into
/// [0, pivot), zero columns trailing. The column lattices of A and H agree.
struct HNFResult {
    IntMatrix h;
    IntMatrix u;
};

HNFResult hermite_normal_form(const IntMatrix& a);

/// Basis (as columns) of the full integer kernel {x : A x = 0}, read off
/// the SNF transform Q at zero divisors.
std::vector<std::vector<Int>> kernel_lattice_basis(const IntMatrix& a);

/// A particular integer solution of A x = b plus a lattice basis of the
/// homogeneous solutions.
struct DioSolution {
    std::vector<Int> particular;
    std::vector<std::vector<Int>> kernel_basis;
};

/// Empty iff A x = b has no integer solution.
std::optional<DioSolution> solve_diophantine(const IntMatrix& a, std::span<const Int> b);

struct LatticeReduction {
    std::vector<Int> representative;
    bool in_lattice = false;
};

/// Canonical coset representative of v modulo the lattice spanned by
/// gens, via reduction against Hermite pivots top row down. Constant on
/// cosets; in_lattice iff the representative is zero.
LatticeReduction lattice_reduce(std::span<const Int> v, const std::vector<std::vector<Int>>& gens);

/// Exact determinant (Bareiss).
Int determinant(const IntMatrix& a);

}  // namespace lh4
