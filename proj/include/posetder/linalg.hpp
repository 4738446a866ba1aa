#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posetder {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<mpz_class>& data() const { return data_; }

    bool is_zero() const;
    IntegerMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Plain-text dump: one row per line, entries separated by single spaces.
    std::string dump() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

// S = U * A * V with U, V unimodular; divisors are the nonzero diagonal
// entries of S, positive, each dividing the next.
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix S;
    IntegerMatrix V;
    std::vector<mpz_class> divisors;
};

/**
 * Coefficient ring for ranks and linear solves.
 *
 * Text form: "q" (rationals), "z" (integers), "gf:<p>" (prime field) and
 * "mod:<n>" (integers modulo n, n >= 2). A mod ring with prime modulus is
 * a field and is accepted wherever a prime field is.
 */
class Ring {
public:
    enum class Kind { rationals, integers, prime_field, mod_ring };

    static Ring rationals() { return Ring(Kind::rationals, 0); }
    static Ring integers() { return Ring(Kind::integers, 0); }
    static Ring prime_field(std::uint64_t p);
    static Ring mod_ring(std::uint64_t n);
    static Ring parse(std::string_view text);

    Kind kind() const { return kind_; }
    // p or n; 0 for the rationals and the integers.
    std::uint64_t modulus() const { return modulus_; }
    bool is_field() const;
    // The prime characteristic when is_field() and the ring is finite, else 0.
    std::uint64_t characteristic() const { return is_field() ? modulus_ : 0; }

    // Canonical representative: lowest terms over q, [0, n) modulo n.
    // Throws std::domain_error if a denominator is not invertible.
    mpq_class reduce(const mpq_class& value) const;
    bool is_zero(const mpq_class& value) const { return reduce(value) == 0; }

    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b) = default;

private:
    Ring(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}

    Kind kind_ = Kind::rationals;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

// Least-absolute-value pivoting with full unimodular bookkeeping.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Same divisors as smith_normal_form without accumulating U and V.
std::vector<mpz_class> smith_divisors(const IntegerMatrix& a);

// Rank over q or GF(p). Throws UnsupportedRingError for composite moduli
// and for the integers.
std::size_t rank_over(const IntegerMatrix& a, const Ring& k);
std::size_t rank_from_divisors(const std::vector<mpz_class>& divisors, const Ring& k);

// Solution of A x = b in k, or nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve_linear(const IntegerMatrix& a, const std::vector<mpz_class>& b,
                                                   const Ring& k);

// Null-space basis over q (integer vectors) or GF(p) (entries in [0, p)).
std::vector<std::vector<mpq_class>> kernel_basis(const IntegerMatrix& a, const Ring& k);

mpz_class determinant(const IntegerMatrix& a);

}  // namespace posetder
