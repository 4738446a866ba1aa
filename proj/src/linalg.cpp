#include "posetder/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "posetder/errors.hpp"

namespace posetder {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::string IntegerMatrix::dump() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << (*this)(r, c);
        }
        os << '\n';
    }
    return os.str();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw UnsupportedRingError("gf:" + std::to_string(p) + " requires a prime modulus");
    return Ring(Kind::prime_field, p);
}

Ring Ring::mod_ring(std::uint64_t n) {
    if (n < 2) throw UnsupportedRingError("mod:" + std::to_string(n) + " requires n >= 2");
    return Ring(Kind::mod_ring, n);
}

Ring Ring::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "z" || text == "Z") return integers();
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("unrecognized ring '" + std::string(text) + "'");
    auto tag = text.substr(0, colon);
    auto num = text.substr(colon + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size())
        throw ParseError("bad modulus in ring '" + std::string(text) + "'");
    if (tag == "gf") return prime_field(value);
    if (tag == "mod") return mod_ring(value);
    throw ParseError("unrecognized ring '" + std::string(text) + "'");
}

bool Ring::is_field() const {
    switch (kind_) {
        case Kind::rationals:
        case Kind::prime_field:
            return true;
        case Kind::mod_ring:
            return is_prime(modulus_);
        case Kind::integers:
            return false;
    }
    return false;
}

mpq_class Ring::reduce(const mpq_class& value) const {
    mpq_class v(value);
    v.canonicalize();
    switch (kind_) {
        case Kind::rationals:
            return v;
        case Kind::integers:
            if (v.get_den() != 1) throw std::domain_error("non-integral value in ring z");
            return v;
        case Kind::prime_field:
        case Kind::mod_ring: {
            mpz_class n(static_cast<unsigned long>(modulus_));
            mpz_class num = v.get_num() % n;
            if (num < 0) num += n;
            if (v.get_den() != 1) {
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), v.get_den().get_mpz_t(), n.get_mpz_t()) == 0)
                    throw std::domain_error("denominator not invertible in " + to_string());
                num = (num * inv) % n;
            }
            return mpq_class(num);
        }
    }
    return v;
}

std::string Ring::to_string() const {
    switch (kind_) {
        case Kind::rationals:
            return "q";
        case Kind::integers:
            return "z";
        case Kind::prime_field:
            return "gf:" + std::to_string(modulus_);
        case Kind::mod_ring:
            return "mod:" + std::to_string(modulus_);
    }
    return "?";
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class SmithReducer {
public:
    SmithReducer(const IntegerMatrix& a, bool track)
        : a_(a), track_(track), m_(a.rows()), n_(a.cols()) {
        if (track_) {
            u_ = IntegerMatrix::identity(m_);
            v_ = IntegerMatrix::identity(n_);
        }
    }

    void run() {
        const std::size_t limit = std::min(m_, n_);
        for (std::size_t t = 0; t < limit; ++t) {
            if (!pivot_smallest(t)) break;
            reduce_at(t);
            if (a_(t, t) < 0) negate_row(t);
            divisors_.push_back(a_(t, t));
        }
    }

    SmithDecomposition take() {
        return SmithDecomposition{std::move(u_), std::move(a_), std::move(v_), std::move(divisors_)};
    }
    std::vector<mpz_class> take_divisors() { return std::move(divisors_); }

private:
    // Moves the nonzero entry of least absolute value in the trailing block
    // to (t, t). Returns false when the block is zero.
    bool pivot_smallest(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t i = t; i < m_; ++i)
            for (std::size_t j = t; j < n_; ++j) {
                const auto& v = a_(i, j);
                if (v == 0) continue;
                if (!found || cmpabs(v, a_(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void reduce_at(std::size_t t) {
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m_; ++i) {
                if (a_(i, t) == 0) continue;
                mpz_class q = a_(i, t) / a_(t, t);
                if (q != 0) add_row(i, t, -q);
                if (a_(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n_; ++j) {
                if (a_(t, j) == 0) continue;
                mpz_class q = a_(t, j) / a_(t, t);
                if (q != 0) add_col(j, t, -q);
                if (a_(t, j) != 0) clean = false;
            }
            if (!clean) {
                repivot_cross(t);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < m_ && divisible; ++i)
                for (std::size_t j = t + 1; j < n_; ++j)
                    if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) return;
        }
    }

    // Smallest nonzero remainder in row t or column t becomes the pivot.
    void repivot_cross(std::size_t t) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m_; ++i)
            if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < n_; ++j)
            if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        a_.swap_rows(a, b);
        if (track_) u_.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        a_.swap_cols(a, b);
        if (track_) v_.swap_cols(a, b);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < n_; ++j) a_(r, j) = -a_(r, j);
        if (track_)
            for (std::size_t j = 0; j < m_; ++j) u_(r, j) = -u_(r, j);
    }
    // row[dst] += q * row[src]
    void add_row(std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < n_; ++j)
            if (a_(src, j) != 0) a_(dst, j) += q * a_(src, j);
        if (track_)
            for (std::size_t j = 0; j < m_; ++j)
                if (u_(src, j) != 0) u_(dst, j) += q * u_(src, j);
    }
    // col[dst] += q * col[src]
    void add_col(std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t i = 0; i < m_; ++i)
            if (a_(i, src) != 0) a_(i, dst) += q * a_(i, src);
        if (track_)
            for (std::size_t i = 0; i < n_; ++i)
                if (v_(i, src) != 0) v_(i, dst) += q * v_(i, src);
    }

    IntegerMatrix a_;
    IntegerMatrix u_;
    IntegerMatrix v_;
    bool track_;
    std::size_t m_;
    std::size_t n_;
    std::vector<mpz_class> divisors_;
};

mpz_class modulus_of(const Ring& k) { return mpz_class(static_cast<unsigned long>(k.modulus())); }

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    SmithReducer r(a, true);
    r.run();
    return r.take();
}

std::vector<mpz_class> smith_divisors(const IntegerMatrix& a) {
    SmithReducer r(a, false);
    r.run();
    return r.take_divisors();
}

std::size_t rank_from_divisors(const std::vector<mpz_class>& divisors, const Ring& k) {
    if (k.kind() == Ring::Kind::rationals) return divisors.size();
    if (!k.is_field())
        throw UnsupportedRingError("rank over " + k.to_string() + " is undefined; use q or gf:<prime>");
    const mpz_class p = modulus_of(k);
    return static_cast<std::size_t>(std::count_if(divisors.begin(), divisors.end(), [&](const mpz_class& d) {
        return !mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t());
    }));
}

std::size_t rank_over(const IntegerMatrix& a, const Ring& k) {
    if (k.kind() != Ring::Kind::rationals && !k.is_field())
        throw UnsupportedRingError("rank over " + k.to_string() + " is undefined; use q or gf:<prime>");
    return rank_from_divisors(smith_divisors(a), k);
}

std::optional<std::vector<mpq_class>> solve_linear(const IntegerMatrix& a, const std::vector<mpz_class>& b,
                                                   const Ring& k) {
    if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match matrix rows");
    const auto snf = smith_normal_form(a);
    const std::size_t m = a.rows(), n = a.cols(), r = snf.divisors.size();

    std::vector<mpz_class> c(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (snf.U(i, j) != 0) c[i] += snf.U(i, j) * b[j];

    const bool modular = k.kind() == Ring::Kind::prime_field || k.kind() == Ring::Kind::mod_ring;
    const mpz_class modulus = modular ? modulus_of(k) : mpz_class(0);

    std::vector<mpq_class> y(n);
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& d = snf.divisors[i];
        switch (k.kind()) {
            case Ring::Kind::rationals:
                y[i] = mpq_class(c[i], d);
                y[i].canonicalize();
                break;
            case Ring::Kind::integers:
                if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
                y[i] = mpq_class(c[i] / d);
                break;
            case Ring::Kind::prime_field:
            case Ring::Kind::mod_ring: {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
                if (!mpz_divisible_p(c[i].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
                const mpz_class reduced_mod = modulus / g;
                mpz_class inv = 0;
                if (reduced_mod > 1) {
                    mpz_class dd = (d / g) % reduced_mod;
                    if (dd < 0) dd += reduced_mod;
                    mpz_invert(inv.get_mpz_t(), dd.get_mpz_t(), reduced_mod.get_mpz_t());
                }
                mpz_class yi = ((c[i] / g) * inv) % reduced_mod;
                if (yi < 0) yi += reduced_mod;
                y[i] = mpq_class(yi);
                break;
            }
        }
    }
    for (std::size_t i = r; i < m; ++i) {
        if (modular) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), modulus.get_mpz_t())) return std::nullopt;
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }

    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (snf.V(i, j) != 0 && y[j] != 0) acc += mpq_class(snf.V(i, j)) * y[j];
        x[i] = k.reduce(acc);
    }
    return x;
}

std::vector<std::vector<mpq_class>> kernel_basis(const IntegerMatrix& a, const Ring& k) {
    if (k.kind() != Ring::Kind::rationals && !k.is_field())
        throw UnsupportedRingError("kernel over " + k.to_string() + " is undefined; use q or gf:<prime>");
    const auto snf = smith_normal_form(a);
    const std::size_t n = a.cols();
    const std::size_t r = snf.divisors.size();
    const mpz_class p = modulus_of(k);
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t i = 0; i < n; ++i) {
        const bool free = i >= r || (k.kind() != Ring::Kind::rationals &&
                                     mpz_divisible_p(snf.divisors[i].get_mpz_t(), p.get_mpz_t()));
        if (!free) continue;
        std::vector<mpq_class> v(n);
        for (std::size_t row = 0; row < n; ++row) v[row] = k.reduce(mpq_class(snf.V(row, i)));
        basis.push_back(std::move(v));
    }
    return basis;
}

mpz_class determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m(s, k) == 0) ++s;
            if (s == n) return 0;
            m.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

}  // namespace posetder
