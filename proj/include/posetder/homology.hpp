#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "posetder/linalg.hpp"
#include "posetder/poset.hpp"

namespace posetder {

// A chain of the poset listed bottom to top.
using Simplex = std::vector<int>;

// Simplices of the order complex grouped by dimension. Within a dimension
// chains are sorted lexicographically by element position.
struct OrderComplex {
    std::vector<std::vector<Simplex>> simplices_by_dim;

    int top_dimension() const { return static_cast<int>(simplices_by_dim.size()) - 1; }
    std::size_t count(int dim) const;
};

// H_dim = Z^betti + sum of Z/t for t in torsion (each t >= 2, t_i | t_{i+1}).
struct HomologySummary {
    int dim = 0;
    std::size_t betti = 0;
    std::vector<mpz_class> torsion;
};

// Keeps both readings of conclusiveness: torsion-free H_1 versus the
// coefficient-count argument, which makes any poset with betti1 >= 1
// defective regardless of torsion.
struct ConclusiveVerdict {
    std::size_t betti1 = 0;
    std::vector<mpz_class> torsion1;
    bool soluble = false;
    bool defective_uct = false;
    bool conclusive_paper = false;

    bool interpretations_disagree() const { return defective_uct && !conclusive_paper; }
};

// Chains with at most max_dim + 1 elements. max_dim < 0 builds the full complex.
OrderComplex order_complex(const Poset& poset, int max_dim = 2);

// Boundary map C_dim -> C_{dim-1}; throws DimensionError outside [1, top].
IntegerMatrix boundary_matrix(const OrderComplex& complex, int dim);

HomologySummary homology(const Poset& poset, int dim);

long euler_characteristic(const OrderComplex& complex);

ConclusiveVerdict classify(const Poset& poset);

}  // namespace posetder
