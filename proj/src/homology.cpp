#include "posetder/homology.hpp"

#include <algorithm>
#include <map>

#include "posetder/errors.hpp"

namespace posetder {

std::size_t OrderComplex::count(int dim) const {
    if (dim < 0 || dim > top_dimension()) return 0;
    return simplices_by_dim[static_cast<std::size_t>(dim)].size();
}

namespace {

void extend_chain(const Poset& p, Simplex& chain, std::size_t max_len, OrderComplex& out) {
    const std::size_t d = chain.size() - 1;
    if (out.simplices_by_dim.size() <= d) out.simplices_by_dim.resize(d + 1);
    out.simplices_by_dim[d].push_back(chain);
    if (chain.size() == max_len) return;
    const int last = chain.back();
    for (int v = 0; static_cast<std::size_t>(v) < p.size(); ++v) {
        if (!p.less(last, v)) continue;
        chain.push_back(v);
        extend_chain(p, chain, max_len, out);
        chain.pop_back();
    }
}

}  // namespace

OrderComplex order_complex(const Poset& poset, int max_dim) {
    const std::size_t max_len = max_dim < 0 ? poset.size() : static_cast<std::size_t>(max_dim) + 1;
    OrderComplex k;
    if (poset.empty()) return k;
    Simplex chain;
    for (int v = 0; static_cast<std::size_t>(v) < poset.size(); ++v) {
        chain.assign(1, v);
        extend_chain(poset, chain, max_len, k);
    }
    for (auto& dim : k.simplices_by_dim) std::sort(dim.begin(), dim.end());
    return k;
}

IntegerMatrix boundary_matrix(const OrderComplex& complex, int dim) {
    if (dim < 1 || dim > complex.top_dimension())
        throw DimensionError("boundary map in dimension " + std::to_string(dim) + " is not available");
    const auto& faces = complex.simplices_by_dim[static_cast<std::size_t>(dim - 1)];
    const auto& cells = complex.simplices_by_dim[static_cast<std::size_t>(dim)];
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < faces.size(); ++i) row_of.emplace(faces[i], i);

    IntegerMatrix m(faces.size(), cells.size());
    Simplex face;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& s = cells[c];
        for (std::size_t omit = 0; omit < s.size(); ++omit) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != omit) face.push_back(s[i]);
            m(row_of.at(face), c) = (omit % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

HomologySummary homology(const Poset& poset, int dim) {
    if (dim < 0) throw DimensionError("homology dimension must be nonnegative");
    const auto k = order_complex(poset, dim + 1);
    HomologySummary h;
    h.dim = dim;

    const std::size_t chains = k.count(dim);
    std::size_t cycles = chains;
    if (dim >= 1 && dim <= k.top_dimension()) cycles -= smith_divisors(boundary_matrix(k, dim)).size();

    std::vector<mpz_class> divisors;
    if (dim + 1 <= k.top_dimension()) divisors = smith_divisors(boundary_matrix(k, dim + 1));
    h.betti = cycles - divisors.size();
    for (auto& d : divisors)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

long euler_characteristic(const OrderComplex& complex) {
    long chi = 0;
    for (int d = 0; d <= complex.top_dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(complex.count(d));
    return chi;
}

ConclusiveVerdict classify(const Poset& poset) {
    auto h1 = homology(poset, 1);
    ConclusiveVerdict v;
    v.betti1 = h1.betti;
    v.torsion1 = std::move(h1.torsion);
    v.conclusive_paper = v.torsion1.empty();
    v.defective_uct = v.betti1 >= 1;
    v.soluble = v.betti1 == 0 && v.torsion1.empty();
    return v;
}

}  // namespace posetder
