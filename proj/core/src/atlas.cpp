#include "signed_circular/enumerate.hpp"
#include "signed_circular/products.hpp"
#include "signed_circular/verify.hpp"

namespace sc {

Table atlas(int max_n, int pair_max_n)
{
    Table table;
    table.columns = {"kind", "id", "n", "m", "balanced", "chi", "chi_c", "chi_c_type2"};
    const auto graphs = enumerate_signed_graphs(max_n);
    for (const auto& g : graphs) {
        table.rows.push_back({"graph", describe(g), std::to_string(g.order()), std::to_string(g.size()),
                              is_balanced(g) ? "yes" : "no", std::to_string(chi_underlying(g, 64)),
                              chi_c(g).str(), ""});
    }
    if (pair_max_n < 1) {
        return table;
    }
    const auto small = enumerate_signed_graphs(pair_max_n);
    for (const auto& a : small) {
        for (const auto& b : small) {
            const auto t1 = cartesian_type1(a, b);
            const auto t2 = cartesian_type2(a, b);
            table.rows.push_back({"pair", describe(a) + " x " + describe(b), std::to_string(t1.order()),
                                  std::to_string(t1.size()), is_balanced(t1) ? "yes" : "no",
                                  std::to_string(chi_underlying(t1, 64)), chi_c(t1).str(), chi_c(t2).str()});
        }
    }
    return table;
}

} // namespace sc
