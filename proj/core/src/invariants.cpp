#include "indmatch/bounds.hpp"

namespace indmatch {

BoundReport count_invariants(const Graph& g) {
    BoundReport r;
    r.n = g.order();
    r.m = g.size();
    r.i = g.isolated_count();
    r.max_degree = g.max_degree();
    r.min_degree = g.min_degree();
    r.girth = girth(g);

    const auto components = connected_components(g);
    r.components = static_cast<std::int64_t>(components.size());
    for (const auto& comp : components) {
        if (comp.size() == 7 && is_k33plus(g, comp)) ++r.n33plus;
    }

    r.thm2_bound = order_bound(r.n, r.i, r.n33plus);
    if (r.n > 0 && g.is_regular(3)) {
        r.thm1_bound = cubic_size_bound(r.m);
    } else {
        r.thm1_absent = "not cubic";
    }
    if (!r.girth || *r.girth >= 6) {
        r.prop1_bound = ceil_of(high_girth_bound(r.n, r.i, r.max_degree));
    } else {
        r.prop1_absent = "girth < 6";
    }
    r.greedy_general_bound = greedy_general_bound(r.m, r.max_degree);
    if (!r.girth) {
        r.greedy_forest_bound = greedy_forest_bound(r.m, r.max_degree);
    } else {
        r.forest_absent = "not a forest";
    }
    return r;
}

}  // namespace indmatch
