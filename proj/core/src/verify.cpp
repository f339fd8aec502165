#include "signed_circular/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "signed_circular/enumerate.hpp"
#include "signed_circular/errors.hpp"
#include "signed_circular/products.hpp"

namespace sc {

const char* to_string(ClaimStatus status)
{
    switch (status) {
    case ClaimStatus::Verified:
        return "verified";
    case ClaimStatus::Refuted:
        return "refuted";
    case ClaimStatus::ReportOnly:
        return "report-only";
    }
    return "unknown";
}

ClaimStatus ClaimReport::status() const
{
    if (!assertive) {
        return ClaimStatus::ReportOnly;
    }
    return failures.empty() ? ClaimStatus::Verified : ClaimStatus::Refuted;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

CircularRate max_rate(const CircularRate& a, const CircularRate& b) { return a < b ? b : a; }

// Memoized chi_c over graphs seen repeatedly across pairs.
class ChiCache {
public:
    CircularRate operator()(const SignedGraph& g)
    {
        const auto key = describe(g);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, chi_c(g)).first;
        }
        return it->second;
    }

private:
    std::map<std::string, CircularRate> cache_;
};

std::string pair_id(const SignedGraph& a, const SignedGraph& b, const char* op)
{
    return describe(a) + " " + op + " " + describe(b);
}

VertexSignMap random_signs(int order, std::mt19937_64& rng)
{
    VertexSignMap map;
    for (int v = 0; v < order; ++v) {
        map.signs.push_back((rng() & 1U) != 0 ? Sign::Negative : Sign::Positive);
    }
    return map;
}

VertexSet random_subset(int order, std::mt19937_64& rng)
{
    VertexSet s;
    for (int v = 0; v < order; ++v) {
        if ((rng() & 1U) != 0) {
            s.push_back(v);
        }
    }
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t count)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

// Certificate on a grid with an antipode, rescaling an odd grid.
DiscreteColoring even_grid(const DiscreteColoring& c)
{
    if (c.grid.has_antipode()) {
        return c;
    }
    DiscreteColoring out{ColorGrid(2 * c.grid.p, 2 * c.grid.q), c.colors};
    for (auto& color : out.colors) {
        color *= 2;
    }
    return out;
}

bool partition_witnesses(const SignedGraph& g, const std::vector<int>& side)
{
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const SignedEdge& e) {
        return (side[e.u] == side[e.v]) == (e.sign == Sign::Positive);
    });
}

std::string oracle_value(const SignedGraph& g, const OracleOptions& options)
{
    try {
        return chi_c_oracle(g, options).str();
    } catch (const BudgetExceeded&) {
        return "budget-exceeded";
    }
}

} // namespace

ClaimReport check_type1_formula(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "type1-formula";
    report.seed = config.seed;
    report.columns = {"A", "B", "chi_c_A", "chi_c_B", "chi_c_product", "max", "witness_valid"};

    ChiCache chi;
    auto check_pair = [&](const SignedGraph& a, const SignedGraph& b) {
        const auto product = cartesian_type1(a, b);
        const auto ca = chi(a);
        const auto cb = chi(b);
        const auto expected = max_rate(ca, cb);
        const auto observed = chi_c(product);

        // phi(u) + psi(x) with both factors recolored at the common rate.
        const auto grid = ColorGrid::for_rate(expected, product.has_negative_edge());
        const auto fa = find_coloring(a, grid);
        const auto fb = find_coloring(b, grid);
        bool witness_ok = fa && fb;
        if (witness_ok) {
            witness_ok = check_coloring(product, product_coloring(*fa, *fb, {a.order(), b.order()}));
        }

        ++report.instances_checked;
        const auto id = pair_id(a, b, "[]");
        if (!(observed == expected)) {
            report.failures.push_back({id, expected.str(), observed.str()});
        }
        if (!witness_ok) {
            report.failures.push_back({id + " (product coloring)", "valid", "invalid"});
        }
        report.rows.push_back({describe(a), describe(b), ca.str(), cb.str(), observed.str(), expected.str(),
                               yes_no(witness_ok)});
    };

    const auto graphs = enumerate_signed_graphs(config.max_n);
    for (const auto& [i, j] : all_pairs(graphs.size())) {
        check_pair(graphs[i], graphs[j]);
    }
    if (config.sample_pairs > 0) {
        const auto pool = enumerate_signed_graphs(config.sample_max_n);
        std::mt19937_64 rng(config.seed);
        for (int k = 0; k < config.sample_pairs; ++k) {
            const auto& a = pool[rng() % pool.size()];
            const auto& b = pool[rng() % pool.size()];
            check_pair(a, b);
        }
        report.findings.push_back(std::to_string(config.sample_pairs) + " seeded pairs drawn from n <= " +
                                  std::to_string(config.sample_max_n));
    }
    return report;
}

ClaimReport check_digon_lemma(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "digon-lemma";
    report.seed = config.seed;
    report.columns = {"G", "chi_c_G", "chi_c_digon", "twice", "quotient_valid"};
    for (const auto& g : enumerate_underlying_graphs(config.max_n, true)) {
        if (g.size() == 0) {
            continue;
        }
        const auto base = chi_c(g);
        const auto d = digon(g);
        const auto solved = solve_chi_c(d);
        const auto twice = base.scaled(2);
        const bool quotient_ok = check_coloring(g, quotient_coloring(d, solved.witness));

        ++report.instances_checked;
        if (!(solved.value == twice)) {
            report.failures.push_back({describe(g), twice.str(), solved.value.str()});
        }
        if (!quotient_ok) {
            report.failures.push_back({describe(g) + " (quotient coloring)", "valid", "invalid"});
        }
        report.rows.push_back({describe(g), base.str(), solved.value.str(), twice.str(), yes_no(quotient_ok)});
    }
    report.findings.push_back("single-vertex graph excluded: chi_c floor of 2 applies to both sides");
    return report;
}

ClaimReport check_type2_upper(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "type2-upper";
    report.seed = config.seed;
    report.columns = {"A", "B", "vsign_A", "vsign_B", "chi_c_product", "bound_chi_c", "bound_chi"};

    ChiCache chi;
    std::mt19937_64 rng(config.seed);
    const auto graphs = enumerate_signed_graphs(config.max_n);
    for (const auto& [i, j] : all_pairs(graphs.size())) {
        const auto& a = graphs[i];
        const auto& b = graphs[j];
        const auto bound_c = max_rate(chi(a.all_positive()), chi(b.all_positive())).scaled(2);
        const int chi_max = std::max(chi_underlying(a), chi_underlying(b));
        const CircularRate bound_chi(2 * std::max(chi_max, 1), 1);

        std::vector<std::pair<VertexSignMap, VertexSignMap>> maps;
        maps.emplace_back(default_vertex_signs(a), default_vertex_signs(b));
        for (int t = 0; t < config.trials; ++t) {
            auto sa = random_signs(a.order(), rng);
            auto sb = random_signs(b.order(), rng);
            maps.emplace_back(std::move(sa), std::move(sb));
        }
        for (const auto& [sa, sb] : maps) {
            const auto value = chi_c(cartesian_type2(a, b, sa, sb));
            ++report.instances_checked;
            const auto id = pair_id(a, b, "[]'") + " vsigns " + sa.str() + " / " + sb.str();
            if (bound_c < value) {
                report.failures.push_back({id, "<= " + bound_c.str(), value.str()});
            }
            if (bound_chi < value) {
                report.failures.push_back({id + " (chromatic bound)", "<= " + bound_chi.str(), value.str()});
            }
            report.rows.push_back(
                {describe(a), describe(b), sa.str(), sb.str(), value.str(), bound_c.str(), bound_chi.str()});
        }
    }
    return report;
}

ClaimReport check_switching_invariance(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "switching-invariance";
    report.seed = config.seed;
    report.columns = {"graph", "switch_set", "chi_c", "chi_c_switched", "certificate_valid"};

    std::mt19937_64 rng(config.seed);
    for (const auto& g : enumerate_signed_graphs(config.max_n)) {
        const auto base = solve_chi_c(g);
        const auto lifted = even_grid(base.witness);
        for (int t = 0; t <= config.trials; ++t) {
            const VertexSet s = t == 0 ? VertexSet{} : random_subset(g.order(), rng);
            const auto switched = switch_at(g, s);
            const auto value = chi_c(switched);
            const bool cert_ok = check_coloring(switched, switch_coloring(lifted, s));

            ++report.instances_checked;
            std::string set_str;
            for (auto v : s) {
                set_str += (set_str.empty() ? "" : " ") + std::to_string(v);
            }
            if (!(value == base.value)) {
                report.failures.push_back({describe(g) + " S={" + set_str + "}", base.value.str(), value.str()});
            }
            if (!cert_ok) {
                report.failures.push_back({describe(g) + " S={" + set_str + "} (certificate)", "valid", "invalid"});
            }
            report.rows.push_back({describe(g), set_str, base.value.str(), value.str(), yes_no(cert_ok)});
        }
    }
    return report;
}

ClaimReport check_balance_product(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "balance-product";
    report.seed = config.seed;
    report.columns = {"A", "B", "balanced_A", "balanced_B", "balanced_product", "partition_valid"};

    const auto graphs = enumerate_signed_graphs(config.max_n);
    for (const auto& [i, j] : all_pairs(graphs.size())) {
        const auto& a = graphs[i];
        const auto& b = graphs[j];
        const auto product = cartesian_type1(a, b);
        const auto pa = harary_partition(a);
        const auto pb = harary_partition(b);
        const bool expected = pa.has_value() && pb.has_value();
        const bool observed = is_balanced(product);

        std::string partition = "n/a";
        if (pa && pb) {
            // side 0 = (X1 x Y1) u (X2 x Y2), side 1 = the rest.
            std::vector<int> xa(static_cast<std::size_t>(a.order()), 0);
            std::vector<int> yb(static_cast<std::size_t>(b.order()), 0);
            for (auto v : pa->part2) {
                xa[v] = 1;
            }
            for (auto v : pb->part2) {
                yb[v] = 1;
            }
            const ProductIndex idx{a.order(), b.order()};
            std::vector<int> side(static_cast<std::size_t>(idx.order()));
            for (VertexId u = 0; u < a.order(); ++u) {
                for (VertexId x = 0; x < b.order(); ++x) {
                    side[idx.pair(u, x)] = xa[u] ^ yb[x];
                }
            }
            const bool ok = partition_witnesses(product, side);
            partition = yes_no(ok);
            if (!ok) {
                report.failures.push_back({pair_id(a, b, "[]") + " (partition)", "valid", "invalid"});
            }
        }
        ++report.instances_checked;
        if (expected != observed) {
            report.failures.push_back({pair_id(a, b, "[]"), yes_no(expected), yes_no(observed)});
        }
        report.rows.push_back({describe(a), describe(b), yes_no(pa.has_value()), yes_no(pb.has_value()),
                               yes_no(observed), partition});
    }
    return report;
}

ClaimReport check_small_products(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "small-products";
    report.seed = config.seed;
    report.columns = {"instance", "kind", "claimed", "chi_c_solver", "chi_c_oracle", "agrees"};

    auto record = [&](const std::string& name, const SignedGraph& g, const std::string& claimed, bool asserted,
                      bool claim_is_upper_bound, bool run_oracle) {
        std::string solver = "budget-exceeded";
        std::optional<CircularRate> value;
        try {
            value = chi_c(g, {CandidateOrder::Bisect, 2'000'000'000ULL});
            solver = value->str();
        } catch (const BudgetExceeded&) {
        }
        const std::string oracle = run_oracle ? oracle_value(g, config.oracle) : "skipped";
        bool agrees = false;
        if (value) {
            const auto claim = CircularRate::parse(claimed);
            agrees = claim_is_upper_bound ? !(claim < *value) : *value == claim;
        }
        ++report.instances_checked;
        const std::string expectation = (claim_is_upper_bound ? "<= " : "") + claimed;
        if (asserted && !agrees) {
            report.failures.push_back({name, expectation, solver});
        } else if (!asserted && !agrees) {
            report.findings.push_back(name + ": claimed " + expectation + ", computed " + solver +
                                      " (oracle " + oracle + ")");
        }
        if (run_oracle && value && oracle != "budget-exceeded" && oracle != value->str()) {
            report.failures.push_back({name + " (solver vs oracle)", oracle, solver});
        }
        report.rows.push_back({name, asserted ? "asserted" : "report-only", expectation, solver, oracle,
                               yes_no(agrees)});
    };

    const auto c3 = make_family(FamilyKind::Cycle, 3, SignPattern::one_negative());
    const auto c4 = make_family(FamilyKind::Cycle, 4, SignPattern::one_negative());
    record("C3- []' C3-", cartesian_type2(c3, c3), "3", false, false, true);
    record("C4- []' C4-", cartesian_type2(c4, c4), "8/3", false, false, true);

    for (int m = 2; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const auto pm = make_family(FamilyKind::Path, m, SignPattern::all_positive());
            const auto pn = make_family(FamilyKind::Path, n, SignPattern::all_positive());
            record("P" + std::to_string(m) + "+ []' P" + std::to_string(n) + "+", cartesian_type2(pm, pn), "2",
                   true, false, true);
        }
    }
    for (int m = 2; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const auto pm = make_family(FamilyKind::Path, m, SignPattern::all_negative());
            const auto pn = make_family(FamilyKind::Path, n, SignPattern::all_negative());
            record("P" + std::to_string(m) + "- []' P" + std::to_string(n) + "-", cartesian_type2(pm, pn), "2",
                   true, false, true);
        }
    }

    for (int m : {4, 6}) {
        for (int n : {4, 6}) {
            if (n < m || m * n > 24) {
                continue;
            }
            const auto cm = make_family(FamilyKind::Cycle, m, SignPattern::one_negative());
            const auto cn = make_family(FamilyKind::Cycle, n, SignPattern::one_negative());
            const CircularRate bound = std::min({CircularRate(2 * m, m - 1), CircularRate(2 * n, n - 1),
                                                 CircularRate(4, 1)});
            record("C" + std::to_string(m) + "- []' C" + std::to_string(n) + "- (bound)", cartesian_type2(cm, cn),
                   bound.str(), false, true, false);
        }
    }
    return report;
}

ClaimReport check_comparison(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "comparison";
    report.assertive = false;
    report.seed = config.seed;
    report.columns = {"A", "B", "chi_c_type1", "chi_c_type2", "relation"};

    std::size_t violations = 0;
    std::size_t strict = 0;
    const auto graphs = enumerate_signed_graphs(config.max_n);
    for (const auto& [i, j] : all_pairs(graphs.size())) {
        const auto& a = graphs[i];
        const auto& b = graphs[j];
        const auto t1 = chi_c(cartesian_type1(a, b));
        const auto t2 = chi_c(cartesian_type2(a, b));
        const char* relation = t1 == t2 ? "=" : (t1 < t2 ? "<" : ">");
        ++report.instances_checked;
        if (t2 < t1) {
            ++violations;
            report.findings.push_back("type1 > type2: " + pair_id(a, b, "vs") + " " + t1.str() + " > " + t2.str());
        } else if (t1 < t2) {
            ++strict;
            report.findings.push_back("strict type1 < type2: " + pair_id(a, b, "vs") + " " + t1.str() + " < " +
                                      t2.str());
        }
        report.rows.push_back({describe(a), describe(b), t1.str(), t2.str(), relation});
    }
    report.findings.insert(report.findings.begin(),
                           "type1 <= type2 held on " + std::to_string(report.instances_checked - violations) +
                               " of " + std::to_string(report.instances_checked) + " pairs; " +
                               std::to_string(strict) + " strict");
    return report;
}

ClaimReport check_type2_orientation_independence(const VerifyConfig& config)
{
    ClaimReport report;
    report.claim_id = "type2-orientation";
    report.assertive = false;
    report.seed = config.seed;
    report.columns = {"A", "B", "trial", "rule", "switching_equivalent"};

    // sigma(u) = prod sigma(e)^eps(e,u) for a random orientation eps.
    auto oriented_signs = [](const SignedGraph& g, std::mt19937_64& rng) {
        std::vector<int> value(static_cast<std::size_t>(g.order()), 1);
        for (const auto& e : g.edges()) {
            const bool away_from_u = (rng() & 1U) != 0;
            const int s = static_cast<int>(e.sign);
            const int at_u = away_from_u ? s : 1 / s;
            const int at_v = away_from_u ? 1 / s : s;
            value[e.u] *= at_u;
            value[e.v] *= at_v;
        }
        VertexSignMap map;
        for (int x : value) {
            map.signs.push_back(x > 0 ? Sign::Positive : Sign::Negative);
        }
        return map;
    };

    std::mt19937_64 rng(config.seed);
    std::size_t oriented_total = 0;
    std::size_t oriented_equivalent = 0;
    std::size_t arbitrary_total = 0;
    std::size_t arbitrary_equivalent = 0;
    const auto graphs = enumerate_signed_graphs(config.max_n);
    for (const auto& [i, j] : all_pairs(graphs.size())) {
        const auto& a = graphs[i];
        const auto& b = graphs[j];
        const auto reference = cartesian_type2(a, b);
        for (int t = 0; t < config.trials; ++t) {
            const auto sa = oriented_signs(a, rng);
            const auto sb = oriented_signs(b, rng);
            const bool eq = switching_equivalent(reference, cartesian_type2(a, b, sa, sb));
            ++oriented_total;
            oriented_equivalent += eq ? 1 : 0;
            report.rows.push_back({describe(a), describe(b), std::to_string(t), "orientation", yes_no(eq)});

            const auto ra = random_signs(a.order(), rng);
            const auto rb = random_signs(b.order(), rng);
            const bool req = switching_equivalent(reference, cartesian_type2(a, b, ra, rb));
            ++arbitrary_total;
            arbitrary_equivalent += req ? 1 : 0;
            report.rows.push_back({describe(a), describe(b), std::to_string(t), "arbitrary", yes_no(req)});
            if (!eq) {
                report.findings.push_back("orientation-derived signs change the switching class: " +
                                          pair_id(a, b, "[]'") + " " + sa.str() + " / " + sb.str());
            }
        }
        ++report.instances_checked;
    }
    report.findings.insert(report.findings.begin(),
                           {"orientation-derived vertex signs: " + std::to_string(oriented_equivalent) + "/" +
                                std::to_string(oriented_total) + " switching equivalent to the default product",
                            "arbitrary vertex-sign maps: " + std::to_string(arbitrary_equivalent) + "/" +
                                std::to_string(arbitrary_total) + " switching equivalent to the default product"});
    return report;
}

const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids = {
        "type1-formula", "digon-lemma", "type2-upper", "switching-invariance",
        "balance-product", "small-products", "comparison", "type2-orientation",
    };
    return ids;
}

ClaimReport run_claim(const std::string& claim_id, const VerifyConfig& config)
{
    if (claim_id == "type1-formula") {
        return check_type1_formula(config);
    }
    if (claim_id == "digon-lemma") {
        return check_digon_lemma(config);
    }
    if (claim_id == "type2-upper") {
        return check_type2_upper(config);
    }
    if (claim_id == "switching-invariance") {
        return check_switching_invariance(config);
    }
    if (claim_id == "balance-product") {
        return check_balance_product(config);
    }
    if (claim_id == "small-products") {
        return check_small_products(config);
    }
    if (claim_id == "comparison") {
        return check_comparison(config);
    }
    if (claim_id == "type2-orientation") {
        return check_type2_orientation_independence(config);
    }
    throw std::invalid_argument("unknown claim `" + claim_id + "`");
}

} // namespace sc
