// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <filesystem>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sc_cli/cli.hpp"
#include "signed_circular/col_format.hpp"
#include "signed_circular/enumerate.hpp"
#include "signed_circular/products.hpp"
#include "signed_circular/sg_format.hpp"
#include "signed_circular/solver.hpp"
#include "signed_circular/verify.hpp"

namespace {

using namespace sc;
using Clock = std::chrono::steady_clock;

// Wall-clock limits, seconds.
constexpr double kKnownValuesLimit = 60;
constexpr double kOracleAgreementLimit = 600;
constexpr double kType1Limit = 1800;
constexpr int kType1SamplePairs = 50;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s)
{
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

Outcome from_report(const ClaimReport& r)
{
    Outcome o;
    o.pass = r.status() == ClaimStatus::Verified;
    o.detail = r.claim_id + " " + to_string(r.status()) + ", " + std::to_string(r.instances_checked) +
               " instances, " + std::to_string(r.failures.size()) + " failures";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
        o.detail += "\n    " + r.failures[i].instance + ": expected " + r.failures[i].expected + ", observed " +
                    r.failures[i].observed;
    }
    return o;
}

VerifyConfig config(int max_n, int trials = 8)
{
    VerifyConfig c;
    c.max_n = max_n;
    c.seed = kSeed;
    c.trials = trials;
    return c;
}

Outcome known_values()
{
    std::vector<std::pair<SignedGraph, CircularRate>> cases = {
        {make_family(FamilyKind::Cycle, 5, SignPattern::all_positive()), {5, 2}},
        {make_family(FamilyKind::Cycle, 7, SignPattern::all_positive()), {7, 3}},
        {make_family(FamilyKind::Cycle, 4, SignPattern::one_negative()), {8, 3}},
        {make_family(FamilyKind::Cycle, 6, SignPattern::one_negative()), {12, 5}},
    };
    SignedGraph star(5);
    for (int v = 1; v < 5; ++v) {
        star.add_edge(0, v, v % 2 == 0 ? Sign::Negative : Sign::Positive);
    }
    SignedGraph spider(6);
    spider.add_edge(0, 1, Sign::Negative);
    spider.add_edge(1, 2, Sign::Positive);
    spider.add_edge(1, 3, Sign::Negative);
    spider.add_edge(3, 4, Sign::Negative);
    spider.add_edge(3, 5, Sign::Positive);
    for (const auto& tree : {make_family(FamilyKind::Path, 2, SignPattern::all_negative()),
                             make_family(FamilyKind::Path, 4, SignPattern::all_positive()),
                             make_family(FamilyKind::Path, 6, SignPattern::one_negative()), star, spider}) {
        cases.emplace_back(tree, CircularRate(2, 1));
    }
    for (int n = 2; n <= 5; ++n) {
        cases.emplace_back(make_family(FamilyKind::Complete, n, SignPattern::all_positive()), CircularRate(n, 1));
    }
    const auto t0 = Clock::now();
    Outcome o;
    for (const auto& [g, expected] : cases) {
        const auto value = chi_c(g);
        if (!(value == expected)) {
            o.pass = false;
            o.detail += describe(g) + ": expected " + expected.str() + ", got " + value.str() + "; ";
        }
    }
    const double t = seconds_since(t0);
    o.pass = o.pass && t < kKnownValuesLimit;
    o.detail += std::to_string(cases.size()) + " graphs, " + fmt_seconds(t);
    return o;
}

Outcome oracle_agreement()
{
    const auto t0 = Clock::now();
    Outcome o;
    std::size_t checked = 0;
    std::size_t mismatches = 0;
    for (const auto& g : enumerate_signed_graphs(4, false)) {
        const auto a = chi_c(g);
        const auto b = chi_c_oracle(g);
        ++checked;
        if (!(a == b)) {
            ++mismatches;
            o.detail += describe(g) + ": solver " + a.str() + ", oracle " + b.str() + "; ";
        }
    }
    const double t = seconds_since(t0);
    o.pass = mismatches == 0 && t < kOracleAgreementLimit;
    o.detail += std::to_string(checked) + " graphs, " + std::to_string(mismatches) + " mismatches, " + fmt_seconds(t);
    return o;
}

Outcome type1_formula()
{
    const auto t0 = Clock::now();
    auto c = config(3);
    c.sample_pairs = kType1SamplePairs;
    c.sample_max_n = 4;
    auto o = from_report(check_type1_formula(c));
    const double t = seconds_since(t0);
    o.pass = o.pass && t < kType1Limit;
    o.detail += ", " + fmt_seconds(t);
    return o;
}

Outcome tight_cycles()
{
    Outcome o;
    const std::vector<std::pair<std::string, SignedGraph>> graphs = {
        {"+C5", make_family(FamilyKind::Cycle, 5, SignPattern::all_positive())},
        {"(K3,+)", make_family(FamilyKind::Complete, 3, SignPattern::all_positive())},
        {"-C4", make_family(FamilyKind::Cycle, 4, SignPattern::one_negative())},
        {"(K4,+)", make_family(FamilyKind::Complete, 4, SignPattern::all_positive())},
    };
    for (const auto& [name, g] : graphs) {
        const auto t = verify_tight_characterization(g);
        o.pass = o.pass && t.holds() && !t.vacuous;
        o.detail += name + " at " + t.chi_c.str() + ": " + std::to_string(t.colorings) + " colorings, " +
                    std::to_string(t.colorings_without_tight_cycle) + " without a tight cycle; ";
    }
    return o;
}

Outcome small_products()
{
    const auto r = check_small_products(config(3));
    auto o = from_report(r);
    const std::vector<std::string> required = {"C3- []' C3-", "C4- []' C4-"};
    std::size_t paths = 0;
    for (const auto& row : r.rows) {
        paths += row[0].front() == 'P' ? 1 : 0;
        if (row[3].empty() || row[4].empty()) {
            o.pass = false;
        }
    }
    for (const auto& name : required) {
        const bool present = std::any_of(r.rows.begin(), r.rows.end(), [&](const auto& row) { return row[0] == name; });
        o.pass = o.pass && present;
    }
    o.pass = o.pass && paths == 18;
    for (const auto& row : r.rows) {
        o.detail += "\n    " + row[0] + " [" + row[1] + "] claimed " + row[2] + ", solver " + row[3] + ", oracle " +
                    row[4];
    }
    for (const auto& f : r.findings) {
        o.detail += "\n    note: " + f;
    }
    return o;
}

Outcome cli_round_trip()
{
    namespace fs = std::filesystem;
    Outcome o;
    const auto dir = fs::temp_directory_path() / "sc_acceptance";
    fs::create_directories(dir);
    std::size_t files = 0;
    std::size_t certified = 0;
    std::vector<fs::path> corpus;
    for (const auto& entry : fs::directory_iterator(SC_FIXTURE_DIR "/sg")) {
        corpus.push_back(entry.path());
    }
    std::sort(corpus.begin(), corpus.end());
    for (const auto& path : corpus) {
        ++files;
        const auto doc = read_sg_file(path.string());
        const auto text = emit_sg(doc.graph, doc.comments);
        const auto again = parse_sg(text);
        if (!(again.graph == doc.graph) || again.comments != doc.comments || emit_sg(again.graph, again.comments) != text) {
            o.pass = false;
            o.detail += "round trip differs: " + path.filename().string() + "; ";
        }
        const auto col = (dir / "cert.col").string();
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run({"chic", path.string(), "--certificate", col}, out, err);
        const auto cert = read_col_file(col);
        if (code != 0 || !check_coloring(doc.graph, cert) || out.str() != cert.rate().str() + "\n") {
            o.pass = false;
            o.detail += "certificate rejected: " + path.filename().string() + "; ";
        } else {
            ++certified;
        }
    }
    fs::remove_all(dir);
    o.pass = o.pass && files == 20;
    o.detail += std::to_string(files) + " fixtures, " + std::to_string(certified) + " certificates revalidated";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"known exact values", known_values},
        {"oracle agreement on every class with n <= 4", oracle_agreement},
        {"type 1 product formula", type1_formula},
        {"digon lemma n <= 5", [] { return from_report(check_digon_lemma(config(5))); }},
        {"type 2 upper bound", [] { return from_report(check_type2_upper(config(3, 8))); }},
        {"switching invariance", [] { return from_report(check_switching_invariance(config(4, 20))); }},
        {"balance of type 1 products", [] { return from_report(check_balance_product(config(4))); }},
        {"tight cycles at chi_c", tight_cycles},
        {"small product values", small_products},
        {"cli round trip and certificates", cli_round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first
                  << ", " << fmt_seconds(seconds_since(t0)) << "): " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
