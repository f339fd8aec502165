#include "sc_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "signed_circular/col_format.hpp"
#include "signed_circular/errors.hpp"
#include "signed_circular/products.hpp"
#include "signed_circular/sg_format.hpp"
#include "signed_circular/solver.hpp"
#include "signed_circular/verify.hpp"

namespace sc::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const VertexSet& set)
{
    std::string out;
    for (auto v : set) {
        out += (out.empty() ? "" : ",") + std::to_string(v);
    }
    return out;
}

VertexSet parse_set(const std::string& text, int order)
{
    VertexSet set;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 0 || v >= order) {
            throw InputError("bad vertex `" + item + "` in --set");
        }
        set.push_back(v);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

struct ProductHeader {
    int type = 0;
    ProductIndex index;
};

// "product type=1 nA=3 nB=2", as written by the product subcommand.
std::optional<ProductHeader> find_product_header(const std::vector<std::string>& comments)
{
    for (const auto& c : comments) {
        std::istringstream in(c);
        std::string word;
        if (!(in >> word) || word != "product") {
            continue;
        }
        ProductHeader h;
        while (in >> word) {
            const auto eq = word.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            const auto key = word.substr(0, eq);
            const int value = std::stoi(word.substr(eq + 1));
            if (key == "type") {
                h.type = value;
            } else if (key == "nA") {
                h.index.left = value;
            } else if (key == "nB") {
                h.index.right = value;
            }
        }
        return h;
    }
    return std::nullopt;
}

struct Options {
    std::string file;
    std::string file_b;
    std::string output;
    std::string certificate;
    std::uint64_t budget = 0;
    int type = 1;
    std::string vsign_a;
    std::string vsign_b;
    std::string set;
    std::string factor = "g";
    int at = 0;
    std::string claim;
    int max_n = 3;
    int pair_max_n = 2;
    std::uint64_t seed = 1;
    int trials = 8;
    int samples = 0;
    std::string out_dir = ".";
};

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InputError("cannot write `" + path + "`");
    }
    file << text;
}

int cmd_chic(const Options& o, std::ostream& out)
{
    const auto doc = read_sg_file(o.file);
    const auto result = solve_chi_c(doc.graph, {CandidateOrder::Bisect, o.budget});
    out << result.value.str() << '\n';
    if (!o.certificate.empty()) {
        write_output(o.certificate, emit_col(result.witness), out);
    }
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const auto doc = read_sg_file(o.file);
    OracleOptions options;
    if (o.budget > 0) {
        options.node_budget = o.budget;
    }
    out << chi_c_oracle(doc.graph, options).str() << '\n';
    return kExitOk;
}

int cmd_product(const Options& o, std::ostream& out)
{
    const auto a = read_sg_file(o.file).graph;
    const auto b = read_sg_file(o.file_b).graph;
    std::vector<std::string> comments = {"product type=" + std::to_string(o.type) +
                                         " nA=" + std::to_string(a.order()) +
                                         " nB=" + std::to_string(b.order())};
    SignedGraph product;
    if (o.type == 1) {
        product = cartesian_type1(a, b);
    } else {
        auto parse_map = [](const std::string& text, const SignedGraph& g) {
            try {
                return text.empty() ? default_vertex_signs(g) : VertexSignMap::parse(text, g.order());
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        };
        const auto sa = parse_map(o.vsign_a, a);
        const auto sb = parse_map(o.vsign_b, b);
        comments.push_back("vsignA " + sa.str());
        comments.push_back("vsignB " + sb.str());
        product = cartesian_type2(a, b, sa, sb);
    }
    write_output(o.output, emit_sg(product, comments), out);
    return kExitOk;
}

int cmd_switch(const Options& o, std::ostream& out)
{
    const auto doc = read_sg_file(o.file);
    const auto set = parse_set(o.set, doc.graph.order());
    write_output(o.output, emit_sg(switch_at(doc.graph, set), {"switched at " + join(set)}), out);
    return kExitOk;
}

int cmd_balance(const Options& o, std::ostream& out)
{
    const auto doc = read_sg_file(o.file);
    const auto partition = harary_partition(doc.graph);
    if (!partition) {
        out << "unbalanced\n";
        return kExitOk;
    }
    out << "balanced\n";
    out << "part1 " << join(partition->part1) << '\n';
    out << "part2 " << join(partition->part2) << '\n';
    return kExitOk;
}

int cmd_digon(const Options& o, std::ostream& out)
{
    const auto doc = read_sg_file(o.file);
    write_output(o.output, emit_sg(digon(doc.graph)), out);
    return kExitOk;
}

int cmd_layers(const Options& o, std::ostream& out)
{
    const auto doc = read_sg_file(o.file);
    const auto header = find_product_header(doc.comments);
    if (!header) {
        throw InputError("`" + o.file + "` has no `# product` header");
    }
    try {
        const auto layer = o.factor == "g" ? g_layer(doc.graph, header->index, o.at)
                                           : h_layer(doc.graph, header->index, o.at);
        write_output(o.output, emit_sg(layer), out);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return kExitOk;
}

int write_report(const ClaimReport& report, const std::string& dir, std::ostream& out)
{
    std::filesystem::create_directories(dir);
    const auto base = std::filesystem::path(dir) / report.claim_id;
    std::ofstream csv(base.string() + ".csv");
    std::ofstream json(base.string() + ".json");
    if (!csv || !json) {
        throw InputError("cannot write reports under `" + dir + "`");
    }
    write_csv(csv, report);
    json << to_json(report);
    out << report.claim_id << ' ' << to_string(report.status()) << ' ' << report.instances_checked
        << " instances, " << report.failures.size() << " failures\n";
    for (const auto& f : report.failures) {
        out << "  FAIL " << f.instance << ": expected " << f.expected << ", observed " << f.observed << '\n';
    }
    for (const auto& finding : report.findings) {
        out << "  note " << finding << '\n';
    }
    return report.failed() ? kExitClaimFailed : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    VerifyConfig config;
    config.max_n = o.max_n;
    config.seed = o.seed;
    config.trials = o.trials;
    config.sample_pairs = o.samples;
    if (o.budget > 0) {
        config.oracle.node_budget = o.budget;
    }
    std::vector<std::string> claims;
    if (o.claim == "all") {
        claims = claim_ids();
    } else if (std::find(claim_ids().begin(), claim_ids().end(), o.claim) != claim_ids().end()) {
        claims = {o.claim};
    } else {
        throw InputError("unknown claim `" + o.claim + "`");
    }
    int code = kExitOk;
    for (const auto& id : claims) {
        code = std::max(code, write_report(run_claim(id, config), o.out_dir, out));
    }
    return code;
}

int cmd_atlas(const Options& o, std::ostream& out)
{
    std::ostringstream csv;
    write_csv(csv, atlas(o.max_n, o.pair_max_n));
    write_output(o.output, csv.str(), out);
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Circular chromatic numbers of signed graphs and their Cartesian products", "sc"};
    app.require_subcommand(1, 1);
    Options o;

    auto* chic = app.add_subcommand("chic", "Exact circular chromatic number as p/q");
    chic->add_option("file", o.file, ".sg input")->required();
    chic->add_option("--certificate", o.certificate, "Write a witness coloring (.col)");
    chic->add_option("--budget", o.budget, "Search node budget (0: unlimited)");

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference value");
    oracle->add_option("file", o.file, ".sg input")->required();
    oracle->add_option("--budget", o.budget, "Node budget");

    auto* product = app.add_subcommand("product", "Cartesian product of two signed graphs");
    product->add_option("--type", o.type, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    product->add_option("a", o.file, "Left factor")->required();
    product->add_option("b", o.file_b, "Right factor")->required();
    product->add_option("--vsign-a", o.vsign_a, "Vertex signs of A, e.g. 0:+,1:-");
    product->add_option("--vsign-b", o.vsign_b, "Vertex signs of B");
    product->add_option("-o,--output", o.output, "Output .sg")->required();

    auto* sw = app.add_subcommand("switch", "Switch at a vertex set");
    sw->add_option("file", o.file, ".sg input")->required();
    sw->add_option("--set", o.set, "Comma separated vertices")->required();
    sw->add_option("-o,--output", o.output, "Output .sg")->required();

    auto* balance = app.add_subcommand("balance", "Balance test with Harary partition");
    balance->add_option("file", o.file, ".sg input")->required();

    auto* dg = app.add_subcommand("digon", "Replace every edge by a +/- digon");
    dg->add_option("file", o.file, ".sg input")->required();
    dg->add_option("-o,--output", o.output, "Output .sg")->required();

    auto* layers = app.add_subcommand("layers", "Extract a factor layer of a product file");
    layers->add_option("file", o.file, "Product .sg written by `sc product`")->required();
    layers->add_option("--factor", o.factor, "g: copy of A at B-vertex V; h: copy of B at A-vertex V")
        ->check(CLI::IsMember({"g", "h"}));
    layers->add_option("--at", o.at, "Fixed vertex of the other factor")->required();
    layers->add_option("-o,--output", o.output, "Output .sg (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check a claim and write CLAIM.csv / CLAIM.json");
    verify->add_option("claim", o.claim, "Claim id or `all`")->required();
    verify->add_option("--max-n", o.max_n, "Largest factor order");
    verify->add_option("--seed", o.seed, "Random seed")->envname("SC_SEED");
    verify->add_option("--trials", o.trials, "Random trials per instance");
    verify->add_option("--samples", o.samples, "Extra seeded pairs at n <= 4 (type1-formula)");
    verify->add_option("--budget", o.budget, "Oracle node budget");
    verify->add_option("--out", o.out_dir, "Report directory");

    auto* at = app.add_subcommand("atlas", "CSV of chi_c over enumerated graphs and pairs");
    at->add_option("--max-n", o.max_n, "Largest graph order");
    at->add_option("--pair-max-n", o.pair_max_n, "Largest factor order for product rows (0: none)");
    at->add_option("--out", o.output, "Output CSV (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "sc: " << e.what() << '\n';
        return kExitBadInput;
    }

    try {
        if (chic->parsed()) {
            return cmd_chic(o, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(o, out);
        }
        if (product->parsed()) {
            return cmd_product(o, out);
        }
        if (sw->parsed()) {
            return cmd_switch(o, out);
        }
        if (balance->parsed()) {
            return cmd_balance(o, out);
        }
        if (dg->parsed()) {
            return cmd_digon(o, out);
        }
        if (layers->parsed()) {
            return cmd_layers(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        return cmd_atlas(o, out);
    } catch (const ParseError& e) {
        err << "sc: parse error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const BudgetExceeded& e) {
        err << "sc: budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InputError& e) {
        err << "sc: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "sc: " << e.what() << '\n';
        return kExitBadInput;
    }
}

} // namespace sc::cli
