// lambdadet: command-line front end for the lambda-determinant engines,
// the ASM summation formula and the tiling / matching oracles.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lambdadet/lambdadet.hpp"
#include "lambdadet/reproduce.hpp"

namespace {

using namespace lambdadet;
using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

int parse_positive(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + " '" + s + "'");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

// Generated matrices: diamond:even:N, diamond:odd:N, ones:N, mc:C.
PolyMatrix matrix_from_generator(const std::string& gen) {
    const auto parts = split(gen, ':');
    if (parts.size() == 3 && parts[0] == "diamond" && (parts[1] == "even" || parts[1] == "odd")) {
        return diamond_matrix(parse_positive(parts[2], "half-order"),
                              parts[1] == "even" ? Parity::even : Parity::odd);
    }
    if (parts.size() == 2 && parts[0] == "ones") return all_ones_matrix(parse_positive(parts[1], "size"));
    if (parts.size() == 2 && parts[0] == "mc") {
        const BigRat c = BigRat::parse(parts[1]);
        if (c.is_zero()) throw UsageError("mc:C needs C != 0");
        return mc_fixture(c);
    }
    throw UsageError("unknown matrix generator '" + gen + "' (diamond:even:N, diamond:odd:N, ones:N, mc:C)");
}

struct MatrixSource {
    std::string file;
    std::string generator;

    void attach(CLI::App* cmd) {
        cmd->add_option("file", file, "matrix JSON file {\"size\": n, \"entries\": [[...]]}");
        cmd->add_option("--size-from", generator, "generated matrix: diamond:even:N, diamond:odd:N, ones:N, mc:C");
    }

    PolyMatrix load() const {
        if (file.empty() == generator.empty()) throw UsageError("give exactly one of a matrix file or --size-from");
        return file.empty() ? matrix_from_generator(generator) : matrix_from_json(read_json_file(file));
    }
};

void print_value(const LaurentPoly& p, const std::string& format) {
    if (format == "json") {
        std::cout << json{{"polynomial", p.to_string()}, {"terms", p.term_count()}}.dump() << '\n';
    } else {
        std::cout << p.to_string() << '\n';
    }
}

std::string compact_matrix_json(const PolyMatrix& m) {
    const json doc = matrix_to_json(m);
    std::string out = "{\"size\": " + std::to_string(m.size()) + ", \"entries\": [\n";
    for (std::size_t i = 0; i < doc["entries"].size(); ++i) {
        out += "  " + doc["entries"][i].dump() + (i + 1 < doc["entries"].size() ? ",\n" : "\n");
    }
    return out + "]}";
}

RegionMask mask_from_name(const std::string& name, int size) {
    if (name == "diamond") return diamond_mask_for_size(size);
    if (name == "complement") return diamond_mask_for_size(size).complement();
    return mask_from_json(read_json_file(name), size);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact lambda-determinants, alternating-sign matrices and domino tilings"};
    app.require_subcommand(1);

    int cap = cap_from_environment();
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    std::string format = "text";
    app.add_option("--cap", cap, "ASM enumeration cap (default 7, or LAMBDADET_CAP)")->check(CLI::Range(1, 8));
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--threads", threads, "worker threads for the symbolic engine")->check(CLI::Range(1, 256));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    // det
    MatrixSource det_src;
    bool det_perturb = false, det_limit = false;
    std::string det_lambda;
    auto* det = app.add_subcommand("det", "symbolic lambda-determinant of a matrix");
    det_src.attach(det);
    det->add_flag("--t-perturb", det_perturb, "replace zero entries by t first");
    det->add_flag("--limit-t0", det_limit, "take the limit t -> 0 of the result");
    det->add_option("--eval-lambda", det_lambda, "substitute a rational value for lambda at the end");
    det->callback([&] {
        PolyMatrix m = det_src.load();
        if (det_perturb) m = t_perturb(m);
        LaurentPoly value = lambda_det_dp(m, threads).top();
        if (det_limit) value = poly_limit_at_t0(value);
        if (!det_lambda.empty()) value = substitute_lambda(value, BigRat::parse(det_lambda));
        print_value(value, format);
    });

    // det-numeric
    MatrixSource num_src;
    std::string num_lambda;
    bool num_convention = false;
    auto* det_numeric = app.add_subcommand("det-numeric", "lambda-determinant with lambda fixed during the recursion");
    num_src.attach(det_numeric);
    det_numeric->add_option("--lambda", num_lambda, "rational value of lambda")->required();
    det_numeric->add_flag("--zero-over-zero", num_convention, "read 0/0 as 0");
    det_numeric->callback([&] {
        const auto pyr = lambda_det_numeric(num_src.load(), BigRat::parse(num_lambda), num_convention);
        if (format == "json") {
            std::cout << json{{"value", pyr.top().to_string()}}.dump() << '\n';
        } else {
            std::cout << pyr.top() << '\n';
        }
    });

    // trace
    MatrixSource trace_src;
    std::string trace_lambda;
    bool trace_convention = false;
    auto* trace = app.add_subcommand("trace", "numeric condensation pyramid, all layers");
    trace_src.attach(trace);
    trace->add_option("--lambda", trace_lambda, "rational value of lambda")->required();
    trace->add_flag("--zero-over-zero", trace_convention, "read 0/0 as 0");
    trace->callback([&] {
        const auto layers = condensation_trace(trace_src.load(), BigRat::parse(trace_lambda), trace_convention);
        if (format == "json") {
            std::cout << layers_to_json(layers).dump() << '\n';
        } else {
            std::cout << format_layers_text(layers);
        }
    });

    // diamond
    int diamond_half = 0;
    std::string diamond_parity = "even";
    auto* diamond = app.add_subcommand("diamond", "emit the diamond 0/1 matrix as JSON");
    diamond->add_option("--half-order", diamond_half, "n: size 2n (even) or 2n+1 (odd)")
        ->required()
        ->check(CLI::PositiveNumber);
    diamond->add_option("--parity", diamond_parity, "even or odd")->check(CLI::IsMember({"even", "odd"}));
    diamond->callback([&] {
        std::cout << compact_matrix_json(
                         diamond_matrix(diamond_half, diamond_parity == "even" ? Parity::even : Parity::odd))
                  << '\n';
    });

    // asm
    auto* asm_cmd = app.add_subcommand("asm", "alternating-sign matrices");
    asm_cmd->require_subcommand(1);
    int asm_size = 0;
    auto* asm_count = asm_cmd->add_subcommand("count", "number of n-by-n ASMs and expanded term count");
    asm_count->add_option("--size", asm_size, "matrix size")->required()->check(CLI::PositiveNumber);
    asm_count->callback([&] {
        const auto count = count_asms(asm_size, cap);
        const BigInt expanded = expanded_term_count(asm_size, cap);
        if (format == "json") {
            std::cout << json{{"size", asm_size}, {"count", count}, {"expanded_terms", expanded.get_str()}}.dump()
                      << '\n';
        } else {
            std::cout << "asms " << count << "\nexpanded_terms " << expanded << '\n';
        }
    });

    auto* asm_list = asm_cmd->add_subcommand("list", "every n-by-n ASM, one JSON array per line");
    asm_list->add_option("--size", asm_size, "matrix size")->required()->check(CLI::PositiveNumber);
    asm_list->callback([&] {
        for_each_asm(asm_size, [](const AltSignMatrix& b) { std::cout << asm_to_json(b).dump() << '\n'; }, cap);
    });

    std::string asm_file;
    auto* asm_stats_cmd = asm_cmd->add_subcommand("stats", "I(B), N(B), P(B) of an ASM file, or of all ASMs of a size");
    asm_stats_cmd->add_option("--file", asm_file, "ASM JSON file");
    asm_stats_cmd->add_option("--size", asm_size, "enumerate all ASMs of this size")->check(CLI::PositiveNumber);
    asm_stats_cmd->callback([&] {
        auto emit = [&](const AltSignMatrix& b) {
            const AsmStats st = asm_stats(b);
            if (format == "json") {
                std::cout << json{{"asm", asm_to_json(b)}, {"I", st.inversion}, {"N", st.negatives}, {"P", st.p_stat}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << asm_to_json(b).dump() << "  I=" << st.inversion << " N=" << st.negatives
                          << " P=" << st.p_stat << '\n';
            }
        };
        if (asm_file.empty() == (asm_size == 0)) throw UsageError("give exactly one of --file or --size");
        if (!asm_file.empty()) {
            emit(asm_from_json(read_json_file(asm_file)));
        } else {
            for_each_asm(asm_size, emit, cap);
        }
    });

    std::string mask_name = "diamond";
    auto* asm_region = asm_cmd->add_subcommand("region-sum", "partial sums of ASM entries over a mask");
    asm_region->add_option("--file", asm_file, "ASM JSON file");
    asm_region->add_option("--size", asm_size, "range over all ASMs of this size")->check(CLI::PositiveNumber);
    asm_region->add_option("--mask", mask_name, "diamond, complement, or a JSON file of [i, j] pairs");
    asm_region->callback([&] {
        if (asm_file.empty() == (asm_size == 0)) throw UsageError("give exactly one of --file or --size");
        if (!asm_file.empty()) {
            const AltSignMatrix b = asm_from_json(read_json_file(asm_file));
            std::cout << region_sum(b, mask_from_name(mask_name, b.size())) << '\n';
            return;
        }
        const RegionMask mask = mask_from_name(mask_name, asm_size);
        long lo = 0, hi = 0;
        std::uint64_t count = 0, negative = 0;
        for_each_asm(asm_size, [&](const AltSignMatrix& b) {
            const long s = region_sum(b, mask);
            if (count == 0 || s < lo) lo = s;
            if (count == 0 || s > hi) hi = s;
            negative += s < 0;
            ++count;
        }, cap);
        if (format == "json") {
            std::cout << json{{"asms", count}, {"min", lo}, {"max", hi}, {"negative", negative}}.dump() << '\n';
        } else {
            std::cout << "asms " << count << "\nmin " << lo << "\nmax " << hi << "\nnegative " << negative << '\n';
        }
    });

    // eq2
    MatrixSource eq2_src;
    auto* eq2 = app.add_subcommand("eq2", "lambda-determinant by the ASM summation formula");
    eq2_src.attach(eq2);
    eq2->callback([&] { print_value(lambda_det_sum(eq2_src.load(), cap), format); });

    // tile
    int tile_square = 0, tile_aztec = 0;
    std::string tile_region;
    auto* tile = app.add_subcommand("tile", "count domino tilings");
    auto* sq = tile->add_option("--square", tile_square, "m-by-m square")->check(CLI::PositiveNumber);
    auto* az = tile->add_option("--aztec", tile_aztec, "Aztec diamond of order n")->check(CLI::PositiveNumber);
    auto* rg = tile->add_option("--region", tile_region, "JSON list of [row, col] cells");
    sq->excludes(az)->excludes(rg);
    az->excludes(rg);
    tile->callback([&] {
        CellRegion region;
        if (tile_square) {
            region = square_region(tile_square);
        } else if (tile_aztec) {
            region = aztec_region(tile_aztec);
        } else if (!tile_region.empty()) {
            region = region_from_json(read_json_file(tile_region));
        } else {
            throw UsageError("give one of --square, --aztec, --region");
        }
        std::cout << count_tilings(region) << '\n';
    });

    // tfk
    int tfk_n = 0;
    auto* tfk = app.add_subcommand("tfk", "Temperley-Fisher-Kasteleyn product for the 2n-by-2n square");
    tfk->add_option("--n", tfk_n, "half side length")->required()->check(CLI::PositiveNumber);
    tfk->callback([&] {
        const TfkResult r = tfk_count(tfk_n);
        std::ostringstream product;
        product.precision(17);
        product << r.product;
        if (format == "json") {
            std::cout << json{{"product", r.product}, {"nearest", r.nearest.get_str()}}.dump() << '\n';
        } else {
            std::cout << "product " << product.str() << "\nnearest " << r.nearest << '\n';
        }
    });

    // kuo-check
    int kuo_order = 0;
    std::string kuo_weights;
    bool kuo_random = false;
    auto* kuo = app.add_subcommand("kuo-check", "check Kuo's condensation identity on an Aztec diamond graph");
    kuo->add_option("--order", kuo_order, "graph order (2..5)")->required()->check(CLI::Range(2, 5));
    auto* kw = kuo->add_option("--weights", kuo_weights, "JSON list of [[r1,c1],[r2,c2],\"w\"]");
    auto* kr = kuo->add_flag("--random", kuo_random, "random non-negative rational weights from --seed");
    kw->excludes(kr);
    kuo->callback([&] {
        AztecGraph g(kuo_order);
        if (!kuo_weights.empty()) g = graph_from_json(read_json_file(kuo_weights), kuo_order);
        if (kuo_random) {
            std::mt19937_64 rng(seed);
            randomize_weights(g, rng);
        }
        const KuoSides s = kuo_sides(g);
        const bool ok = s.lhs == s.rhs;
        if (format == "json") {
            std::cout << json{{"lhs", s.lhs.to_string()}, {"rhs", s.rhs.to_string()}, {"holds", ok}}.dump() << '\n';
        } else {
            std::cout << "lhs " << s.lhs << "\nrhs " << s.rhs << '\n' << (ok ? "holds" : "FAILS") << '\n';
        }
        if (!ok) throw Error("KuoIdentityFailed", "W(G)W(G_C) differs from the condensation right-hand side");
    });

    // reproduce
    bool with_time = false;
    auto* reproduce = app.add_subcommand("reproduce", "run the full reproduction table");
    reproduce->add_flag("--timing", with_time, "append wall time per criterion");
    int reproduce_status = 0;
    reproduce->callback([&] {
        int passed = 0;
        const auto criteria = acceptance_criteria(seed);
        for (const auto& c : criteria) {
            const CriterionResult r = run_criterion(c);
            passed += r.passed;
            std::cout << format_result(r, with_time) << std::endl;
        }
        std::cout << passed << "/" << criteria.size() << " criteria passed\n";
        reproduce_status = passed == static_cast<int>(criteria.size()) ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return reproduce_status;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const lambdadet::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
