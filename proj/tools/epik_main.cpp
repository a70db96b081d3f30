// epik: exhaustive any-order epistasis search over a case/control genotype
// matrix, scored by mutual information. Subcommands: search, merge, balance,
// gen. Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include "epik/error.hpp"
#include "epik/io.hpp"
#include "epik/runtime.hpp"
#include "epik/schedule.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw epik::DataError("cannot open '" + path + "' for writing");
    }
    return out;
}

struct SearchArgs {
    std::string genotypes;
    std::string phenotypes;
    std::uint32_t order = 0;
    std::size_t top = 10;
    std::size_t block = 4096;
    std::uint32_t threads = 0; // 0 = hardware parallelism
    std::uint32_t rank = 0;
    std::uint32_t ranks = 1;
    std::string out;
};

int cmd_search(const SearchArgs& args) {
    if (args.rank >= args.ranks) {
        throw epik::DataError("--rank must be smaller than --ranks");
    }
    std::uint32_t threads = args.threads;
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    const epik::Dataset dataset = epik::io::load_dataset(args.genotypes, args.phenotypes);
    const epik::SearchConfig config{args.order, args.top, args.block};
    const epik::RunPlan plan(threads, args.rank, args.ranks);
    const epik::RankedList results = epik::run_search(dataset, config, plan);

    std::ofstream out = open_output(args.out);
    epik::io::write_result_file(out, results.ranked(), dataset.variant_ids());
    std::cout << "wrote " << results.size() << " combinations to " << args.out
              << (args.ranks > 1 ? " (partial: run `epik merge` over all ranks)" : "") << '\n';
    return 0;
}

struct MergeArgs {
    std::vector<std::string> inputs;
    std::size_t top = 10;
    std::string out;
};

int cmd_merge(const MergeArgs& args) {
    std::vector<std::filesystem::path> paths(args.inputs.begin(), args.inputs.end());
    const std::vector<epik::io::ResultEntry> merged = epik::merge_result_files(paths, args.top);
    std::ofstream out = open_output(args.out);
    epik::io::write_result_entries(out, merged);
    std::cout << "merged " << paths.size() << " file(s) into " << args.out << " ("
              << merged.size() << " combinations)\n";
    return 0;
}

struct BalanceArgs {
    std::uint32_t n = 0;
    std::uint32_t order = 0;
    std::uint32_t units = 1;
    std::string out;
};

int cmd_balance(const BalanceArgs& args) {
    const epik::BalanceReport report = epik::balance_report(args.n, args.order, args.units);
    std::ofstream out = open_output(args.out);
    epik::write_balance_csv(report, out);
    std::cout << "max deviation " << report.max_deviation_pct << "% over " << args.units
              << " unit(s); report in " << args.out << '\n';
    return 0;
}

struct GenArgs {
    std::uint32_t n = 0;
    std::uint32_t cases = 0;
    std::uint32_t controls = 0;
    std::uint64_t seed = 0;
    std::uint32_t plant_order = 0;
    double contrast = 0.0;
    std::string out_prefix;
};

int cmd_gen(const GenArgs& args) {
    epik::io::GeneratorConfig config;
    config.num_variants = args.n;
    config.num_cases = args.cases;
    config.num_controls = args.controls;
    config.seed = args.seed;
    if (args.plant_order > 0) {
        config.planted = epik::io::PlantedInteraction{args.plant_order, args.contrast};
    }
    const epik::io::GeneratedDataset generated = epik::io::generate_dataset(config);

    const std::string geno_path = args.out_prefix + ".geno";
    const std::string pheno_path = args.out_prefix + ".pheno";
    std::ofstream geno = open_output(geno_path);
    epik::io::write_genotype_file(geno, generated.data);
    std::ofstream pheno = open_output(pheno_path);
    epik::io::write_phenotype_file(pheno, generated.data);

    std::cout << "wrote " << geno_path << " and " << pheno_path << '\n';
    if (!generated.planted.empty()) {
        std::cout << "planted:";
        for (const std::uint32_t v : generated.planted) {
            std::cout << ' ' << generated.data.variant_ids[v];
        }
        std::cout << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exhaustive any-order epistasis search (mutual information)"};
    app.require_subcommand(1);

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand(
        "search", "score every k-combination of variants and keep the top S");
    search->add_option("--genotypes", search_args.genotypes, "genotype matrix file")
        ->required();
    search->add_option("--phenotypes", search_args.phenotypes, "case/control labels file")
        ->required();
    search->add_option("--order", search_args.order, "interaction order k")
        ->required()
        ->check(CLI::Range(2U, 1000000U));
    search->add_option("--top", search_args.top, "result list size S")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--block", search_args.block, "contingency tables scored per block")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--threads", search_args.threads,
                       "worker threads (0 = hardware parallelism)")
        ->capture_default_str();
    search->add_option("--rank", search_args.rank, "rank of this process")
        ->capture_default_str();
    search->add_option("--ranks", search_args.ranks, "total externally launched processes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    search->add_option("--out", search_args.out, "output result file")->required();

    MergeArgs merge_args;
    CLI::App* merge = app.add_subcommand("merge", "gather per-rank partial result files");
    merge->add_option("--inputs", merge_args.inputs, "partial result files")
        ->required()
        ->expected(-1);
    merge->add_option("--top", merge_args.top, "result list size S")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    merge->add_option("--out", merge_args.out, "output result file")->required();

    BalanceArgs balance_args;
    CLI::App* balance = app.add_subcommand(
        "balance", "report the workload distribution across processing units");
    balance->add_option("--n", balance_args.n, "number of variants")
        ->required()
        ->check(CLI::PositiveNumber);
    balance->add_option("--order", balance_args.order, "interaction order k")
        ->required()
        ->check(CLI::Range(2U, 1000000U));
    balance->add_option("--units", balance_args.units, "number of processing units")
        ->required()
        ->check(CLI::PositiveNumber);
    balance->add_option("--out", balance_args.out, "output CSV file")->required();

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic dataset");
    gen->add_option("--n", gen_args.n, "number of variants")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--cases", gen_args.cases, "number of cases")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--controls", gen_args.controls, "number of controls")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_args.seed, "generator seed")->capture_default_str();
    CLI::Option* plant = gen->add_option("--plant-order", gen_args.plant_order,
                                         "plant an interaction of this order")
                             ->check(CLI::Range(2U, 1000000U));
    gen->add_option("--contrast", gen_args.contrast,
                    "penetrance contrast of the planted interaction, in [0, 1]")
        ->needs(plant);
    plant->needs(gen->get_option("--contrast"));
    gen->add_option("--out-prefix", gen_args.out_prefix,
                    "output path prefix (.geno/.pheno appended)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (search->parsed()) {
            return cmd_search(search_args);
        }
        if (merge->parsed()) {
            return cmd_merge(merge_args);
        }
        if (balance->parsed()) {
            return cmd_balance(balance_args);
        }
        return cmd_gen(gen_args);
    } catch (const epik::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
