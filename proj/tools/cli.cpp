#include "cli.hpp"

#include "posttag/block_search.hpp"
#include "posttag/block_word.hpp"
#include "posttag/certificate.hpp"
#include "posttag/chain.hpp"
#include "posttag/constants.hpp"
#include "posttag/errors.hpp"
#include "posttag/tag_system.hpp"
#include "posttag/tokens.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace posttag::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string trim(std::string text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

// Word arguments are either literal text or @path to a file holding it.
std::string word_argument(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        return trim(read_file(arg.substr(1)));
    }
    return arg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << content)) {
        throw ParseError("cannot write '" + path + "'");
    }
}

struct SimulateArgs {
    std::string word;
    std::uint64_t budget = 0;
    std::string target;
};

int do_simulate(const SimulateArgs& args, std::ostream& out) {
    const BinaryWord start = BinaryWord::parse(word_argument(args.word));
    std::optional<BinaryWord> target;
    if (!args.target.empty()) {
        target = BinaryWord::parse(word_argument(args.target));
    }
    const RunOutcome outcome = run(start, TagRules::post(), args.budget, target);
    out << to_string(outcome.kind) << ' ' << outcome.steps_taken << '\n';
    out << "final_length = " << outcome.final.size() << '\n';
    if (outcome.cycle_length) {
        out << "cycle_length = " << *outcome.cycle_length << '\n';
    }
    return outcome.kind == RunKind::BudgetExhausted ? kExitBudgetExhausted : kExitOk;
}

struct TheoremArgs {
    std::size_t n_max = 5;
    std::size_t m_max = 5;
    std::uint64_t budget = kDefaultTheoremBudget;
};

int do_verify_theorem(const TheoremArgs& args, std::ostream& out) {
    constexpr int kWidth = 8;
    bool all_reached = true;
    out << std::setw(kWidth) << "n\\m";
    for (std::size_t m = 0; m <= args.m_max; ++m) {
        out << std::setw(kWidth) << m;
    }
    out << '\n';
    for (std::size_t n = 0; n <= args.n_max; ++n) {
        out << std::setw(kWidth) << n;
        for (std::size_t m = 0; m <= args.m_max; ++m) {
            const RunOutcome outcome = verify_theorem_direct(n, m, args.budget);
            if (outcome.kind == RunKind::TargetReached) {
                out << std::setw(kWidth) << outcome.steps_taken;
            } else {
                all_reached = false;
                out << std::setw(kWidth) << "-";
            }
        }
        out << '\n';
    }
    return all_reached ? kExitOk : kExitBudgetExhausted;
}

struct OmegaArgs {
    std::string seed_a;
    std::string seed_b;
    std::string seed_c;
    int seed_x = 0;
    std::string emit;
    std::string check;
};

int report_failures(const std::vector<std::string>& failures, std::ostream& err) {
    for (const std::string& f : failures) {
        err << "FAIL " << f << '\n';
    }
    return failures.empty() ? kExitOk : kExitVerificationFailed;
}

int do_verify_omega(const OmegaArgs& args, std::ostream& out, std::ostream& err) {
    if (!args.check.empty()) {
        const CertificateReview review = review_certificate(read_file(args.check));
        const int code = report_failures(review.failures, err);
        out << (code == kExitOk ? "certificate OK" : "certificate REJECTED") << ": "
            << review.recomputed.steps.size() << " steps\n";
        return code;
    }

    Quadruplet seed = growth_seed();
    if (!args.seed_a.empty()) {
        seed.prefix = BinaryWord::parse(word_argument(args.seed_a));
    }
    if (!args.seed_b.empty()) {
        seed.core = BinaryWord::parse(word_argument(args.seed_b));
    }
    if (!args.seed_c.empty()) {
        seed.suffix = BinaryWord::parse(word_argument(args.seed_c));
    }
    seed.offset = Mod3Residue(args.seed_x);

    ChainCertificate chain;
    try {
        chain = verify_chain(seed);
    } catch (const InvariantViolated& e) {
        err << "FAIL " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    const std::string document = render_certificate(chain);
    if (!args.emit.empty()) {
        write_file(args.emit, document);
        out << "wrote " << args.emit << '\n';
    } else {
        out << document;
    }
    return report_failures(chain_failures(chain, compare_with_appendix(chain)), err);
}

int do_blockset(const std::string& word, std::ostream& out) {
    for (const BlockWord& member : converting_set(BlockWord::parse(word))) {
        out << member.to_string() << '\n';
    }
    return kExitOk;
}

struct SearchArgs {
    unsigned max_rows = 2;
    std::uint64_t budget = 100;
    unsigned threads = 1;
    std::size_t max_suffix = ExtendOptions{}.max_suffix_length;
    std::string output;
};

int do_block_search(const SearchArgs& args, std::ostream& out) {
    SearchOptions options;
    options.max_rows = args.max_rows;
    options.budget = args.budget;
    options.threads = args.threads;
    options.extend.max_suffix_length = args.max_suffix;
    const std::string document = render_search_document(options, search(options));
    if (!args.output.empty()) {
        write_file(args.output, document);
    } else {
        out << document;
    }
    return kExitOk;
}

int do_decode(const std::string& input, bool to_tokens, std::ostream& out) {
    const std::string text = word_argument(input);
    if (to_tokens) {
        out << encode_tokens(BinaryWord::parse(text)).to_string() << '\n';
    } else {
        out << decode_tokens(TokenWord::parse(text)).to_string() << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Post tag system {N=3, 0->00, 1->1101}: simulation, growth certificates, building blocks",
                 "posttag"};
    app.require_subcommand(1);

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand("simulate", "Run the tag system from a word");
    simulate->add_option("--word", simulate_args.word, "Start word over {0,1}, or @file")->required();
    simulate->add_option("--budget", simulate_args.budget, "Step budget")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--target", simulate_args.target, "Stop when this word (or @file) is reached");

    TheoremArgs theorem_args;
    auto* theorem = app.add_subcommand("verify-theorem", "Simulate a^n b c^m -> a^(n+1) b c^(m+1) on a grid");
    theorem->add_option("n_max,--n-max", theorem_args.n_max, "Largest n")->capture_default_str();
    theorem->add_option("m_max,--m-max", theorem_args.m_max, "Largest m")->capture_default_str();
    theorem->add_option("budget,--budget", theorem_args.budget, "Step budget per cell")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    OmegaArgs omega_args;
    auto* omega = app.add_subcommand("verify-omega", "Derive and certify the 14-quadruplet chain");
    omega->add_option("--seed-a", omega_args.seed_a, "Replace the seed prefix word (word or @file)");
    omega->add_option("--seed-b", omega_args.seed_b, "Replace the seed core word (word or @file)");
    omega->add_option("--seed-c", omega_args.seed_c, "Replace the seed suffix word (word or @file)");
    omega->add_option("--seed-x", omega_args.seed_x, "Seed cut index")->check(CLI::Range(0, 2));
    auto* emit = omega->add_option("--emit", omega_args.emit, "Write the certificate to this file");
    omega->add_option("--check", omega_args.check, "Re-validate a certificate file")->excludes(emit);

    std::string blockset_word;
    auto* blockset = app.add_subcommand("blockset", "List the converting set of a block word");
    blockset->add_option("word", blockset_word, "Word over {v,u,w,0,1}")->required();

    SearchArgs search_args;
    auto* block_search = app.add_subcommand("block-search", "Search building blocks meeting conditions (ii)-(iv)");
    block_search->add_option("max_rows,--max-rows", search_args.max_rows, "Largest initial block")
        ->capture_default_str()
        ->check(CLI::Range(1U, 64U));
    block_search->add_option("budget,--budget", search_args.budget, "Blocks to visit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    block_search->add_option("threads,--threads", search_args.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    block_search->add_option("--max-suffix", search_args.max_suffix, "Longest first-row extension suffix")
        ->capture_default_str();
    block_search->add_option("--output", search_args.output, "Write the result document to this file");

    std::string decode_input;
    bool to_tokens = false;
    auto* decode = app.add_subcommand("decode", "Convert between Z/O token form and {0,1}");
    decode->add_option("input", decode_input, "Token word, or binary word with --to-tokens (or @file)")->required();
    decode->add_flag("--to-tokens", to_tokens, "Encode a binary word into tokens");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("posttag");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        verify_embedded_constants();
    } catch (const Error& e) {
        err << "FAIL " << e.what() << '\n';
        return kExitVerificationFailed;
    }

    try {
        if (simulate->parsed()) {
            return do_simulate(simulate_args, out);
        }
        if (theorem->parsed()) {
            return do_verify_theorem(theorem_args, out);
        }
        if (omega->parsed()) {
            return do_verify_omega(omega_args, out, err);
        }
        if (blockset->parsed()) {
            return do_blockset(blockset_word, out);
        }
        if (block_search->parsed()) {
            return do_block_search(search_args, out);
        }
        if (decode->parsed()) {
            return do_decode(decode_input, to_tokens, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const NotTokenizable& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

} // namespace posttag::cli
