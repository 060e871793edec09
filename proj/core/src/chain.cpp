#include "posttag/chain.hpp"

#include "posttag/constants.hpp"
#include "posttag/errors.hpp"

#include <string>

namespace posttag {

namespace {

constexpr std::size_t kMinWordLength = 4;

void require_chain_invariants(const Quadruplet& q) {
    auto too_short = [](const BinaryWord& w) { return w.size() < kMinWordLength; };
    if (too_short(q.prefix) || too_short(q.core) || too_short(q.suffix)) {
        throw InvariantViolated("quadruplet words must have at least 4 symbols");
    }
    if (length_residue(q.prefix) != Mod3Residue(0)) {
        throw InvariantViolated("prefix length is not divisible by 3 (l = " +
                                std::to_string(length_residue(q.prefix).value()) + ")");
    }
    if (length_residue(q.suffix) != Mod3Residue(0)) {
        throw InvariantViolated("suffix length is not divisible by 3 (l = " +
                                std::to_string(length_residue(q.suffix).value()) + ")");
    }
}

Quadruplet successor(const Quadruplet& q) {
    const Mod3Residue y = q.offset - length_residue(q.core);
    return Quadruplet{sample_expand(cut(q.prefix, q.offset)), sample_expand(cut(q.core, q.offset)),
                      sample_expand(cut(q.suffix, y)), y};
}

// cut() throws on words shorter than the index; a claim over such words
// simply fails the check.
bool derived_matches(const BinaryWord& source, Mod3Residue x, const BinaryWord& claimed) {
    if (source.size() < x.value()) {
        return false;
    }
    return sample_expand(cut(source, x)) == claimed;
}

} // namespace

Quadruplet growth_seed() {
    return Quadruplet{growth_prefix(), growth_core(), growth_suffix(), Mod3Residue(0)};
}

StepChecks check_step(const Quadruplet& source, const Quadruplet& claimed) {
    StepChecks checks;
    checks.prefix_residue_zero = length_residue(source.prefix) == Mod3Residue(0);
    checks.suffix_residue_zero = length_residue(source.suffix) == Mod3Residue(0);
    checks.offset_equation = source.offset - length_residue(source.core) == claimed.offset;
    checks.prefix_derived = derived_matches(source.prefix, source.offset, claimed.prefix);
    checks.core_derived = derived_matches(source.core, source.offset, claimed.core);
    checks.suffix_derived = derived_matches(source.suffix, claimed.offset, claimed.suffix);
    return checks;
}

StepCertificate derive_next(const Quadruplet& source) {
    require_chain_invariants(source);
    StepCertificate cert{source, successor(source), {}};
    cert.checks = check_step(cert.source, cert.derived);
    return cert;
}

std::vector<Quadruplet> ChainCertificate::quadruplets() const {
    std::vector<Quadruplet> out;
    out.reserve(steps.size() + 1);
    out.push_back(seed);
    for (const StepCertificate& s : steps) {
        out.push_back(s.derived);
    }
    return out;
}

bool ChainCertificate::all_steps_valid() const noexcept {
    for (const StepCertificate& s : steps) {
        if (!s.valid()) {
            return false;
        }
    }
    return true;
}

Quadruplet closure_target(const Quadruplet& seed) {
    return Quadruplet{seed.prefix, seed.prefix + seed.core + seed.suffix, seed.suffix, seed.offset};
}

ChainCertificate verify_chain(const Quadruplet& seed, std::size_t steps) {
    ChainCertificate chain{seed, {}, false};
    chain.steps.reserve(steps);
    const Quadruplet* current = &chain.seed;
    for (std::size_t i = 0; i < steps; ++i) {
        chain.steps.push_back(derive_next(*current));
        current = &chain.steps.back().derived;
    }
    chain.closure_ok = *current == closure_target(seed);
    return chain;
}

AppendixComparison compare_with_appendix(const ChainCertificate& chain) {
    const std::vector<Quadruplet> quads = chain.quadruplets();
    const std::vector<AppendixEntry> table = appendix_vectors();
    if (quads.size() != table.size()) {
        return {false, std::nullopt,
                "chain has " + std::to_string(quads.size()) + " quadruplets, table has " +
                    std::to_string(table.size())};
    }
    for (std::size_t i = 0; i < quads.size(); ++i) {
        const char* field = nullptr;
        if (!(quads[i].prefix == table[i].prefix)) {
            field = "prefix";
        } else if (!(quads[i].suffix == table[i].suffix)) {
            field = "suffix";
        } else if (quads[i].offset != table[i].offset) {
            field = "offset";
        }
        if (field != nullptr) {
            return {false, i + 1, std::string(field) + " of quadruplet " + std::to_string(i + 1) +
                                      " differs from the reference table"};
        }
    }
    return {true, std::nullopt, {}};
}

BinaryWord instantiate(const Quadruplet& q, std::size_t n, std::size_t m) {
    BinaryWord word = repeat(q.prefix, n);
    word.append(q.core);
    word.append(repeat(q.suffix, m));
    word.drop_front(q.offset.value());
    return word;
}

std::uint64_t chain_step_count(const ChainCertificate& chain, std::size_t n, std::size_t m) {
    std::uint64_t total = 0;
    for (const StepCertificate& s : chain.steps) {
        const std::uint64_t length = n * s.source.prefix.size() + s.source.core.size() +
                                     m * s.source.suffix.size() - s.source.offset.value();
        total += full_pass_steps(length);
    }
    return total;
}

RunOutcome verify_theorem_direct(std::size_t n, std::size_t m, std::uint64_t budget) {
    const Quadruplet seed = growth_seed();
    const BinaryWord start = instantiate(seed, n, m);
    const BinaryWord target = instantiate(seed, n + 1, m + 1);
    return run(start, TagRules::post(), budget, target);
}

} // namespace posttag
