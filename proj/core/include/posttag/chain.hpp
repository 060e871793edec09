#ifndef POSTTAG_CHAIN_HPP
#define POSTTAG_CHAIN_HPP

#include "posttag/binary_word.hpp"
#include "posttag/mod3.hpp"
#include "posttag/tag_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posttag {

/**
 * Describes the whole family (prefix^n core suffix^m) cut by `offset`, for
 * every n, m >= 0 at once.
 */
struct Quadruplet {
    BinaryWord prefix;
    BinaryWord core;
    BinaryWord suffix;
    Mod3Residue offset;

    friend bool operator==(const Quadruplet&, const Quadruplet&) = default;
};

/// (prefix, core, suffix, 0) of the growing family.
[[nodiscard]] Quadruplet growth_seed();

/// Side conditions of one chain step. The field order follows the
/// certificate document: l_a, l_c, y_eq, d_ok, e_ok, f_ok.
struct StepChecks {
    bool prefix_residue_zero = false; // l_a
    bool suffix_residue_zero = false; // l_c
    bool offset_equation = false;     // y_eq: source.offset - l(source.core) == derived.offset
    bool prefix_derived = false;      // d_ok
    bool core_derived = false;        // e_ok
    bool suffix_derived = false;      // f_ok

    [[nodiscard]] bool all() const noexcept {
        return prefix_residue_zero && suffix_residue_zero && offset_equation && prefix_derived &&
               core_derived && suffix_derived;
    }
    friend bool operator==(const StepChecks&, const StepChecks&) = default;
};

struct StepCertificate {
    Quadruplet source;
    Quadruplet derived;
    StepChecks checks;

    /// The cut index of the derived family (y).
    [[nodiscard]] Mod3Residue offset() const noexcept { return derived.offset; }
    [[nodiscard]] bool valid() const noexcept { return checks.all(); }
};

/// Evaluates the step conditions for a claimed successor. With every check
/// passing, a full pass maps the source family onto the claimed one for all
/// n and m.
[[nodiscard]] StepChecks check_step(const Quadruplet& source, const Quadruplet& claimed);

/**
 * Computes the successor of `source`:
 * y = x - l(core), derived = (g(prefix cut x), g(core cut x), g(suffix cut y), y),
 * where g is sample_expand.
 *
 * Throws InvariantViolated when l(prefix) or l(suffix) is nonzero, or any
 * word is shorter than 4 symbols.
 */
[[nodiscard]] StepCertificate derive_next(const Quadruplet& source);

struct ChainCertificate {
    Quadruplet seed;
    std::vector<StepCertificate> steps;
    bool closure_ok = false;

    /// seed followed by every derived quadruplet.
    [[nodiscard]] std::vector<Quadruplet> quadruplets() const;
    [[nodiscard]] bool all_steps_valid() const noexcept;
};

/// The quadruplet a closed chain must end on: (prefix, prefix core suffix, suffix, offset).
[[nodiscard]] Quadruplet closure_target(const Quadruplet& seed);

/// Applies derive_next `steps` times (13 closes the reference chain) and
/// compares the last quadruplet with closure_target(seed) by exact equality.
[[nodiscard]] ChainCertificate verify_chain(const Quadruplet& seed, std::size_t steps = 13);

/// Result of comparing a chain against the reference table.
struct AppendixComparison {
    bool matches = false;
    /// 1-based index of the first disagreeing quadruplet, if any.
    std::optional<std::size_t> first_mismatch;
    std::string detail;
};

[[nodiscard]] AppendixComparison compare_with_appendix(const ChainCertificate& chain);

/// (prefix^n core suffix^m) cut by offset, by explicit concatenation.
[[nodiscard]] BinaryWord instantiate(const Quadruplet& q, std::size_t n, std::size_t m);

/// Total tag steps of the full passes along the chain for the member (n, m):
/// the sum of ceil(|instantiate(q_i, n, m)| / 3) over every step's source.
[[nodiscard]] std::uint64_t chain_step_count(const ChainCertificate& chain, std::size_t n, std::size_t m);

inline constexpr std::uint64_t kDefaultTheoremBudget = 200000;

/// Simulates prefix^n core suffix^m with target prefix^(n+1) core suffix^(m+1).
[[nodiscard]] RunOutcome verify_theorem_direct(std::size_t n, std::size_t m,
                                               std::uint64_t budget = kDefaultTheoremBudget);

} // namespace posttag

#endif // POSTTAG_CHAIN_HPP
