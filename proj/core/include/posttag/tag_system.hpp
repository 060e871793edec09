#ifndef POSTTAG_TAG_SYSTEM_HPP
#define POSTTAG_TAG_SYSTEM_HPP

#include "posttag/binary_word.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace posttag {

/// Deletion number and the production of each symbol.
class TagRules {
public:
    /// Throws std::invalid_argument when deletion_number == 0.
    TagRules(unsigned deletion_number, BinaryWord production_zero, BinaryWord production_one);

    /// The system {N=3, 0 -> 00, 1 -> 1101}.
    static const TagRules& post();

    [[nodiscard]] unsigned deletion_number() const noexcept { return deletion_number_; }
    [[nodiscard]] const BinaryWord& production(unsigned symbol) const noexcept {
        return symbol ? production_one_ : production_zero_;
    }

private:
    unsigned deletion_number_;
    BinaryWord production_zero_;
    BinaryWord production_one_;
};

/// Applies one step in place. Throws WordTooShort if the word is shorter
/// than the deletion number (a halted configuration).
void advance(BinaryWord& word, const TagRules& rules = TagRules::post());

/// One step: append the production of the first symbol, delete
/// deletion_number symbols from the front.
[[nodiscard]] BinaryWord step(const BinaryWord& word, const TagRules& rules = TagRules::post());

enum class RunKind { Halted, Cycled, BudgetExhausted, TargetReached };

[[nodiscard]] std::string_view to_string(RunKind kind) noexcept;

struct RunOutcome {
    RunKind kind = RunKind::BudgetExhausted;
    /// Index of the reported configuration in the trajectory. For Cycled this
    /// is the first index whose configuration occurred earlier (mu + period).
    std::uint64_t steps_taken = 0;
    /// Set only for Cycled.
    std::optional<std::uint64_t> cycle_length;
    BinaryWord final;

    friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/**
 * Iterates the tag system from `start`.
 *
 * At each trajectory index the checks run in order: target reached, halted
 * (fewer symbols than the deletion number), budget exhausted. Repeated
 * configurations are found by racing a second copy of the system at double
 * speed against the first (Floyd), so memory stays at two configurations no
 * matter how long the run is. The budget bounds the number of steps of the
 * fast copy; a cycle whose detection would need more steps than the budget
 * reports BudgetExhausted.
 *
 * Throws std::invalid_argument when budget == 0.
 */
[[nodiscard]] RunOutcome run(const BinaryWord& start, const TagRules& rules, std::uint64_t budget,
                             const std::optional<BinaryWord>& target = std::nullopt);

} // namespace posttag

#endif // POSTTAG_TAG_SYSTEM_HPP
