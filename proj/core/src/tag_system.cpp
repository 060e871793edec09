#include "posttag/tag_system.hpp"

#include "posttag/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace posttag {

TagRules::TagRules(unsigned deletion_number, BinaryWord production_zero, BinaryWord production_one)
    : deletion_number_(deletion_number),
      production_zero_(std::move(production_zero)),
      production_one_(std::move(production_one)) {
    if (deletion_number_ == 0) {
        throw std::invalid_argument("deletion number must be positive");
    }
}

const TagRules& TagRules::post() {
    static const TagRules rules(3, BinaryWord::parse("00"), BinaryWord::parse("1101"));
    return rules;
}

void advance(BinaryWord& word, const TagRules& rules) {
    if (word.size() < rules.deletion_number()) {
        throw WordTooShort("tag step needs at least " + std::to_string(rules.deletion_number()) +
                           " symbols, word has " + std::to_string(word.size()));
    }
    word.append(rules.production(word[0]));
    word.drop_front(rules.deletion_number());
}

BinaryWord step(const BinaryWord& word, const TagRules& rules) {
    BinaryWord next = word;
    advance(next, rules);
    return next;
}

std::string_view to_string(RunKind kind) noexcept {
    switch (kind) {
    case RunKind::Halted:
        return "Halted";
    case RunKind::Cycled:
        return "Cycled";
    case RunKind::BudgetExhausted:
        return "BudgetExhausted";
    case RunKind::TargetReached:
        return "TargetReached";
    }
    return "Unknown";
}

RunOutcome run(const BinaryWord& start, const TagRules& rules, std::uint64_t budget,
               const std::optional<BinaryWord>& target) {
    if (budget == 0) {
        throw std::invalid_argument("run budget must be at least 1");
    }

    auto classify = [&](const BinaryWord& word, std::uint64_t index) -> std::optional<RunOutcome> {
        if (target && word == *target) {
            return RunOutcome{RunKind::TargetReached, index, std::nullopt, word};
        }
        if (word.size() < rules.deletion_number()) {
            return RunOutcome{RunKind::Halted, index, std::nullopt, word};
        }
        if (index >= budget) {
            return RunOutcome{RunKind::BudgetExhausted, index, std::nullopt, word};
        }
        return std::nullopt;
    };

    // The fast copy visits every trajectory index in order, so it is the one
    // that detects targets, halts and the budget.
    BinaryWord fast = start;
    BinaryWord slow = start;
    std::uint64_t index = 0;
    if (auto outcome = classify(fast, index)) {
        return *std::move(outcome);
    }
    for (;;) {
        for (int i = 0; i < 2; ++i) {
            advance(fast, rules);
            ++index;
            if (auto outcome = classify(fast, index)) {
                return *std::move(outcome);
            }
        }
        advance(slow, rules);
        if (slow == fast) {
            break;
        }
    }

    // slow sits at an index that is a multiple of the period; walking a fresh
    // copy from the start in lockstep meets it at the first cycle index mu.
    BinaryWord head = start;
    std::uint64_t mu = 0;
    while (!(head == slow)) {
        advance(head, rules);
        advance(slow, rules);
        ++mu;
    }
    BinaryWord probe = head;
    std::uint64_t period = 0;
    do {
        advance(probe, rules);
        ++period;
    } while (!(probe == head));

    return RunOutcome{RunKind::Cycled, mu + period, period, std::move(head)};
}

} // namespace posttag
