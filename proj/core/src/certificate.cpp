#include "posttag/certificate.hpp"

#include "posttag/errors.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <utility>

namespace posttag {

namespace {

struct CheckField {
    const char* key;
    bool StepChecks::*flag;
};

constexpr std::array<CheckField, 6> kCheckFields{{
    {"l_a", &StepChecks::prefix_residue_zero},
    {"l_c", &StepChecks::suffix_residue_zero},
    {"y_eq", &StepChecks::offset_equation},
    {"d_ok", &StepChecks::prefix_derived},
    {"e_ok", &StepChecks::core_derived},
    {"f_ok", &StepChecks::suffix_derived},
}};

void write_quadruplet(std::ostringstream& out, const std::string& prefix, const Quadruplet& q) {
    out << prefix << ".a = " << q.prefix.to_string() << '\n';
    out << prefix << ".b = " << q.core.to_string() << '\n';
    out << prefix << ".c = " << q.suffix.to_string() << '\n';
    out << prefix << ".x = " << q.offset.value() << '\n';
}

// Sequential reader over `key = value` lines; keys are expected in the
// exact order render_certificate writes them.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::string_view expect(std::string_view key) {
        ++line_;
        if (pos_ >= text_.size()) {
            fail("unexpected end of document, expected '" + std::string(key) + "'");
        }
        const std::size_t eol = text_.find('\n', pos_);
        const std::string_view line =
            text_.substr(pos_, eol == std::string_view::npos ? std::string_view::npos : eol - pos_);
        pos_ = eol == std::string_view::npos ? text_.size() : eol + 1;

        const std::size_t sep = line.find(" = ");
        if (sep == std::string_view::npos) {
            fail("expected 'key = value'");
        }
        if (line.substr(0, sep) != key) {
            fail("expected key '" + std::string(key) + "', found '" + std::string(line.substr(0, sep)) + "'");
        }
        return line.substr(sep + 3);
    }

    unsigned expect_number(std::string_view key) {
        const std::string_view value = expect(key);
        unsigned number = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            fail("'" + std::string(key) + "' is not a number");
        }
        return number;
    }

    Mod3Residue expect_residue(std::string_view key) {
        const unsigned v = expect_number(key);
        if (v > 2) {
            fail("'" + std::string(key) + "' must be 0, 1 or 2");
        }
        return Mod3Residue(v);
    }

    BinaryWord expect_word(std::string_view key) {
        try {
            return BinaryWord::parse(expect(key));
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }

    bool expect_flag(std::string_view key, std::string_view yes, std::string_view no) {
        const std::string_view value = expect(key);
        if (value == yes) {
            return true;
        }
        if (value != no) {
            fail("'" + std::string(key) + "' must be " + std::string(yes) + " or " + std::string(no));
        }
        return false;
    }

    [[nodiscard]] bool at_end() const noexcept { return pos_ >= text_.size(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("certificate line " + std::to_string(line_) + ": " + message);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

Quadruplet read_quadruplet(LineReader& in, const std::string& prefix) {
    Quadruplet q;
    q.prefix = in.expect_word(prefix + ".a");
    q.core = in.expect_word(prefix + ".b");
    q.suffix = in.expect_word(prefix + ".c");
    q.offset = in.expect_residue(prefix + ".x");
    return q;
}

// Line number (1-based) of the first difference between two documents.
std::size_t first_differing_line(std::string_view a, std::string_view b) {
    std::size_t line = 1;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return line;
        }
        if (a[i] == '\n') {
            ++line;
        }
    }
    return line;
}

} // namespace

std::string render_certificate(const ChainCertificate& chain) {
    std::ostringstream out;
    out << "version = " << kCertificateVersion << '\n';
    write_quadruplet(out, "seed", chain.seed);
    out << "steps = " << chain.steps.size() << '\n';
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const StepCertificate& step = chain.steps[i];
        const std::string key = "step." + std::to_string(i + 1);
        out << key << ".y = " << step.offset().value() << '\n';
        for (const CheckField& field : kCheckFields) {
            out << key << ".checks." << field.key << " = " << (step.checks.*field.flag ? "pass" : "fail") << '\n';
        }
        write_quadruplet(out, key + ".derived", step.derived);
    }
    out << "closure_ok = " << (chain.closure_ok ? "true" : "false") << '\n';
    return out.str();
}

ChainCertificate parse_certificate(std::string_view text) {
    LineReader in(text);
    const unsigned version = in.expect_number("version");
    if (version != kCertificateVersion) {
        in.fail("unsupported certificate version " + std::to_string(version));
    }
    ChainCertificate chain;
    chain.seed = read_quadruplet(in, "seed");
    const unsigned steps = in.expect_number("steps");
    chain.steps.reserve(steps);
    const Quadruplet* source = &chain.seed;
    for (unsigned i = 0; i < steps; ++i) {
        const std::string key = "step." + std::to_string(i + 1);
        StepCertificate step;
        step.source = *source;
        const Mod3Residue y = in.expect_residue(key + ".y");
        for (const CheckField& field : kCheckFields) {
            step.checks.*field.flag = in.expect_flag(key + ".checks." + field.key, "pass", "fail");
        }
        step.derived = read_quadruplet(in, key + ".derived");
        if (y != step.derived.offset) {
            in.fail(key + ".y disagrees with " + key + ".derived.x");
        }
        chain.steps.push_back(std::move(step));
        source = &chain.steps.back().derived;
    }
    chain.closure_ok = in.expect_flag("closure_ok", "true", "false");
    if (!in.at_end()) {
        in.fail("trailing content after closure_ok");
    }
    return chain;
}

CertificateReview review_certificate(std::string_view text) {
    CertificateReview review;
    review.recomputed = parse_certificate(text);
    ChainCertificate& chain = review.recomputed;
    for (StepCertificate& step : chain.steps) {
        step.checks = check_step(step.source, step.derived);
    }
    const Quadruplet& last = chain.steps.empty() ? chain.seed : chain.steps.back().derived;
    chain.closure_ok = last == closure_target(chain.seed);

    const std::string expected = render_certificate(chain);
    review.text_matches = expected == text;
    review.appendix = compare_with_appendix(chain);
    review.failures = chain_failures(chain, review.appendix);
    if (!review.text_matches) {
        review.failures.push_back("document differs from recomputed certificate at line " +
                                  std::to_string(first_differing_line(text, expected)));
    }
    return review;
}

std::vector<std::string> chain_failures(const ChainCertificate& chain, const AppendixComparison& appendix) {
    std::vector<std::string> failures;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        for (const CheckField& field : kCheckFields) {
            if (!(chain.steps[i].checks.*field.flag)) {
                failures.push_back("step " + std::to_string(i + 1) + ": " + field.key + " failed");
            }
        }
    }
    if (!chain.closure_ok) {
        failures.emplace_back("closure: last quadruplet is not (a, abc, c, x) of the seed");
    }
    if (!appendix.matches) {
        failures.push_back("appendix: " + appendix.detail);
    }
    return failures;
}

} // namespace posttag
