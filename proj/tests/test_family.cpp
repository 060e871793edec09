#include "oracles.hpp"

#include "posttag/certificate.hpp"
#include "posttag/chain.hpp"
#include "posttag/constants.hpp"
#include "posttag/errors.hpp"
#include "posttag/mod3.hpp"
#include "posttag/tokens.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace posttag;

namespace {

BinaryWord T(const std::string& tokens) { return decode_tokens(TokenWord::parse(tokens)); }

const ChainCertificate& reference_chain() {
    static const ChainCertificate chain = verify_chain(growth_seed());
    return chain;
}

std::vector<BinaryWord> fixture_cores() {
    std::ifstream in(POSTTAG_TEST_DATA_DIR "/appendix_cores.txt");
    REQUIRE(in);
    std::vector<BinaryWord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::size_t index = 0;
        std::string tokens;
        fields >> index >> tokens;
        REQUIRE(index == out.size() + 1);
        out.push_back(T(tokens));
    }
    return out;
}

} // namespace

TEST_CASE("seed quadruplet") {
    const Quadruplet q = growth_seed();
    CHECK(q.prefix == growth_prefix());
    CHECK(q.core == growth_core());
    CHECK(q.suffix == growth_suffix());
    CHECK(q.offset.value() == 0);
}

TEST_CASE("first derivation") {
    const StepCertificate s = derive_next(growth_seed());
    CHECK(s.valid());
    CHECK(s.derived.offset.value() == 1);
    CHECK(s.derived.prefix == sample_expand(growth_prefix()));
    CHECK(s.derived.core == sample_expand(growth_core()));
    // g length law on the derived core
    std::size_t expected = 0;
    const std::string b = growth_core().to_string();
    for (std::size_t p = 0; p < b.size(); p += 3) {
        expected += b[p] == '1' ? 4 : 2;
    }
    CHECK(s.derived.core.size() == expected);
}

TEST_CASE("derivation preconditions") {
    Quadruplet q = growth_seed();
    q.prefix = BinaryWord::parse("0000");
    CHECK_THROWS_AS((void)derive_next(q), InvariantViolated);
    q = growth_seed();
    q.suffix = BinaryWord::parse("000");
    CHECK_THROWS_AS((void)derive_next(q), InvariantViolated);
}

TEST_CASE("check_step rejects a wrong claim") {
    const Quadruplet q = growth_seed();
    Quadruplet claim = derive_next(q).derived;
    CHECK(check_step(q, claim).all());
    claim.offset = claim.offset + Mod3Residue(1);
    const StepChecks bad = check_step(q, claim);
    CHECK_FALSE(bad.offset_equation);
    CHECK(bad.prefix_derived);
}

TEST_CASE("the chain closes") {
    const ChainCertificate& chain = reference_chain();
    REQUIRE(chain.steps.size() == 13);
    CHECK(chain.all_steps_valid());
    CHECK(chain.closure_ok);
    const auto qs = chain.quadruplets();
    REQUIRE(qs.size() == kChainLength);
    CHECK(qs.back() == closure_target(chain.seed));
    CHECK(closure_target(chain.seed).core == growth_prefix() + growth_core() + growth_suffix());
}

TEST_CASE("chain offsets") {
    const std::vector<unsigned> expected{0, 1, 0, 2, 1, 0, 1, 0, 1, 2, 0, 0, 1, 0};
    const auto qs = reference_chain().quadruplets();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        CHECK(qs[i].offset.value() == expected[i]);
    }
}

TEST_CASE("chain matches the reference vectors") {
    const ChainCertificate& chain = reference_chain();
    const AppendixComparison cmp = compare_with_appendix(chain);
    CHECK(cmp.matches);
    CHECK_FALSE(cmp.first_mismatch.has_value());
    const auto table = appendix_vectors();
    const auto qs = chain.quadruplets();
    REQUIRE(table.size() == qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        CHECK(qs[i].prefix == table[i].prefix);
        CHECK(qs[i].suffix == table[i].suffix);
        CHECK(qs[i].offset == table[i].offset);
    }
}

TEST_CASE("reference vector entries") {
    const auto table = appendix_vectors();
    CHECK(table.front().prefix == growth_prefix());
    CHECK(table.front().suffix == growth_suffix());
    CHECK(table.back().prefix == growth_prefix());
    CHECK(table.back().suffix == growth_suffix());
    CHECK(table.back().offset.value() == 0);
    // tenth prefix is ZZOOOZ; the 00.1101.1101.1101.00.00 prefix is the eleventh
    CHECK(table[9].prefix == T("ZZOOOZ"));
    CHECK(table[9].offset.value() == 2);
    CHECK(table[10].prefix == T("ZOOOZZ"));
}

TEST_CASE("derived cores match the token fixture") {
    const auto cores = fixture_cores();
    const auto qs = reference_chain().quadruplets();
    REQUIRE(cores.size() == qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
        CAPTURE(i);
        CHECK(qs[i].core == cores[i]);
    }
}

TEST_CASE("chain steps are sound for small powers") {
    for (const StepCertificate& s : reference_chain().steps) {
        for (std::size_t n = 0; n <= 3; ++n) {
            for (std::size_t m = 0; m <= 3; ++m) {
                const BinaryWord word = instantiate(s.source, n, m);
                REQUIRE(full_pass_simulated(word) == instantiate(s.derived, n, m));
            }
        }
    }
}

TEST_CASE("instantiate") {
    const Quadruplet q = growth_seed();
    CHECK(instantiate(q, 0, 0) == growth_core());
    CHECK(instantiate(q, 1, 1).size() == 2474);
    Quadruplet shifted = q;
    shifted.offset = Mod3Residue(2);
    CHECK(instantiate(shifted, 0, 0) == growth_core().suffix(2));
}

TEST_CASE("direct growth and step accounting") {
    const ChainCertificate& chain = reference_chain();
    CHECK(chain_step_count(chain, 0, 0) == kCoreGrowthSteps);
    CHECK(chain_step_count(chain, 0, 0) <= kChainStepBound);
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t m = 0; m <= 5; ++m) {
            const RunOutcome r = verify_theorem_direct(n, m);
            CHECK(r.kind == RunKind::TargetReached);
            CHECK(r.steps_taken == chain_step_count(chain, n, m));
        }
    }
    CHECK(verify_theorem_direct(0, 0, 20000).steps_taken == 10444);
    CHECK(verify_theorem_direct(1, 0, 1).kind == RunKind::BudgetExhausted);
}

TEST_CASE("perturbed seeds do not certify") {
    for (int x : {1, 2}) {
        Quadruplet q = growth_seed();
        q.offset = Mod3Residue(x);
        bool certified = false;
        try {
            const ChainCertificate c = verify_chain(q);
            certified = c.all_steps_valid() && c.closure_ok;
        } catch (const InvariantViolated&) {
        }
        CHECK_FALSE(certified);
    }
    const std::string a = growth_prefix().to_string();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::string flipped = a;
        flipped[i] = flipped[i] == '0' ? '1' : '0';
        Quadruplet q = growth_seed();
        q.prefix = BinaryWord::parse(flipped);
        bool certified = false;
        try {
            const ChainCertificate c = verify_chain(q);
            certified = c.all_steps_valid() && c.closure_ok;
        } catch (const InvariantViolated&) {
        }
        CHECK_FALSE(certified);
    }
}

TEST_CASE("empty chain does not close") {
    const ChainCertificate c = verify_chain(growth_seed(), 0);
    CHECK(c.steps.empty());
    CHECK_FALSE(c.closure_ok);
}

TEST_CASE("certificate round trip") {
    const std::string text = render_certificate(reference_chain());
    const ChainCertificate parsed = parse_certificate(text);
    CHECK(render_certificate(parsed) == text);
    const CertificateReview review = review_certificate(text);
    CHECK(review.ok());
    CHECK(review.text_matches);
    CHECK(review.appendix.matches);
}

TEST_CASE("tampered certificates are rejected") {
    const std::string text = render_certificate(reference_chain());
    auto replace = [&](const std::string& from, const std::string& to) {
        std::string copy = text;
        const auto pos = copy.find(from);
        REQUIRE(pos != std::string::npos);
        copy.replace(pos, from.size(), to);
        return copy;
    };
    // a document is rejected either as malformed or by recomputation
    auto rejected = [](const std::string& doc) {
        try {
            return !review_certificate(doc).ok();
        } catch (const ParseError&) {
            return true;
        }
    };
    CHECK(rejected(replace("step.2.y = 0", "step.2.y = 1")));
    CHECK(rejected(replace("step.2.checks.d_ok = pass", "step.2.checks.d_ok = fail")));
    CHECK(rejected(replace("closure_ok = true", "closure_ok = false")));
    CHECK(rejected(replace("seed.x = 0", "seed.x = 1")));

    // flip one symbol of a derived core
    const std::string key = "step.5.derived.b = ";
    const auto at = text.find(key) + key.size() + 10;
    std::string flipped = text;
    flipped[at] = flipped[at] == '0' ? '1' : '0';
    CHECK(rejected(flipped));

    CHECK_THROWS_AS((void)parse_certificate("version = 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_certificate(replace("steps = 13", "steps = x")), ParseError);
    CHECK_THROWS_AS((void)parse_certificate(text.substr(0, text.size() / 2)), ParseError);
}
