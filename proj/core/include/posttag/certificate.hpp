#ifndef POSTTAG_CERTIFICATE_HPP
#define POSTTAG_CERTIFICATE_HPP

#include "posttag/chain.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace posttag {

inline constexpr int kCertificateVersion = 1;

/**
 * Line-oriented `key = value` rendering of a chain certificate:
 *
 *     version = 1
 *     seed.a = <word>          (also seed.b, seed.c, seed.x)
 *     steps = 13
 *     step.<i>.y = <0|1|2>
 *     step.<i>.checks.<l_a|l_c|y_eq|d_ok|e_ok|f_ok> = <pass|fail>
 *     step.<i>.derived.a = <word>   (also .b, .c, .x)
 *     closure_ok = <true|false>
 *
 * Words are written over {0,1}; every line ends with '\n'. The output is a
 * pure function of the certificate.
 */
[[nodiscard]] std::string render_certificate(const ChainCertificate& chain);

/// Reads a document back, keeping the claimed check flags and closure flag
/// as written. Throws ParseError on malformed input.
[[nodiscard]] ChainCertificate parse_certificate(std::string_view text);

/// Independent re-validation of a certificate document.
struct CertificateReview {
    /// Claimed quadruplets with every check and the closure recomputed.
    ChainCertificate recomputed;
    /// The document is byte-identical to render_certificate(recomputed).
    bool text_matches = false;
    AppendixComparison appendix;
    /// Human-readable names of every failed condition.
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

[[nodiscard]] CertificateReview review_certificate(std::string_view text);

/// Failing conditions of a freshly derived chain: invalid steps, open
/// closure, disagreement with the reference table.
[[nodiscard]] std::vector<std::string> chain_failures(const ChainCertificate& chain,
                                                      const AppendixComparison& appendix);

} // namespace posttag

#endif // POSTTAG_CERTIFICATE_HPP
