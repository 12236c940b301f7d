#pragma once

#include <stdexcept>
#include <string>

namespace voam {

/* Named error conditions surfaced by the library.  All derive from
 * std::domain_error so callers can catch broadly or precisely. */

struct IncompatibleOffset : std::domain_error {
    explicit IncompatibleOffset(const std::string& m) : std::domain_error(m) {}
};
struct ZeroLeadingTerm : std::domain_error {
    explicit ZeroLeadingTerm(const std::string& m) : std::domain_error(m) {}
};
struct InvalidWeight : std::domain_error {
    explicit InvalidWeight(const std::string& m) : std::domain_error(m) {}
};
struct InhomogeneousInput : std::domain_error {
    explicit InhomogeneousInput(const std::string& m) : std::domain_error(m) {}
};
struct NonPositiveImaginaryPart : std::domain_error {
    explicit NonPositiveImaginaryPart(const std::string& m) : std::domain_error(m) {}
};
struct CutoffTooSmall : std::domain_error {
    explicit CutoffTooSmall(const std::string& m) : std::domain_error(m) {}
};
struct ResonantIndicialRoots : std::domain_error {
    explicit ResonantIndicialRoots(const std::string& m) : std::domain_error(m) {}
};
struct InvalidC : std::domain_error {
    explicit InvalidC(const std::string& m) : std::domain_error(m) {}
};
struct PoleAtC : std::domain_error {
    explicit PoleAtC(const std::string& m) : std::domain_error(m) {}
};
struct NotPositiveDefinite : std::domain_error {
    explicit NotPositiveDefinite(const std::string& m) : std::domain_error(m) {}
};
struct CoincidentPoints : std::domain_error {
    explicit CoincidentPoints(const std::string& m) : std::domain_error(m) {}
};
struct NotCoprime : std::domain_error {
    explicit NotCoprime(const std::string& m) : std::domain_error(m) {}
};
struct RangeError : std::domain_error {
    explicit RangeError(const std::string& m) : std::domain_error(m) {}
};
struct OutsideDomain : std::domain_error {
    explicit OutsideDomain(const std::string& m) : std::domain_error(m) {}
};

}  // namespace voam
