#ifndef HYP_ERROR_HPP
#define HYP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyp {

// Base class for all toolkit errors. `code()` is a stable machine-readable
// tag that the CLI maps into report JSON.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ParseError : Error {
    ParseError(std::size_t position, const std::string& what)
        : Error("parse_error", what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("dimension_mismatch", what) {}
};

struct NotHomogeneous : Error {
    NotHomogeneous(const std::string& what, std::string witness_a, std::string witness_b)
        : Error("not_homogeneous", what),
          offending_a(std::move(witness_a)),
          offending_b(std::move(witness_b)) {}
    std::string offending_a; // two terms of different total degree
    std::string offending_b;
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& what) : Error("zero_polynomial", what) {}
};

struct NotApplicable : Error {
    explicit NotApplicable(const std::string& what) : Error("not_applicable", what) {}
};

// The direction passed as hyperbolic turned out not to be: carries the
// witness line direction whose restriction is not real-rooted.
struct InvalidDirection : Error {
    InvalidDirection(const std::string& what, std::string witness)
        : Error("invalid_direction", what), witness_direction(std::move(witness)) {}
    std::string witness_direction;
};

struct SingularPoint : Error {
    explicit SingularPoint(const std::string& what) : Error("singular_point", what) {}
};

struct RamifiedConfiguration : Error {
    explicit RamifiedConfiguration(const std::string& what)
        : Error("ramified_configuration", what) {}
};

struct UnresolvableSign : Error {
    explicit UnresolvableSign(const std::string& what) : Error("unresolvable_sign", what) {}
};

struct DegenerateSectionFamily : Error {
    explicit DegenerateSectionFamily(const std::string& what)
        : Error("degenerate_section_family", what) {}
};

struct ConstructionFailure : Error {
    explicit ConstructionFailure(const std::string& what)
        : Error("construction_failure", what) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what)
        : Error("internal_inconsistency", what) {}
};

struct CorpusError : Error {
    explicit CorpusError(const std::string& what) : Error("corpus_error", what) {}
};

} // namespace hyp

#endif
