#ifndef HEXFOLD_ERRORS_HPP
#define HEXFOLD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexfold {

/// One failed validation rule: which rule, what happened, which element.
struct Violation {
    std::string rule;
    std::string detail;
    std::string element;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    std::string summary() const;
};

/// Thrown when an operation requires a valid lattice and the input is not one.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Malformed lattice file; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Torus wrapping with zero determinant or a quotient with loops/multi-edges.
class DegenerateWrappingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested a bipartite-only operation on a frustrated (odd-cycle) lattice.
class FrustrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Face size with no defined gauge circulation.
class UnsupportedDefectError : public std::runtime_error {
public:
    UnsupportedDefectError(int face_size, const std::string& what);
    int face_size() const { return face_size_; }

private:
    int face_size_;
};

/// Census and genus that cannot belong to the same closed surface.
class TopologicalInconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problem size exceeds the configured dense-solver limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hexfold

#endif
