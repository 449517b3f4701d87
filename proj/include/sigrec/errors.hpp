#ifndef SIGREC_ERRORS_HPP
#define SIGREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigrec {

// Base for all library failures. what() always starts with the error name
// so the CLI can report "error: <Name>: <details>" uniformly.
class Error : public std::runtime_error {
public:
    Error(const std::string& name, const std::string& details)
        : std::runtime_error(name + ": " + details), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define SIGREC_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& details)                     \
            : Error(#Name, details) {}                                \
    }

// prior validation
SIGREC_DEFINE_ERROR(NonNormalized);
SIGREC_DEFINE_ERROR(OverlappingBands);
SIGREC_DEFINE_ERROR(NonPositiveScale);
// quadrature
SIGREC_DEFINE_ERROR(QuadratureNonConvergent);
// sampling densities
SIGREC_DEFINE_ERROR(AlphaTooSmall);
SIGREC_DEFINE_ERROR(DomainError);
// reconstruction
SIGREC_DEFINE_ERROR(DimensionMismatch);
SIGREC_DEFINE_ERROR(SolveFailure);
// spectral lab
SIGREC_DEFINE_ERROR(DegenerateSpectrum);
// signals
SIGREC_DEFINE_ERROR(OutOfRange);
SIGREC_DEFINE_ERROR(NonEquispaced);
// io
SIGREC_DEFINE_ERROR(ParseFailure);
SIGREC_DEFINE_ERROR(IoFailure);

#undef SIGREC_DEFINE_ERROR

} // namespace sigrec

#endif
