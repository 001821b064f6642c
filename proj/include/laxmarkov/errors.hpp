#pragma once

#include <stdexcept>
#include <string>

namespace laxmarkov {

/// Mesh construction rejected: two nodes closer than the distinctness threshold.
struct DuplicateNodes : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadInterval : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SizeCapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operation undefined for the zero loop element (degree, Casimir values, ...).
struct ZeroElement : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Fractional powers need an identity top coefficient.
struct TopNotIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TruncationTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A finite-difference direction would change the top degree of the base point.
struct DegreeChanged : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The adaptive integrator could not control the error any further.
struct StepSizeUnderflow : std::runtime_error {
    StepSizeUnderflow(const std::string& what, double t)
        : std::runtime_error(what), t_reached(t) {}
    double t_reached;
};

/// Unusable experiment configuration; the CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace laxmarkov
